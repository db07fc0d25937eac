# Scoring a network: NetScore vs information density vs top-1.
#
# Run:  python demos/01_scoring.py

import math

from netscore import MetricConfig, NetworkMetrics, information_density, netscore, normalize_units

# MobileNetv1 (1.0-224): 70.6% top-1, 4.24M parameters, 569M MACs per image.
mobilenet = NetworkMetrics(accuracy_percent=70.6, params=4_240_000, macs=569_000_000)
squeezenet = NetworkMetrics(accuracy_percent=57.5, params=1_250_000, macs=860_000_000)

print("normalized units (%, M-Params, G-MACs):", normalize_units(mobilenet))

for name, m in [("MobileNetv1", mobilenet), ("SqueezeNet", squeezenet)]:
    print(f"{name:12s} netscore={netscore(m).value:6.2f} dB   "
          f"density={information_density(m).value:6.2f} %/M-Params")

# SqueezeNet wins on density (fewer parameters) but loses on NetScore
# because it spends more MACs per inference.

# Coefficients are adjustable.  alpha=1, beta=1, gamma=0 orders networks
# exactly like information density.
cfg = MetricConfig(alpha=1, beta=1, gamma=0)
print("alpha=1 beta=1 gamma=0:", round(netscore(mobilenet, cfg).value, 2),
      "=", round(20 * math.log10(information_density(mobilenet).value), 2))

# Scale laws: doubling MACs costs 20 * gamma * log10(2) dB.
doubled = NetworkMetrics(70.6, 4_240_000, 2 * 569_000_000)
print("MAC doubling shift:", round(netscore(doubled).value - netscore(mobilenet).value, 4),
      "expected", round(-20 * 0.5 * math.log10(2), 4))

# Fractions are rejected rather than silently rescaled.
try:
    NetworkMetrics(0.706, 4_240_000, 569_000_000)
except ValueError as exc:
    print("rejected:", exc)
