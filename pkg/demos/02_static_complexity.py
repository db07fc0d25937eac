# Counting parameters and MACs from an architecture description.
#
# Run:  python demos/02_static_complexity.py

import json

from netscore.archspec import (
    analyze,
    bundled_names,
    count_macs,
    infer_shapes,
    load_bundled,
    parse_arch,
    simulate_macs,
)

for name in bundled_names():
    report = analyze(load_bundled(name))
    print(f"{report.name:24s} {report.total_params / 1e6:8.3f} M-Params  {report.total_macs / 1e9:7.3f} G-MACs")

# A residual block, written by hand.  Declaration order does not matter;
# shapes are inferred in topological order.
doc = {
    "format": 1,
    "name": "residual block",
    "input": {"height": 16, "width": 16, "channels": 8},
    "layers": [
        {"id": "sum", "type": "add", "inputs": ["input", "bn2"]},
        {"id": "conv1", "type": "conv2d", "inputs": ["input"], "out_channels": 8,
         "kernel": [3, 3], "padding": [1, 1], "bias": False},
        {"id": "bn1", "type": "batchnorm", "inputs": ["conv1"]},
        {"id": "relu1", "type": "activation", "inputs": ["bn1"], "function": "relu"},
        {"id": "conv2", "type": "conv2d", "inputs": ["relu1"], "out_channels": 8,
         "kernel": [3, 3], "padding": [1, 1], "groups": 8, "bias": False},
        {"id": "bn2", "type": "batchnorm", "inputs": ["conv2"]},
    ],
}
graph = infer_shapes(parse_arch(json.dumps(doc)))
for row in analyze(graph).per_layer:
    print(f"  {row.id:6s} {row.kind:10s} {str(row.output_shape):9s} params={row.params:5d} macs={row.macs}")

# The closed-form MAC count agrees with a brute-force walk over every
# output element and kernel tap.
print("formula:", count_macs(graph).total, "simulated:", simulate_macs(graph))
