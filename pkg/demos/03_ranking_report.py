# Ranking the bundled 60-network ILSVRC 2012 set and rendering charts.
#
# Run:  python demos/03_ranking_report.py   (SVGs land in demos/out/)

from pathlib import Path

from netscore.registry import load_seed
from netscore.report import dynamic_range, emit_bar_chart, emit_table, emit_text, rank

registry = load_seed()
print(f"{len(registry)} networks")

for kind in ("top1", "density", "netscore"):
    ranking = rank(registry, kind)
    dr = dynamic_range(ranking)
    spread = f"ratio {dr.ratio:.1f}x" if dr.ratio is not None else f"span {dr.span:.1f} dB"
    print(f"\n{kind}: max {dr.max:.2f}, min {dr.min:.2f}, {spread}")
    print(emit_text(ranking.top(5)), end="")

# Where the SqueezeNet family lands under each metric.
netscore_rank = rank(registry, "netscore")
density_rank = rank(registry, "density")
for name in ("SqueezeNet", "SqueezeNetv1.1"):
    print(f"{name}: density rank {density_rank.rank_of(name)}, netscore rank {netscore_rank.rank_of(name)}")

print()
print(emit_table(netscore_rank.top(3), "markdown"))

out = Path(__file__).parent / "out"
out.mkdir(exist_ok=True)
for kind in ("top1", "density", "netscore"):
    path = out / f"{kind}.svg"
    path.write_text(emit_bar_chart(rank(registry, kind), width=900), encoding="utf-8")
    print("wrote", path)
