"""A regular N-gon with a translate glued across each edge.

The convex hull of the union is a U-polygon for the N directions of the
regular fan; alternating colours give two convex sets with equal X-rays.
"""

# %% Build and verify
from pathlib import Path

from cyclotomo import FieldTag, build_regular_upolygon
from cyclotomo.cli import render_svg

out = Path(__file__).with_name("out")
out.mkdir(exist_ok=True)
for n in (3, 4, 5, 8, 12):
    inst = build_regular_upolygon(FieldTag(n))
    print(f"n={n:2d}: {len(inst.hull)} vertices, {inst.verify()}, colouring by {inst.coloring_strategy}")
    (out / f"upolygon_{n}.svg").write_text(render_svg(inst))

print("SVG files written to", out)
