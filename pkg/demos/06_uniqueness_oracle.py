"""Brute-force search for convex sets with equal X-rays."""

# %% Four directions on the square lattice that admit a U-polygon
from fractions import Fraction

from cyclotomo import FieldTag, PatchSpec, build_regular_upolygon, embed_instance, generate_patch, uniqueness_oracle
from cyclotomo.geometry import gaussian

inst = build_regular_upolygon(FieldTag(4))
emb, _ = embed_instance(inst, generate_patch(PatchSpec(FieldTag(4), Fraction(3))))
region = emb.hull + list(emb.interior_lattice)
rep = uniqueness_oracle(region, emb.directions, max_subset_size=len(region), collect_all=True)
print(f"{len(region)} points: collision found={rep.found}, {len(rep.collisions)} colliding pairs")
f, g = rep.pair
print("smallest pair has", len(f), "points each")

# %% Four directions whose cross ratio is not forbidden: nothing collides
grid = [gaussian(x, y) for x in range(3) for y in range(3)]
dirs = [gaussian(1, 0), gaussian(1, 1), gaussian(1, 3), gaussian(1, -2)]
rep = uniqueness_oracle(grid, dirs, max_subset_size=9)
print("3x3 grid, slopes 0, 1, 3, -2: found =", rep.found, "exhaustive =", rep.exhaustive)
print(rep.statistics)
