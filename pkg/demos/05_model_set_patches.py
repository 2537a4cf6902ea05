"""Cut-and-project patches and embedding a U-polygon by a homothety."""

# %% Ammann-Beenker type patch (n = 8, octagonal window)
from fractions import Fraction

from cyclotomo import FieldTag, PatchSpec, WindowSpec, build_regular_upolygon, embed_instance, generate_patch

spec = PatchSpec(FieldTag(8), Fraction(6), WindowSpec.ngon(8, 1, Fraction(1, 16)))
patch = generate_patch(spec)
print("octagonal patch:", len(patch.coeffs), "points; boundary cases decided exactly:", patch.boundary_hits)

# %% Penrose type patch (n = 5) with a disc window
patch5 = generate_patch(PatchSpec(FieldTag(5), Fraction(6), WindowSpec.disc(4)))
print("pentagonal patch:", len(patch5.coeffs), "points")

# %% Place the n = 5 U-polygon inside it
inst = build_regular_upolygon(FieldTag(5))
emb, h = embed_instance(inst, patch5)
print("scale", float(h.lam), "translation", complex(h.t))
print("embedded copy still verifies:", emb.verify())
print("patch points inside the copy:", len(emb.interior_lattice))
