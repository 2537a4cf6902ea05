import random

import pytest
from fractions import Fraction

from cyclotomo.construct import (
    build_regular_upolygon,
    color_vertices,
    demo_3d_upolyhedron,
    embed_homothety,
    embed_instance,
    great_rhombicosidodecahedron,
    icosahedral_axes,
)
from cyclotomo.exactnum import FieldTag
from cyclotomo.geometry import gaussian
from cyclotomo.modelset import PatchSpec, WindowSpec, generate_patch
from cyclotomo.tomo import verify_u_polygon, xrays_equal


@pytest.mark.parametrize("n", [3, 4, 5, 8, 12])
def test_regular_upolygon(n):
    inst = build_regular_upolygon(FieldTag(n))
    N = inst.tag.N
    assert len(inst.hull) == 2 * N
    assert len(inst.directions) == N == len(set(inst.directions))
    assert verify_u_polygon(inst.hull, inst.directions)
    assert xrays_equal(inst.white, inst.grey, inst.directions)
    assert len(inst.white) == len(inst.grey) == N
    assert inst.coloring_strategy == "alternation"


def test_matching_fallback():
    inst = build_regular_upolygon(FieldTag(8))
    verts = list(inst.hull)
    random.Random(3).shuffle(verts)
    white, grey, how = color_vertices(verts, inst.directions)
    assert how == "matching"
    assert xrays_equal(white, grey, inst.directions)


def test_coloring_rejects_odd_and_non_u():
    tri = [gaussian(0, 0), gaussian(1, 0), gaussian(0, 1)]
    with pytest.raises(ValueError):
        color_vertices(tri, [gaussian(1, 0)])
    sq = [gaussian(0, 0), gaussian(1, 0), gaussian(1, 1), gaussian(0, 1)]
    with pytest.raises(ValueError):
        color_vertices(sq, [gaussian(1, 2)])


def test_embed_square_lattice():
    inst = build_regular_upolygon(FieldTag(4))
    patch = generate_patch(PatchSpec(FieldTag(4), Fraction(3)))
    emb, h = embed_instance(inst, patch)
    pts = set(patch.points.points)
    assert all(p in pts for p in emb.hull)
    assert len(emb.hull) + len(emb.interior_lattice) == 21
    assert verify_u_polygon(emb.hull, emb.directions)
    assert xrays_equal(emb.white, emb.grey, emb.directions)


@pytest.mark.parametrize("n", [5, 8, 12])
def test_embed_model_sets(n):
    inst = build_regular_upolygon(FieldTag(n))
    patch = generate_patch(PatchSpec(FieldTag(n), Fraction(5), WindowSpec.disc(4)))
    h = embed_homothety(inst.hull, patch)
    assert h is not None
    image = [h(p) for p in inst.hull]
    assert set(image) <= set(patch.points.points)
    assert verify_u_polygon(image, inst.directions)


def test_embed_fails_cleanly():
    inst = build_regular_upolygon(FieldTag(8))
    patch = generate_patch(PatchSpec(FieldTag(8), Fraction(2), WindowSpec.disc(1)))
    assert embed_homothety(inst.hull, patch, attempts=3) is None


def test_polytope_and_axes():
    verts, norms = great_rhombicosidodecahedron()
    assert len(verts) == 120
    assert norms.max() - norms.min() < 1e-9
    axes = icosahedral_axes()
    assert [len(axes[k]) for k in ("five", "three", "two")] == [6, 10, 15]


def test_demo3d():
    rep = demo_3d_upolyhedron()
    assert rep.identified
    assert rep.vertex_count == 120
    assert len(rep.white) == len(rep.grey) == 60
    assert len(rep.directions) == 6
    assert rep.direction_set.startswith("two-fold")
    with pytest.raises(ValueError):
        demo_3d_upolyhedron(0)
