from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from cyclotomo.crossratio import cross_ratio
from cyclotomo.dirsearch import angle_order
from cyclotomo.exactnum import FieldTag
from cyclotomo.geometry import Direction, PointSet, gaussian, is_convex_subset, line_key
from cyclotomo.tomo import MAX_PATCH, uniqueness_oracle, verify_u_polygon, xray, xrays_equal

H, V, D, A = (gaussian(1, 0), gaussian(0, 1), gaussian(1, 1), gaussian(1, -1))


def grid(k):
    return [gaussian(x, y) for x in range(k) for y in range(k)]


def test_xray_counts():
    t = xray(grid(3), Direction(H.z))
    assert sorted(t.rows.values()) == [3, 3, 3]
    assert t.total() == 9


def test_u_polygon_square():
    sq = [gaussian(0, 0), gaussian(1, 0), gaussian(1, 1), gaussian(0, 1)]
    assert verify_u_polygon(sq, [H, V])
    # the line through (0, 0) along (1, -1) meets no other vertex
    assert not verify_u_polygon(sq, [H, V, A])
    with pytest.raises(ValueError):
        verify_u_polygon([gaussian(0, 0), gaussian(1, 0), gaussian(2, 0)], [H])


def test_two_by_two_collision():
    rep = uniqueness_oracle(grid(2), [H])
    assert rep.found
    f, g = rep.pair
    assert xrays_equal(f, g, [H]) and len(f) == len(g)


def test_three_by_three_determined(cset_of):
    slopes = angle_order([0, 1, 3, -2])
    lam = cross_ratio(*slopes)
    assert lam not in cset_of(4)
    dirs = [gaussian(1, 0), gaussian(1, 1), gaussian(1, 3), gaussian(1, -2)]
    rep = uniqueness_oracle(grid(3), dirs, max_subset_size=9)
    assert not rep.found and rep.exhaustive


def test_octagon_patch_collisions_are_verified():
    patch = [gaussian(x, y) for x in range(-2, 3) for y in range(-2, 3) if abs(x) + abs(y) < 4]
    assert len(patch) == 21
    rep = uniqueness_oracle(patch, [H, V, D, A], max_subset_size=21, collect_all=True)
    assert rep.found and len(rep.collisions) == 20
    for f, g in rep.collisions:
        assert len(f) == len(g)
        assert xrays_equal(f, g, [H, V, D, A])
        assert is_convex_subset(f, patch) and is_convex_subset(g, patch)


def test_patch_guard():
    with pytest.raises(ValueError):
        uniqueness_oracle([gaussian(x, y) for x in range(7) for y in range(7)], [H])


coords = st.tuples(st.integers(-2, 2), st.integers(-2, 2))
dir_pool = [(1, 0), (0, 1), (1, 1), (1, -1), (1, 2), (2, 1)]


@settings(max_examples=150, deadline=None)
@given(st.lists(coords, min_size=1, max_size=6), coords, st.sampled_from(dir_pool))
def test_xray_translation_equivariance(raw, t, d):
    pts = [gaussian(*p) for p in raw]
    tz = gaussian(*t)
    d = Direction(gaussian(*d).z)
    shift = line_key(tz, d)
    before = xray(pts, d).rows
    after = xray([p + tz for p in pts], d).rows
    assert after == {k + shift: c for k, c in before.items()}


@settings(max_examples=40, deadline=None)
@given(
    st.lists(coords, min_size=2, max_size=8, unique=True),
    st.lists(st.sampled_from(dir_pool), min_size=1, max_size=3, unique=True),
)
def test_oracle_matches_power_set(raw, ds):
    pts = [gaussian(*p) for p in raw]
    dirs = [Direction(gaussian(*d).z) for d in ds]
    seen = {}
    brute = False
    for k in range(1, len(pts) + 1):
        for sub in combinations(pts, k):
            if not is_convex_subset(list(sub), pts):
                continue
            key = tuple(tuple(sorted(xray(sub, d).rows.items(), key=lambda kv: float(kv[0]))) for d in dirs)
            if key in seen:
                brute = True
            seen[key] = sub
    rep = uniqueness_oracle(pts, dirs, max_subset_size=len(pts))
    assert rep.found == brute
    assert rep.exhaustive


def test_report_json():
    rep = uniqueness_oracle(grid(2), [H])
    doc = rep.to_json()
    assert doc["found"] and len(doc["pair"]) == 2
    assert MAX_PATCH == 40
    assert isinstance(PointSet(FieldTag(4), grid(2)), PointSet)
