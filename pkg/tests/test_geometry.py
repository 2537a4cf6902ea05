from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from cyclotomo.crossratio import INF
from cyclotomo.exactnum import CycNum
from cyclotomo.geometry import (
    Direction,
    Point,
    PointSet,
    convex_hull,
    gaussian,
    in_hull,
    is_convex_subset,
    line_key,
    orientation,
    slope_of,
)
from cyclotomo.exactnum import FieldTag


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _in_triangle(p, a, b, c):
    d1, d2, d3 = _cross(a, b, p), _cross(b, c, p), _cross(c, a, p)
    neg = d1 < 0 or d2 < 0 or d3 < 0
    pos = d1 > 0 or d2 > 0 or d3 > 0
    return not (neg and pos)


def _on_segment(p, a, b):
    return (
        _cross(a, b, p) == 0
        and min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
        and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])
    )


def _brute_extreme(pts):
    """p is extreme iff it is not in a closed triangle or segment of the other points."""
    out = set()
    for p in pts:
        others = [q for q in pts if q != p]
        inside = any(_on_segment(p, a, b) for a, b in combinations(others, 2))
        if not inside and len(others) >= 3:
            inside = any(
                _cross(a, b, c) != 0 and _in_triangle(p, a, b, c) for a, b, c in combinations(others, 3)
            )
        if not inside:
            out.add(p)
    return out


coords = st.tuples(st.integers(-3, 3), st.integers(-3, 3))


@settings(max_examples=150, deadline=None)
@given(st.lists(coords, min_size=1, max_size=12, unique=True))
def test_hull_matches_brute_force(raw):
    pts = [gaussian(x, y) for x, y in raw]
    hull = convex_hull(pts)
    got = {(int(p.re.to_fraction()), int(p.im.to_fraction())) for p in hull}
    expected = _brute_extreme(raw)
    if len(raw) >= 2 and all(_cross(raw[0], raw[1], r) == 0 for r in raw):
        # collinear input: hull is the two endpoints
        assert len(hull) == min(2, len(raw))
        assert got == expected
        return
    assert got == expected
    if len(hull) >= 3:
        k = len(hull)
        assert all(orientation(hull[i], hull[(i + 1) % k], hull[(i + 2) % k]) == 1 for i in range(k))


@settings(max_examples=100, deadline=None)
@given(st.lists(coords, min_size=3, max_size=10, unique=True), coords)
def test_in_hull_matches_brute_force(raw, q):
    pts = [gaussian(x, y) for x, y in raw]
    hull = convex_hull(pts)
    inside = any(_in_triangle(q, a, b, c) for a, b, c in combinations(raw, 3) if _cross(a, b, c) != 0) or any(
        _on_segment(q, a, b) for a, b in combinations(raw, 2)
    ) or q in raw
    assert in_hull(hull, gaussian(*q)) == inside


def test_orientation_signs():
    a, b = gaussian(0, 0), gaussian(1, 0)
    assert orientation(a, b, gaussian(0, 1)) == 1
    assert orientation(a, b, gaussian(0, -1)) == -1
    assert orientation(a, b, gaussian(5, 0)) == 0


def test_irrational_points():
    z8 = CycNum.zeta(8)
    pts = [Point(z8**k) for k in range(8)] + [Point(CycNum.rational(8, 0))]
    hull = convex_hull(pts)
    assert len(hull) == 8
    assert Point(CycNum.rational(8, 0)) not in hull


def test_direction_equality_is_parallelism():
    assert Direction(gaussian(1, 1).z) == Direction(gaussian(-2, -2).z)
    assert Direction(gaussian(0, 1).z).slope is INF
    assert slope_of(gaussian(2, 1).z) == Fraction(1, 2)
    with pytest.raises(ValueError):
        Direction(CycNum.rational(4, 0))


def test_line_key_constant_on_lines():
    d = Direction(gaussian(1, 2).z)
    assert line_key(gaussian(0, 0), d) == line_key(gaussian(1, 2), d) == line_key(gaussian(-3, -6), d)
    assert line_key(gaussian(1, 0), d) != line_key(gaussian(0, 0), d)


def test_convex_subset():
    grid = [gaussian(x, y) for x in range(3) for y in range(3)]
    assert is_convex_subset([gaussian(0, 0), gaussian(1, 0), gaussian(0, 1)], grid)
    assert not is_convex_subset([gaussian(0, 0), gaussian(2, 2)], grid)
    with pytest.raises(ValueError):
        is_convex_subset([gaussian(5, 5)], grid)


def test_pointset_dedupes_and_translates():
    ps = PointSet(FieldTag(4), [gaussian(0, 0), gaussian(0, 0), gaussian(1, 0)])
    assert len(ps) == 2
    moved = ps.translate(gaussian(1, 1).z)
    assert gaussian(2, 1) in moved
