import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cyclotomo.crossratio import (
    INF,
    QuadrupleIndex,
    cross_ratio,
    cross_ratio_orbit,
    pretty,
    quadruple_float,
    quadruple_value,
)
from cyclotomo.exactnum import CycNum

from conftest import q3

# the 29 forbidden cross ratios for n = 12, increasing, as a + b*sqrt(3)
GOLDEN_12 = [
    q3(8, -4),
    q3(Fraction(1, 2), Fraction(1, 3)),
    q3(Fraction(-3, 2), Fraction(3, 2)),
    q3(0, Fraction(2, 3)),
    q3(Fraction(3, 4), Fraction(1, 4)),
    q3(Fraction(2, 3), Fraction(1, 3)),
    q3(3, -1),
    q3(Fraction(4, 3)),
    q3(Fraction(1, 2), Fraction(1, 2)),
    q3(-2, 2),
    q3(Fraction(3, 2)),
    q3(1, Fraction(1, 3)),
    q3(0, 1),
    q3(1, Fraction(1, 2)),
    q3(2),
    q3(1, Fraction(2, 3)),
    q3(Fraction(3, 2), Fraction(1, 2)),
    q3(1, 1),
    q3(3),
    q3(2, Fraction(2, 3)),
    q3(2, 1),
    q3(4),
    q3(3, 1),
    q3(Fraction(5, 2), Fraction(3, 2)),
    q3(3, 2),
    q3(4, 2),
    q3(6, 3),
    q3(7, 4),
    q3(8, 4),
]

# sizes from an independent 40-digit sine-quotient enumeration
FROZEN_SIZES = {3: 5, 4: 5, 5: 33, 8: 17, 12: 29, 14: 81, 16: 105}


def test_golden_list_is_increasing():
    fl = [float(x) for x in GOLDEN_12]
    assert fl == sorted(fl) and len(set(fl)) == 29


def test_cset_12_matches_golden(cset_of):
    C = cset_of(12)
    assert len(C) == 29
    assert all(a == b for a, b in zip(C.values, GOLDEN_12))


@pytest.mark.parametrize("n", [3, 4, 5, 8, 12, 14, 16])
def test_cset_sizes(n, cset_of):
    assert len(cset_of(n)) == FROZEN_SIZES[n]


def test_rational_members_for_lattices(cset_of):
    expected = [Fraction(4, 3), Fraction(3, 2), 2, 3, 4]
    for n in (3, 4):
        assert [v.to_fraction() for v in cset_of(n).values] == expected


@pytest.mark.parametrize("n", [3, 5, 8, 12])
def test_cset_members_real_and_in_subfield(n, cset_of):
    C = cset_of(n)
    for v, w in zip(C.values, C.witnesses):
        assert v.is_real() and v.in_subfield(C.tag.N)
        assert v.sign() > 0 and v > 1
        assert quadruple_value(w) == v


@pytest.mark.parametrize("n", [5, 8, 12])
def test_cset_closed_under_rotation_map(n, cset_of):
    C = cset_of(n)
    for v in C.values:
        assert v / (v - 1) in C


def test_cross_ratio_infinity_conventions():
    assert cross_ratio(0, 1, INF, 2) == Fraction(1, 2)
    assert cross_ratio(INF, 0, 1, 2) == 2
    assert cross_ratio(0, INF, 1, 2) == Fraction(1, 2)
    assert cross_ratio(0, 1, 2, INF) == 2
    with pytest.raises(ValueError):
        cross_ratio(0, 0, 1, 2)
    with pytest.raises(ValueError):
        cross_ratio(INF, INF, 1, 2)


def test_quadruple_index_validation():
    with pytest.raises(ValueError):
        QuadrupleIndex(12, 2, 3, 1, 5)  # sums differ
    with pytest.raises(ValueError):
        QuadrupleIndex(12, 1, 3, 1, 3)


def test_orbit_of_two():
    orb = cross_ratio_orbit(CycNum.rational(1, 2))
    assert sorted(v.to_fraction() for v in orb) == [-1, Fraction(1, 2), 2]


def test_pretty_forms():
    assert pretty(q3(8, -4)) == "8-4*√3"
    assert pretty(q3(Fraction(4, 3))) == "4/3"
    assert pretty(q3(0, 1)) == "√3"


finite = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def _mobius(t, a, b, c, d):
    if t is INF:
        return INF if c == 0 else Fraction(a, c)
    den = c * t + d
    if den == 0:
        return INF
    return (a * t + b) / den


@settings(max_examples=1000, deadline=None)
@given(
    st.lists(finite, min_size=4, max_size=4, unique=True),
    st.tuples(*[st.integers(-6, 6)] * 4).filter(lambda m: m[0] * m[3] - m[1] * m[2] != 0),
    st.integers(-1, 3),
)
def test_mobius_invariance(ts, mat, inf_slot):
    ts = list(ts)
    if inf_slot >= 0:
        ts[inf_slot] = INF
    before = cross_ratio(*ts)
    after = cross_ratio(*[_mobius(t, *mat) for t in ts])
    assert before == after


@st.composite
def quadruples(draw):
    m = draw(st.sampled_from([12, 24, 40, 60, 84, 120]))
    k3 = draw(st.integers(1, m - 3))
    k4 = draw(st.integers(k3 + 2, m - 1))
    k1 = draw(st.integers(k3 + 1, (k3 + k4) // 2))
    return QuadrupleIndex(m, k1, k3 + k4 - k1, k3, k4)


@settings(max_examples=1000, deadline=None)
@given(quadruples())
def test_sine_quotient_agreement(q):
    exact = float(quadruple_value(q))
    approx = quadruple_float(q)
    assert math.isclose(exact, approx, rel_tol=1e-12)
