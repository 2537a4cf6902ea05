from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cyclotomo.exactnum import (
    CycNum,
    FieldTag,
    cyclotomic_polynomial,
    galois_apply,
    real_compare,
    totient,
)

CONDUCTORS = [3, 4, 5, 8, 12, 15, 24]


def elements(m):
    d = totient(m)
    coeff = st.fractions(min_value=-5, max_value=5, max_denominator=6)
    return st.lists(coeff, min_size=d, max_size=d).map(lambda cs: CycNum(m, cs))


@st.composite
def pair_in_field(draw):
    m = draw(st.sampled_from(CONDUCTORS))
    return m, draw(elements(m)), draw(elements(m))


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
    # Phi_105 is the first with a coefficient of absolute value 2
    assert min(cyclotomic_polynomial(105)) == -2


def test_zeta_powers_reduce():
    z = CycNum.zeta(12)
    assert z**12 == 1
    assert z**6 == -1
    assert z**4 - z**2 + 1 == 0


def test_sqrt3_squared():
    s = CycNum.zeta(12) + CycNum.zeta(12, 11)
    assert s * s == 3
    assert s.is_real() and s.sign() == 1


def test_golden_ratio_identity():
    tau = 1 + CycNum.zeta(5) + CycNum.zeta(5, 4)
    assert tau * tau == tau + 1
    assert abs(float(tau) - (1 + 5**0.5) / 2) < 1e-14


def test_equality_across_conductors():
    i4 = CycNum.zeta(4)
    assert i4 == CycNum.zeta(12, 3)
    assert hash(i4) == hash(CycNum.zeta(24, 6))
    assert CycNum.rational(8, Fraction(1, 2)) == Fraction(1, 2)
    assert hash(CycNum.rational(8, Fraction(1, 2))) == hash(Fraction(1, 2))


def test_json_round_trip():
    x = CycNum(12, [Fraction(1, 3), 0, -2, Fraction(5, 7)])
    assert CycNum.from_json(x.to_json()) == x


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        CycNum(5, []).inverse()


def test_field_tag():
    t = FieldTag(12)
    assert (t.N, t.m) == (12, 24)
    assert FieldTag(5).N == 10 and FieldTag(5).m == 60
    with pytest.raises(ValueError):
        FieldTag(2)


def test_real_compare_close_values():
    # 1 + sqrt2 - (3 + 2 sqrt2)/(1 + sqrt2) is exactly zero; the neighbours differ by 1e-30
    r2 = CycNum.zeta(8) + CycNum.zeta(8, 7)
    assert real_compare((3 + 2 * r2) / (1 + r2), 1 + r2) == 0
    eps = CycNum.rational(8, Fraction(1, 10**30))
    assert real_compare(1 + r2 + eps, 1 + r2) == 1
    assert real_compare(1 + r2 - eps, 1 + r2) == -1


def test_real_compare_rejects_nonreal():
    with pytest.raises(ValueError):
        real_compare(CycNum.zeta(4), CycNum.rational(4, 0))


@settings(max_examples=200, deadline=None)
@given(pair_in_field())
def test_field_axioms(data):
    m, a, b = data
    assert (a + b) - b == a
    assert a * b == b * a
    if not b.is_zero():
        assert (a / b) * b == a
    assert abs(complex(a * b) - complex(a) * complex(b)) < 1e-9 * (1 + abs(complex(a)) * abs(complex(b)))


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(CONDUCTORS).flatmap(lambda m: st.tuples(st.just(m), elements(m))), st.data())
def test_galois_composition(ma, data):
    m, a = ma
    from math import gcd

    units = [j for j in range(1, m) if gcd(j, m) == 1]
    j = data.draw(st.sampled_from(units))
    k = data.draw(st.sampled_from(units))
    assert galois_apply(j, galois_apply(k, a)) == galois_apply(j * k % m, a)
    assert galois_apply(1, a) == a


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([3, 4, 5, 8, 12]).flatmap(lambda m: st.tuples(st.just(m), elements(m))))
def test_lift_restrict_identity(ma):
    m, a = ma
    big = a.lift(m * 6)
    assert big.in_subfield(m)
    assert big.restrict(m) == a
    assert big.restrict(m).coeffs == a.coeffs


@settings(max_examples=200, deadline=None)
@given(st.lists(st.tuples(st.integers(-4, 4), st.integers(-4, 4), st.integers(1, 5)), min_size=3, max_size=3))
def test_real_compare_total_order(raw):
    r2 = CycNum.zeta(8) + CycNum.zeta(8, 7)
    xs = [(a + b * r2) * Fraction(1, c) for a, b, c in raw]
    for x in xs:
        for y in xs:
            c = real_compare(x, y)
            assert c == -real_compare(y, x)
            assert (c == 0) == (x == y)
            if c:
                assert (float(x) < float(y)) == (c < 0) or abs(float(x) - float(y)) < 1e-12
    ordered = sorted(xs)
    for u, v in zip(ordered, ordered[1:]):
        assert real_compare(u, v) <= 0


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([5, 8, 12, 15]).flatmap(lambda m: st.tuples(st.just(m), elements(m))))
def test_conjugate_and_real_parts(ma):
    m, a = ma
    M = m * 4 // __import__("math").gcd(m, 4)
    z = a.lift(M)
    assert (z + z.conjugate()).is_real()
    assert z.real_part().is_real() and z.imag_part().is_real()
    i = CycNum.zeta(M, M // 4)
    assert z.real_part() + i * z.imag_part() == z
