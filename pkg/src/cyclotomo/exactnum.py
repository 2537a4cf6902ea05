"""Exact arithmetic in cyclotomic fields Q(zeta_m).

Elements are stored in canonical form: an integer numerator vector over the
power basis 1, z, ..., z^(phi(m)-1), reduced modulo the m-th cyclotomic
polynomial, together with a positive common denominator.  Equal field
elements of the same conductor therefore have identical representations.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from math import gcd

from mpmath import iv

__all__ = [
    "CycNum",
    "FieldTag",
    "cyclotomic_polynomial",
    "totient",
    "cyc_add",
    "cyc_mul",
    "cyc_inv",
    "galois_apply",
    "is_real",
    "in_subfield",
    "real_compare",
    "lift",
    "restrict",
]


def _lcm(a, b):
    return a * b // gcd(a, b)


@lru_cache(maxsize=None)
def _factorize(n):
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return tuple(sorted(out.items()))


def totient(n):
    r = n
    for p, _ in _factorize(n):
        r = r // p * (p - 1)
    return r


def _mobius(n):
    f = _factorize(n)
    if any(e > 1 for _, e in f):
        return 0
    return -1 if len(f) % 2 else 1


def _poly_divexact(num, den):
    """Exact division of integer polynomials (low degree first)."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for i in range(len(out) - 1, -1, -1):
        q, r = divmod(num[i + len(den) - 1], lead)
        if r:
            raise ArithmeticError("inexact polynomial division")
        out[i] = q
        if q:
            for j, c in enumerate(den):
                num[i + j] -= q * c
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m):
    """Integer coefficients of Phi_m, lowest degree first.

    Computed recursively: x^m - 1 divided by Phi_d for every proper divisor d.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly = _poly_divexact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def _phi_sparse(m):
    # nonzero (exponent, coeff) terms of Phi_m below the leading term
    phi = cyclotomic_polynomial(m)
    return tuple((i, c) for i, c in enumerate(phi[:-1]) if c)


def _reduce(vec, m):
    """Reduce an integer vector (any length) modulo Phi_m; returns a list."""
    d = totient(m)
    if len(vec) > m:
        folded = [0] * m
        for i, c in enumerate(vec):
            folded[i % m] += c
        vec = folded
    else:
        vec = list(vec)
    if len(vec) <= d:
        return vec + [0] * (d - len(vec))
    terms = _phi_sparse(m)
    for top in range(len(vec) - 1, d - 1, -1):
        c = vec[top]
        if c:
            base = top - d
            for i, p in terms:
                vec[base + i] -= c * p
    del vec[d:]
    return vec


def _convolve(a, b):
    la, lb = len(a), len(b)
    if la == 0 or lb == 0:
        return []
    if la * lb <= 64:
        out = [0] * (la + lb - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return out
    # Kronecker substitution: pack into big integers, multiply once
    bound = max(map(abs, a)) * max(map(abs, b)) * min(la, lb)
    if bound == 0:
        return [0] * (la + lb - 1)
    bits = bound.bit_length() + 2
    pa = 0
    for x in reversed(a):
        pa = (pa << bits) + x
    pb = 0
    for x in reversed(b):
        pb = (pb << bits) + x
    prod = pa * pb
    mask = (1 << bits) - 1
    half = 1 << (bits - 1)
    full = 1 << bits
    out = []
    for _ in range(la + lb - 1):
        c = prod & mask
        prod >>= bits
        if c >= half:
            c -= full
            prod += 1
        out.append(c)
    return out


@lru_cache(maxsize=None)
def _cos_table(m):
    return tuple(math.cos(2 * math.pi * k / m) for k in range(m))


@lru_cache(maxsize=None)
def _sin_table(m):
    return tuple(math.sin(2 * math.pi * k / m) for k in range(m))


@lru_cache(maxsize=None)
def _units(m):
    return tuple(j for j in range(1, m + 1) if gcd(j, m) == 1)


@lru_cache(maxsize=None)
def _subfield_group(m, N):
    return tuple(j for j in _units(m) if j % N == 1 % N and j % m != 1 % m)


class CycNum:
    """An element of the cyclotomic field Q(zeta_m), immutable.

    ``CycNum(m, coeffs)`` accepts rational coefficients over the powers of
    zeta_m (any length; the vector is reduced modulo x^m - 1 and Phi_m).
    """

    __slots__ = ("m", "_num", "_den", "_hash", "_approx")

    def __init__(self, m, coeffs=()):
        if m < 1:
            raise ValueError("conductor must be >= 1")
        fr = [Fraction(c) for c in coeffs]
        den = 1
        for c in fr:
            den = _lcm(den, c.denominator)
        self._set(m, _reduce([int(c * den) for c in fr], m), den)

    @classmethod
    def _raw(cls, m, num, den):
        self = object.__new__(cls)
        self._set(m, num, den)
        return self

    def _set(self, m, num, den):
        g = den
        for c in num:
            if g == 1:
                break
            g = gcd(g, c)
        if den < 0:
            g = -g
        if g != 1:
            num = [c // g for c in num]
            den //= g
        self.m = m
        self._num = tuple(num)
        self._den = den
        self._hash = None
        self._approx = None

    # -- constructors ---------------------------------------------------
    @classmethod
    def rational(cls, m, q):
        q = Fraction(q)
        return cls._raw(m, [q.numerator] + [0] * (totient(m) - 1), q.denominator)

    @classmethod
    def zeta(cls, m, k=1):
        """zeta_m ** k."""
        vec = [0] * m
        vec[k % m] = 1
        return cls._raw(m, _reduce(vec, m), 1)

    @classmethod
    def from_json(cls, obj):
        return cls(obj["m"], [Fraction(n, d) for n, d in obj["coeffs"]])

    def to_json(self):
        return {"m": self.m, "coeffs": [[c.numerator, c.denominator] for c in self.coeffs]}

    # -- accessors ------------------------------------------------------
    @property
    def coeffs(self):
        return tuple(Fraction(c, self._den) for c in self._num)

    @property
    def degree(self):
        return len(self._num)

    def is_zero(self):
        return not any(self._num)

    def is_rational(self):
        return not any(self._num[1:])

    def to_fraction(self):
        if not self.is_rational():
            raise ValueError("element is not rational")
        return Fraction(self._num[0], self._den)

    # -- conductor changes ----------------------------------------------
    def lift(self, m2):
        """The same element viewed in Q(zeta_m2); m must divide m2."""
        if m2 == self.m:
            return self
        if m2 % self.m:
            raise ValueError(f"cannot lift conductor {self.m} to {m2}")
        k = m2 // self.m
        vec = [0] * m2
        for i, c in enumerate(self._num):
            vec[i * k] = c
        return CycNum._raw(m2, _reduce(vec, m2), self._den)

    def restrict(self, m2):
        """Express the element in Q(zeta_m2), m2 | m; raises if it is not there."""
        if m2 == self.m:
            return self
        if self.m % m2:
            raise ValueError(f"{m2} does not divide {self.m}")
        piv, inv = _restriction_data(self.m, m2)
        d2 = totient(m2)
        rhs = [self._num[r] for r in piv]
        vec = [sum(inv[i][j] * rhs[j] for j in range(d2)) for i in range(d2)]
        out = CycNum(m2, [Fraction(v) / self._den for v in vec])
        if out.lift(self.m)._key() != self._key():
            raise ValueError(f"element does not lie in Q(zeta_{m2})")
        return out

    # -- arithmetic -----------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, CycNum):
            if other.m == self.m:
                return self, other
            m = _lcm(self.m, other.m)
            return self.lift(m), other.lift(m)
        if isinstance(other, (int, Fraction)):
            return self, CycNum.rational(self.m, other)
        return None

    def __add__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        den = _lcm(a._den, b._den)
        fa, fb = den // a._den, den // b._den
        return CycNum._raw(a.m, [x * fa + y * fb for x, y in zip(a._num, b._num)], den)

    __radd__ = __add__

    def __neg__(self):
        return CycNum._raw(self.m, [-x for x in self._num], self._den)

    def __sub__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a + (-b)

    def __rsub__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return b + (-a)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return CycNum._raw(self.m, [x * q.numerator for x in self._num], self._den * q.denominator)
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CycNum._raw(a.m, _reduce(_convolve(a._num, b._num), a.m), a._den * b._den)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        if self.is_rational():
            return CycNum.rational(self.m, 1 / self.to_fraction())
        s = _poly_inverse(self._num, cyclotomic_polynomial(self.m))
        return CycNum(self.m, [c * self._den for c in s])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / Fraction(other))
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a * b.inverse()

    def __rtruediv__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return b * a.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out = CycNum.rational(self.m, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- Galois action --------------------------------------------------
    def galois(self, j):
        """Image under zeta_m -> zeta_m^j."""
        if gcd(j, self.m) != 1:
            raise ValueError(f"gcd({j}, {self.m}) != 1")
        m = self.m
        vec = [0] * m
        for i, c in enumerate(self._num):
            if c:
                vec[(i * j) % m] += c
        return CycNum._raw(m, _reduce(vec, m), self._den)

    def conjugate(self):
        return self.galois(-1)

    def is_real(self):
        return self.conjugate()._key() == self._key()

    def in_subfield(self, N):
        """True iff the element lies in Q(zeta_N) (N must divide m)."""
        if self.m % N:
            raise ValueError(f"{N} does not divide conductor {self.m}")
        key = self._key()
        return all(self.galois(j)._key() == key for j in _subfield_group(self.m, N))

    def real_part(self):
        return (self + self.conjugate()) * Fraction(1, 2)

    def imag_part(self):
        if self.m % 4:
            raise ValueError("conductor must be divisible by 4 to take imaginary parts")
        i = CycNum.zeta(self.m, self.m // 4)
        return (self - self.conjugate()) * Fraction(1, 2) * (-i)

    # -- numerics -------------------------------------------------------
    def __complex__(self):
        cs, sn = _cos_table(self.m), _sin_table(self.m)
        re = im = 0.0
        for k, c in enumerate(self._num):
            if c:
                re += c * cs[k]
                im += c * sn[k]
        return complex(re / self._den, im / self._den)

    def __float__(self):
        if self._approx is None:
            self._approx = _float_real(self)
        return self._approx

    def sign(self):
        """Sign of a real element under zeta_m -> exp(2 pi i / m)."""
        if not self.is_real():
            raise ValueError("sign of a non-real element")
        return _sign(self)

    # -- comparison / hashing -------------------------------------------
    def _key(self):
        return (self._num, self._den)

    def __eq__(self, other):
        if isinstance(other, CycNum):
            if other.m == self.m:
                return self._key() == other._key()
            a, b = self._coerce(other)
            return a._key() == b._key()
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.to_fraction() == other
        return NotImplemented

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        # conductor-independent: normalised traces of a and a^2
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(self.to_fraction())
            else:
                self._hash = hash((_normalized_trace(self), _normalized_trace(self * self)))
        return self._hash

    def __lt__(self, other):
        return real_compare(self, other) < 0

    def __le__(self, other):
        return real_compare(self, other) <= 0

    def __gt__(self, other):
        return real_compare(self, other) > 0

    def __ge__(self, other):
        return real_compare(self, other) >= 0

    def __repr__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if k == 0 else f"{c}*z^{k}")
        return f"CycNum({self.m}: {' + '.join(terms) or '0'})"


def _normalized_trace(a):
    # Tr(a)/deg; unchanged when a is viewed in a larger cyclotomic field
    m = a.m
    total = Fraction(0)
    for i, c in enumerate(a._num):
        if c:
            q = m // gcd(i, m)
            total += Fraction(c * _mobius(q), totient(q))
    return total / a._den


def _poly_inverse(a, f):
    """Inverse of a modulo f over Q via the extended Euclidean algorithm."""

    def trim(p):
        while p and p[-1] == 0:
            p.pop()
        return p

    def divmod_poly(u, v):
        u = list(u)
        q = [Fraction(0)] * max(len(u) - len(v) + 1, 1)
        lead = v[-1]
        while len(u) >= len(v) and any(u):
            shift = len(u) - len(v)
            c = u[-1] / lead
            q[shift] = c
            for j, x in enumerate(v):
                u[shift + j] -= c * x
            u.pop()
            trim(u)
        return q, u

    def sub(u, v):
        n = max(len(u), len(v))
        u = list(u) + [Fraction(0)] * (n - len(u))
        for i, x in enumerate(v):
            u[i] -= x
        return trim(u)

    def mul(u, v):
        if not u or not v:
            return []
        out = [Fraction(0)] * (len(u) + len(v) - 1)
        for i, x in enumerate(u):
            if x:
                for j, y in enumerate(v):
                    out[i + j] += x * y
        return trim(out)

    r0, r1 = trim([Fraction(c) for c in f]), trim([Fraction(c) for c in a])
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        q, r = divmod_poly(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1))
    if not r1:
        raise ZeroDivisionError("element is not invertible")
    c = r1[0]
    return [x / c for x in s1]


@lru_cache(maxsize=None)
def _restriction_data(m, m2):
    """Pivot rows and inverse matrix mapping Q(zeta_m) coords to Q(zeta_m2) coords."""
    d2 = totient(m2)
    cols = [CycNum.zeta(m2, i).lift(m) for i in range(d2)]
    rows = [[Fraction(cols[j]._num[r]) for j in range(d2)] for r in range(totient(m))]
    # choose pivot rows greedily by Gaussian elimination
    piv, basis = [], []
    for r, row in enumerate(rows):
        vec = list(row)
        for prow, pcol in basis:
            if vec[pcol]:
                f = vec[pcol] / prow[pcol]
                vec = [x - f * y for x, y in zip(vec, prow)]
        nz = next((c for c, x in enumerate(vec) if x), None)
        if nz is not None:
            piv.append(r)
            basis.append((vec, nz))
            if len(piv) == d2:
                break
    sub = [rows[r] for r in piv]
    inv = _invert(sub)
    return tuple(piv), tuple(tuple(r) for r in inv)


def _invert(mat):
    n = len(mat)
    aug = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(mat)]
    for col in range(n):
        p = next(r for r in range(col, n) if aug[r][col])
        aug[col], aug[p] = aug[p], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [r[n:] for r in aug]


def _float_real(a):
    cs = _cos_table(a.m)
    s = 0.0
    for k, c in enumerate(a._num):
        if c:
            s += c * cs[k]
    return s / a._den


def _sign(a):
    if a.is_zero():
        return 0
    # fast path: double precision with a conservative error bound
    try:
        cs = _cos_table(a.m)
        s = 0.0
        mag = 0.0
        for k, c in enumerate(a._num):
            if c:
                fc = float(c)
                s += fc * cs[k]
                mag += abs(fc)
        bound = mag * (len(a._num) + 4) * 2.0**-50
        if abs(s) > bound:
            return 1 if s > 0 else -1
    except OverflowError:
        pass
    prec = 64
    while True:
        with iv.workprec(prec):
            step = 2 * iv.pi / a.m
            acc = iv.mpf(0)
            for k, c in enumerate(a._num):
                if c:
                    acc += c * iv.cos(step * k)
            if acc.a > 0:
                return 1
            if acc.b < 0:
                return -1
        prec *= 2


class FieldTag:
    """Field data attached to a symmetry parameter n >= 3.

    ``N = lcm(n, 2)`` and ``m = lcm(2n, 12)``.
    """

    __slots__ = ("n", "N", "m")

    def __init__(self, n):
        if not isinstance(n, int) or n < 3:
            raise ValueError("n must be an integer >= 3")
        self.n = n
        self.N = _lcm(n, 2)
        self.m = _lcm(2 * n, 12)

    @property
    def plane_conductor(self):
        """Smallest conductor holding Q(zeta_n) and i."""
        return _lcm(self.N, 4)

    def __eq__(self, other):
        return isinstance(other, FieldTag) and other.n == self.n

    def __hash__(self):
        return hash(("FieldTag", self.n))

    def __repr__(self):
        return f"FieldTag(n={self.n}, N={self.N}, m={self.m})"


# functional surface -----------------------------------------------------

def cyc_add(a, b):
    return a + b


def cyc_mul(a, b):
    return a * b


def cyc_inv(a):
    return a.inverse()


def galois_apply(j, a):
    return a.galois(j)


def is_real(a):
    return a.is_real()


def in_subfield(a, N):
    return a.in_subfield(N)


def lift(a, m):
    return a.lift(m)


def restrict(a, m):
    return a.restrict(m)


def real_compare(a, b):
    """-1, 0 or 1 according to the order of two real field elements."""
    if not isinstance(a, CycNum):
        a = CycNum.rational(b.m if isinstance(b, CycNum) else 1, a)
    if not isinstance(b, CycNum):
        b = CycNum.rational(a.m, b)
    if not a.is_real() or not b.is_real():
        raise ValueError("real_compare needs real elements")
    return _sign(a - b)
