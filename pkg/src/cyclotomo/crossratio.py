"""Cross ratios on the extended real line and the finite set of cross ratios
that U-polygon direction sets are forced into.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .exactnum import CycNum, FieldTag, _units, real_compare

__all__ = [
    "INF",
    "QuadrupleIndex",
    "CrossRatioSet",
    "cross_ratio",
    "quadruple_value",
    "quadruple_float",
    "enumerate_cross_ratio_set",
    "cross_ratio_orbit",
    "as_ext_real",
    "pretty",
]


class _Infinity:
    """The point at infinity of the real projective line."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "INF"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()


def as_ext_real(t):
    """Coerce ints, Fractions and real CycNums to ExtReal values."""
    if t is INF:
        return t
    if isinstance(t, CycNum):
        if not t.is_real():
            raise ValueError("extended reals must be real")
        return t
    if isinstance(t, (int, Fraction)):
        return CycNum.rational(1, t)
    raise TypeError(f"not an extended real: {t!r}")


def cross_ratio(t1, t2, t3, t4):
    """<t1,t2,t3,t4> = (t3-t1)(t4-t2) / ((t3-t2)(t4-t1)), exactly.

    One of the arguments may be INF; the two factors containing it cancel.
    """
    ts = [as_ext_real(t) for t in (t1, t2, t3, t4)]
    n_inf = sum(t is INF for t in ts)
    if n_inf > 1:
        raise ValueError("at most one argument may be infinite")
    finite = [t for t in ts if t is not INF]
    for i in range(len(finite)):
        for j in range(i + 1, len(finite)):
            if finite[i] == finite[j]:
                raise ValueError("cross ratio needs four distinct values")
    a, b, c, d = ts
    if a is INF:
        return (d - b) / (c - b)
    if b is INF:
        return (c - a) / (d - a)
    if c is INF:
        return (d - b) / (d - a)
    if d is INF:
        return (c - a) / (c - b)
    return (c - a) * (d - b) / ((c - b) * (d - a))


@dataclass(frozen=True, order=True)
class QuadrupleIndex:
    m: int
    k1: int
    k2: int
    k3: int
    k4: int

    def __post_init__(self):
        k1, k2, k3, k4 = self.k1, self.k2, self.k3, self.k4
        if not (0 < k3 < k1 <= k2 < k4 <= self.m - 1) or k1 + k2 != k3 + k4:
            raise ValueError(f"invalid quadruple index {self}")

    @property
    def ks(self):
        return (self.k1, self.k2, self.k3, self.k4)


def _one_minus_zeta(m, k):
    return 1 - CycNum.zeta(m, k)


def quadruple_value(q):
    """(1-z^k1)(1-z^k2) / ((1-z^k3)(1-z^k4)) with z = zeta_m, exactly."""
    if not isinstance(q, QuadrupleIndex):
        q = QuadrupleIndex(*q)
    m = q.m
    num = _one_minus_zeta(m, q.k1) * _one_minus_zeta(m, q.k2)
    den = _one_minus_zeta(m, q.k3) * _one_minus_zeta(m, q.k4)
    return num / den


def quadruple_float(q):
    """Sine-quotient evaluation of a quadruple value."""
    m = q.m
    s = [math.sin(k * math.pi / m) for k in q.ks]
    return s[0] * s[1] / (s[2] * s[3])


@dataclass
class CrossRatioSet:
    tag: FieldTag
    values: list
    witnesses: list
    stats: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.values)

    def __contains__(self, x):
        return x in self._index

    @property
    def _index(self):
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = self.__dict__["_idx"] = set(self.values)
        return idx

    def floats(self):
        return np.array([float(v) for v in self.values])

    def to_json(self):
        return {
            "n": self.tag.n,
            "N": self.tag.N,
            "m": self.tag.m,
            "count": len(self.values),
            "values": [
                {
                    "conductor": v.m,
                    "coeffs": v.to_json()["coeffs"],
                    "approx": float(v),
                    "pretty": pretty(v),
                    "witness": list(w.ks),
                }
                for v, w in zip(self.values, self.witnesses)
            ],
        }


def _quadruple_arrays(m):
    """All constrained quadruples, in (s, k3, k1) loop order."""
    rows = []
    for s in range(2, 2 * (m - 1) + 1):
        for k3 in range(1, (s + 1) // 2):
            k4 = s - k3
            if k4 > m - 1:
                continue
            for k1 in range(k3 + 1, s // 2 + 1):
                rows.append((k1, s - k1, k3, k4))
    if not rows:
        return np.zeros((0, 4), dtype=np.int64)
    return np.array(rows, dtype=np.int64)


def _conjugate_floats(m, ks, j):
    sines = np.sin(np.pi * np.arange(2 * m) / m)
    t = sines[(j * ks) % (2 * m)]
    return t[:, 0] * t[:, 1] / (t[:, 2] * t[:, 3])


def enumerate_cross_ratio_set(tag, screen_tol=1e-9, reject_tol=1e-6):
    """The finite forbidden set for ``tag`` with one witness per value.

    Every constrained quadruple is screened in floating point (all Galois
    conjugates fixing Q(zeta_N) must agree); survivors, and anything the
    screen cannot separate cleanly, are decided exactly.  Values are
    returned in Q(zeta_N) coordinates, sorted increasingly.
    """
    if isinstance(tag, int):
        tag = FieldTag(tag)
    t0 = time.perf_counter()
    m, N = tag.m, tag.N
    ks = _quadruple_arrays(m)
    base = _conjugate_floats(m, ks, 1)
    group = [j for j in _units(m) if j % N == 1 and j != 1]
    dev = np.zeros(len(ks))
    for j in group:
        dev = np.maximum(dev, np.abs(_conjugate_floats(m, ks, j) - base))
    scale = np.maximum(1.0, np.abs(base))
    keep = dev <= reject_tol * scale
    idx = np.nonzero(keep)[0]
    # cluster by float value, then split clusters exactly
    order = idx[np.lexsort((ks[idx, 3], ks[idx, 2], ks[idx, 1], ks[idx, 0], base[idx]))]
    clusters = []
    for i in order:
        v = base[i]
        if clusters and abs(v - clusters[-1][0]) <= screen_tol * max(1.0, abs(v)):
            clusters[-1][1].append(i)
        else:
            clusters.append((v, [i]))

    numer_cache = {}

    def pair_product(a, b):
        key = (a, b)
        p = numer_cache.get(key)
        if p is None:
            p = numer_cache[key] = _one_minus_zeta(m, a) * _one_minus_zeta(m, b)
        return p

    found = {}
    n_exact = 0
    for _, members in clusters:
        reps = []  # (num, den, witness tuple)
        for i in members:
            k1, k2, k3, k4 = (int(x) for x in ks[i])
            num, den = pair_product(k1, k2), pair_product(k3, k4)
            for r in reps:
                if num * r[1] == r[0] * den:
                    if (k1, k2, k3, k4) < r[2]:
                        r[2] = (k1, k2, k3, k4)
                    break
            else:
                reps.append([num, den, (k1, k2, k3, k4)])
        for num, den, w in reps:
            n_exact += 1
            value = num / den
            if not value.is_real() or not value.in_subfield(N):
                continue
            small = value.restrict(N)
            prev = found.get(small)
            if prev is None or w < prev:
                found[small] = w
    values = sorted(found, key=_SortKey)
    witnesses = [QuadrupleIndex(m, *found[v]) for v in values]
    stats = {
        "quadruples": int(len(ks)),
        "screened": int(len(idx)),
        "exact_checks": n_exact,
        "elapsed_s": time.perf_counter() - t0,
    }
    return CrossRatioSet(tag, values, witnesses, stats)


class _SortKey:
    __slots__ = ("v",)

    def __init__(self, v):
        self.v = v

    def __lt__(self, other):
        return real_compare(self.v, other.v) < 0


def cross_ratio_orbit(c):
    """Orbit of c under the six permutations of a cross ratio's arguments."""
    c = as_ext_real(c)
    if c == 0 or c == 1:
        raise ValueError("orbit undefined for 0 and 1")
    one = CycNum.rational(c.m, 1)
    out = []
    for v in (c, one / c, one - c, one / (one - c), (c - one) / c, c / (c - one)):
        if v not in out:
            out.append(v)
    return out


def _squarefree_split(q):
    """Write a positive rational q as b^2 * d with d a squarefree integer."""
    num = q.numerator * q.denominator
    d, b, p = 1, 1, 2
    rest = num
    while p * p <= rest:
        while rest % (p * p) == 0:
            rest //= p * p
            b *= p
        if rest % p == 0:
            rest //= p
            d *= p
        p += 1
    d *= rest
    return Fraction(b, q.denominator), d


def pretty(v):
    """'a+b√d' for values of degree at most 2 over Q, else a decimal string."""
    if v.is_rational():
        return str(v.to_fraction())
    conj = []
    for j in _units(v.m):
        c = v.galois(j)
        if c not in conj:
            conj.append(c)
            if len(conj) > 2:
                return f"{float(v):.12g}"
    other = conj[1] if conj[0] == v else conj[0]
    a = ((v + other) * Fraction(1, 2)).to_fraction()
    half = (v - other) * Fraction(1, 2)
    sq = (half * half).to_fraction()
    b, d = _squarefree_split(sq)
    if half.sign() < 0:
        b = -b
    out = "" if a == 0 else f"{a}"
    if b == 1:
        coef = ""
    elif b == -1:
        coef = "-"
    else:
        coef = f"{b}*"
    sign = "+" if (out and b > 0) else ""
    return f"{out}{sign}{coef}√{d}"
