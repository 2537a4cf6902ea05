"""Exact planar geometry over cyclotomic fields.

The plane is the complex numbers; a point is a CycNum whose conductor is
divisible by 4, so real and imaginary parts are again field elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from fractions import Fraction

from .crossratio import INF
from .exactnum import CycNum, FieldTag, real_compare, _lcm

__all__ = [
    "Point",
    "Direction",
    "PointSet",
    "slope_of",
    "line_key",
    "orientation",
    "convex_hull",
    "in_hull",
    "is_convex_subset",
    "gaussian",
]


def _plane(z):
    if isinstance(z, (int, Fraction)):
        return CycNum.rational(4, z)
    if z.m % 4:
        return z.lift(_lcm(z.m, 4))
    return z


class Point:
    """A point of the plane with exact cyclotomic coordinates."""

    __slots__ = ("z", "_re", "_im")

    def __init__(self, z):
        self.z = _plane(z)
        self._re = None
        self._im = None

    @property
    def re(self):
        if self._re is None:
            self._re = self.z.real_part()
        return self._re

    @property
    def im(self):
        if self._im is None:
            self._im = self.z.imag_part()
        return self._im

    def lift(self, m):
        return Point(self.z.lift(m))

    def __add__(self, other):
        return Point(self.z + (other.z if isinstance(other, Point) else other))

    def __sub__(self, other):
        return Point(self.z - (other.z if isinstance(other, Point) else other))

    def __eq__(self, other):
        return isinstance(other, Point) and self.z == other.z

    def __hash__(self):
        return hash(self.z)

    def __complex__(self):
        return complex(self.z)

    def __repr__(self):
        c = complex(self.z)
        return f"Point({c.real:.6g}{c.imag:+.6g}i)"

    def to_json(self):
        return self.z.to_json()

    @classmethod
    def from_json(cls, obj):
        return cls(CycNum.from_json(obj))


def gaussian(x, y):
    """The point x + i y with rational x, y."""
    return Point(CycNum(4, [Fraction(x), Fraction(y)]))


class Direction:
    """A nonzero direction vector, scaled so its first nonzero coefficient is 1.

    Two directions compare equal iff they are parallel.
    """

    __slots__ = ("w", "_slope")

    def __init__(self, w):
        w = w.z if isinstance(w, Point) else _plane(w)
        if w.is_zero():
            raise ValueError("zero direction")
        lead = next(c for c in w.coeffs if c)
        self.w = w * (1 / lead)
        self._slope = None

    @property
    def slope(self):
        if self._slope is None:
            self._slope = slope_of(self)
        return self._slope

    def __eq__(self, other):
        if not isinstance(other, Direction):
            return NotImplemented
        a, b = self.slope, other.slope
        if a is INF or b is INF:
            return a is b
        return a == b

    def __hash__(self):
        return hash(self.slope)

    def __repr__(self):
        c = complex(self.w)
        return f"Direction({c.real:.6g}{c.imag:+.6g}i)"

    def to_json(self):
        return self.w.to_json()

    @classmethod
    def from_json(cls, obj):
        return cls(CycNum.from_json(obj))


def slope_of(d):
    """Slope Im(w)/Re(w) of a direction, INF for vertical ones."""
    w = d.w if isinstance(d, Direction) else _plane(d)
    if w.is_zero():
        raise ValueError("zero direction")
    wc = w.conjugate()
    s = w + wc
    if s.is_zero():
        return INF
    i = CycNum.zeta(w.m, w.m // 4)
    return (-i) * (w - wc) / s


def line_key(p, d):
    """Im(z * conj(w)): constant exactly on lines parallel to d."""
    z = p.z if isinstance(p, Point) else _plane(p)
    w = d.w if isinstance(d, Direction) else _plane(d)
    return (z * w.conjugate()).imag_part()


@dataclass
class PointSet:
    tag: FieldTag
    points: list

    def __post_init__(self):
        seen, out = set(), []
        for p in self.points:
            p = p if isinstance(p, Point) else Point(p)
            if p not in seen:
                seen.add(p)
                out.append(p)
        self.points = out

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, p):
        return p in set(self.points)

    def translate(self, t):
        return PointSet(self.tag, [p + t for p in self.points])

    def to_json(self):
        return {"n": self.tag.n, "points": [p.to_json() for p in self.points]}


def orientation(a, b, c):
    """Sign of the turn a -> b -> c (1 counterclockwise, -1 clockwise, 0 collinear)."""
    cross = (b.re - a.re) * (c.im - a.im) - (b.im - a.im) * (c.re - a.re)
    return cross.sign()


def _lex(p, q):
    c = real_compare(p.re, q.re)
    return c if c else real_compare(p.im, q.im)


def convex_hull(points):
    """Extreme points in counterclockwise order (monotone chain, exact)."""
    pts = sorted(set(points), key=cmp_to_key(_lex))
    if len(pts) <= 2:
        return pts
    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and orientation(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and orientation(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2 and hull[0] == hull[1]:
        return hull[:1]
    return hull


def in_hull(hull, q):
    """True iff q lies in the closed convex polygon with CCW vertices ``hull``."""
    k = len(hull)
    if k == 0:
        return False
    if k == 1:
        return hull[0] == q
    if k == 2:
        a, b = hull
        if orientation(a, b, q) != 0:
            return False
        dot = (q.re - a.re) * (b.re - a.re) + (q.im - a.im) * (b.im - a.im)
        length = (b.re - a.re) ** 2 + (b.im - a.im) ** 2
        return dot.sign() >= 0 and real_compare(dot, length) <= 0
    return all(orientation(hull[i], hull[(i + 1) % k], q) >= 0 for i in range(k))


def is_convex_subset(s, patch):
    """True iff every patch point in conv(s) belongs to s."""
    spts = list(s.points if isinstance(s, PointSet) else s)
    ppts = list(patch.points if isinstance(patch, PointSet) else patch)
    pset = set(ppts)
    sset = set(spts)
    if not sset <= pset:
        raise ValueError("s is not contained in the patch")
    hull = convex_hull(spts)
    return not any(q not in sset and in_hull(hull, q) for q in ppts)
