"""Finite patches of n-cyclotomic model sets by cut and project.

A point x of Z[zeta_n] is kept when |x| <= R in the physical plane and its
star image (zeta_n -> zeta_n^e) lies in the window.  For n with
phi(n) = 2 (the square and triangular lattices) there is no internal space
and the patch is the full lattice disc.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

import numpy as np

from .exactnum import CycNum, FieldTag, _lcm, real_compare, totient
from .geometry import Point, PointSet, orientation

__all__ = [
    "WindowSpec",
    "PatchSpec",
    "Patch",
    "star_map",
    "window_contains",
    "generate_patch",
    "DEFAULT_STAR",
    "MAX_CANDIDATES",
]

DEFAULT_STAR = {5: 2, 10: 3, 8: 3, 12: 5}
MAX_CANDIDATES = 10**7
_MARGIN = 1e-9


def _real(x):
    if isinstance(x, CycNum):
        return x
    return Fraction(x)


@dataclass(frozen=True)
class WindowSpec:
    """A closed disc or regular polygon in internal space.

    ``rotation`` is measured in full turns; ``radius`` is the (circum)radius
    and may be a real CycNum such as sqrt(2).
    """

    shape: str = "disc"
    radius: object = Fraction(1)
    sides: int = None
    rotation: Fraction = Fraction(0)
    shift: tuple = (Fraction(0), Fraction(0))

    def __post_init__(self):
        if self.shape not in ("disc", "ngon"):
            raise ValueError(f"unknown window shape {self.shape!r}")
        if float(self.radius) <= 0:
            raise ValueError("window radius must be positive")
        if self.shape == "ngon" and (self.sides is None or self.sides < 3):
            raise ValueError("polygon windows need at least 3 sides")

    @classmethod
    def disc(cls, radius, shift=(0, 0)):
        return cls("disc", _real(radius), None, Fraction(0), (Fraction(shift[0]), Fraction(shift[1])))

    @classmethod
    def ngon(cls, sides, radius, rotation=0, shift=(0, 0)):
        return cls("ngon", _real(radius), sides, Fraction(rotation), (Fraction(shift[0]), Fraction(shift[1])))

    @property
    def bounding_radius(self):
        return float(self.radius) + math.hypot(float(self.shift[0]), float(self.shift[1]))

    def to_json(self):
        r = self.radius
        out = {"shape": self.shape, "radius": r.to_json() if isinstance(r, CycNum) else str(r)}
        if self.shape == "ngon":
            out["sides"] = self.sides
            out["rotation"] = str(self.rotation)
        out["shift"] = [str(self.shift[0]), str(self.shift[1])]
        return out


@dataclass(frozen=True)
class PatchSpec:
    tag: FieldTag
    physical_radius: Fraction
    window: WindowSpec = WindowSpec()
    star_exponent: int = None

    def __post_init__(self):
        n = self.tag.n
        if self.star_exponent is None:
            object.__setattr__(self, "star_exponent", DEFAULT_STAR.get(n, 1))
        e = self.star_exponent
        if gcd(e, n) != 1:
            raise ValueError(f"star exponent {e} is not coprime to {n}")
        if n in (5, 8, 12) and e % n in (1, n - 1):
            raise ValueError("star exponent must not be +-1 mod n for aperiodic cases")
        if Fraction(self.physical_radius) <= 0:
            raise ValueError("physical radius must be positive")


def _galois_rep(m, n, e):
    # an exponent j coprime to m with j = e (mod n)
    for j in range(e % n, m * n + 1, n):
        if j and gcd(j, m) == 1:
            return j
    raise ValueError("no Galois representative")


def star_map(x, e, n=None):
    """Galois conjugate zeta_n -> zeta_n^e of x, returned as a planar point."""
    z = x.z if isinstance(x, Point) else x
    if not isinstance(z, CycNum):
        z = CycNum.rational(1, z)
    n = n or z.m
    if gcd(e, n) != 1:
        raise ValueError(f"gcd({e}, {n}) != 1")
    if z.m % n:
        z = z.lift(_lcm(z.m, n))
    return Point(z.galois(_galois_rep(z.m, n, e)))


def _polygon_vertices(w, m):
    k = w.sides
    rot = w.rotation
    L = _lcm(_lcm(k * rot.denominator, 4), m)
    r = w.radius
    if isinstance(r, CycNum):
        L = _lcm(L, r.m)
    base = CycNum.zeta(L, (rot.numerator * (L // rot.denominator)) % L)
    c = CycNum(4, [w.shift[0], w.shift[1]])
    return [Point(base * CycNum.zeta(L, j * L // k) * r + c) for j in range(k)]


def _float_inside(w, p):
    x, y = p.real - float(w.shift[0]), p.imag - float(w.shift[1])
    r = float(w.radius)
    if w.shape == "disc":
        return r - math.hypot(x, y)
    k = w.sides
    th = 2 * math.pi * float(w.rotation)
    apothem = r * math.cos(math.pi / k)
    # signed distance to the nearest edge line (positive inside)
    best = math.inf
    for j in range(k):
        phi = th + 2 * math.pi * (j + 0.5) / k
        best = min(best, apothem - (x * math.cos(phi) + y * math.sin(phi)))
    return best


def window_contains(w, p):
    """Closed-window membership; exact for CycNum points."""
    if isinstance(p, Point) or isinstance(p, CycNum):
        pt = p if isinstance(p, Point) else Point(p)
        sd = _float_inside(w, complex(pt.z))
        if abs(sd) > _MARGIN * max(1.0, float(w.radius)):
            return sd > 0
        return _exact_inside(w, pt)
    p = complex(*p) if isinstance(p, tuple) else complex(p)
    return _float_inside(w, p) >= 0


def _exact_inside(w, pt):
    c = CycNum(4, [w.shift[0], w.shift[1]])
    if w.shape == "disc":
        d = pt.z - c
        r = w.radius if isinstance(w.radius, CycNum) else CycNum.rational(4, w.radius)
        return real_compare(d * d.conjugate(), r * r) <= 0
    verts = _polygon_vertices(w, pt.z.m)
    k = len(verts)
    return all(orientation(verts[j], verts[(j + 1) % k], pt) >= 0 for j in range(k))


@dataclass
class Patch:
    spec: PatchSpec
    coeffs: list
    points: PointSet
    boundary_hits: int = 0
    stats: dict = field(default_factory=dict)

    def to_json(self):
        return {
            "n": self.spec.tag.n,
            "points": [list(c) for c in self.coeffs],
            "window": self.spec.window.to_json(),
            "radius": str(self.spec.physical_radius),
            "star": self.spec.star_exponent,
        }


def _embedding_matrix(n, exps):
    d = totient(n)
    rows = []
    for e in exps:
        ang = 2 * math.pi * e * np.arange(d) / n
        rows.append(np.cos(ang))
        rows.append(np.sin(ang))
    return np.array(rows)


def generate_patch(spec):
    """All points of the model set within the physical radius."""
    tag = spec.tag
    n = tag.n
    d = totient(n)
    if d not in (2, 4):
        raise ValueError(f"model sets with phi(n) = {d} need a higher-dimensional window; only phi(n) in (2, 4) is supported")
    R = float(Fraction(spec.physical_radius))
    lattice = d == 2
    exps = [1] if lattice else [1, spec.star_exponent]
    A = _embedding_matrix(n, exps)
    Ainv = np.linalg.inv(A)
    bounds = np.array([R, R] + ([] if lattice else [spec.window.bounding_radius] * 2))
    box = np.floor(np.abs(Ainv) @ bounds + 1e-9).astype(int)
    total = int(np.prod(2 * box + 1))
    if total > MAX_CANDIDATES:
        raise ValueError(f"coefficient box has {total} candidates; use a smaller radius (about {R * (MAX_CANDIDATES / total) ** (1 / d):.3g})")
    grids = np.stack(
        [g.ravel() for g in np.meshgrid(*[np.arange(-b, b + 1) for b in box], indexing="ij")],
        axis=1,
    )
    emb = grids @ A.T
    phys = np.hypot(emb[:, 0], emb[:, 1])
    ok = phys <= R * (1 + _MARGIN) + _MARGIN
    grids, emb, phys = grids[ok], emb[ok], phys[ok]
    Rq = Fraction(spec.physical_radius)
    M = _lcm(tag.N, 4)
    coeffs, points = [], []
    hits = 0
    for row, e_row, r in zip(grids, emb, phys):
        vec = [int(v) for v in row]
        x = CycNum(n, vec)
        if abs(r - R) <= _MARGIN * max(1.0, R):
            if real_compare(x * x.conjugate(), Rq * Rq) > 0:
                continue
        if not lattice:
            internal = complex(e_row[2], e_row[3])
            sd = _float_inside(spec.window, internal)
            if abs(sd) <= _MARGIN * max(1.0, float(spec.window.radius)):
                hits += 1
                if not _exact_inside(spec.window, star_map(x, spec.star_exponent, n)):
                    continue
            elif sd < 0:
                continue
        coeffs.append(tuple(vec))
        points.append(Point(x.lift(_lcm(M, n))))
    order = sorted(range(len(coeffs)), key=lambda i: coeffs[i])
    coeffs = [coeffs[i] for i in order]
    points = [points[i] for i in order]
    return Patch(spec, coeffs, PointSet(tag, points), hits, {"box": [int(b) for b in box], "candidates": total})


def patch_from_json(obj):
    """Rebuild the point set of a patch document."""
    n = obj["n"]
    tag = FieldTag(n)
    M = _lcm(_lcm(tag.N, 4), n)
    return PointSet(tag, [Point(CycNum(n, c).lift(M)) for c in obj["points"]])
