"""Discrete parallel X-rays, U-polygon checks and a brute-force oracle for
the determination of convex subsets of a finite patch.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field
from functools import cmp_to_key

from .geometry import (
    Direction,
    Point,
    PointSet,
    _lex,
    convex_hull,
    is_convex_subset,
    line_key,
    orientation,
)

__all__ = [
    "XRayTable",
    "CollisionReport",
    "xray",
    "xrays_equal",
    "verify_u_polygon",
    "uniqueness_oracle",
    "MAX_PATCH",
]

MAX_PATCH = 40


def _pts(f):
    return list(f.points) if isinstance(f, PointSet) else [p if isinstance(p, Point) else Point(p) for p in f]


@dataclass
class XRayTable:
    direction: Direction
    rows: dict

    def total(self):
        return sum(self.rows.values())

    def __eq__(self, other):
        return isinstance(other, XRayTable) and self.direction == other.direction and self.rows == other.rows


def xray(f, d):
    """Number of points of f on each line parallel to d, keyed by line_key."""
    d = d if isinstance(d, Direction) else Direction(d)
    rows = Counter(line_key(p, d) for p in _pts(f))
    return XRayTable(d, dict(rows))


def xrays_equal(f, g, dirs):
    for d in dirs:
        if xray(f, d).rows != xray(g, d).rows:
            return False
    return True


def verify_u_polygon(vertices, dirs):
    """Every line through a vertex in a direction of ``dirs`` meets another vertex."""
    verts = _pts(vertices)
    hull = convex_hull(verts)
    if len(hull) < 3 or len(hull) != len(set(verts)):
        raise ValueError("vertices do not form a nondegenerate convex polygon")
    for d in dirs:
        d = d if isinstance(d, Direction) else Direction(d)
        counts = Counter(line_key(v, d) for v in verts)
        if any(c < 2 for c in counts.values()):
            return False
    return True


@dataclass
class CollisionReport:
    found: bool
    pair: tuple = None
    directions: list = field(default_factory=list)
    statistics: dict = field(default_factory=dict)
    exhaustive: bool = True
    collisions: list = field(default_factory=list)

    def to_json(self):
        out = {
            "found": self.found,
            "exhaustive": self.exhaustive,
            "directions": [d.to_json() for d in self.directions],
            "statistics": self.statistics,
        }
        if self.found:
            out["pair"] = [[p.to_json() for p in s] for s in self.pair]
        return out


class _Patch:
    """Index-level geometry of a small patch: cached orientations and triangle masks."""

    def __init__(self, pts):
        self.pts = sorted(pts, key=cmp_to_key(_lex))
        self.n = len(self.pts)
        self._orient = {}
        self._tri = {}
        self._seg = {}

    def orient(self, i, j, k):
        key = (i, j, k)
        r = self._orient.get(key)
        if r is None:
            r = orientation(self.pts[i], self.pts[j], self.pts[k])
            # orientation is alternating in its arguments
            for perm, s in (((i, j, k), 1), ((j, k, i), 1), ((k, i, j), 1), ((j, i, k), -1), ((i, k, j), -1), ((k, j, i), -1)):
                self._orient[perm] = r * s
        return r

    def hull(self, idx):
        # idx sorted by lexicographic order already
        if len(idx) <= 2:
            return list(idx)
        lower, upper = [], []
        for p in idx:
            while len(lower) >= 2 and self.orient(lower[-2], lower[-1], p) <= 0:
                lower.pop()
            lower.append(p)
        for p in reversed(idx):
            while len(upper) >= 2 and self.orient(upper[-2], upper[-1], p) <= 0:
                upper.pop()
            upper.append(p)
        return lower[:-1] + upper[:-1]

    def segment_mask(self, a, b):
        key = (a, b) if a < b else (b, a)
        r = self._seg.get(key)
        if r is None:
            r = 0
            lo, hi = key
            for q in range(lo, hi + 1):
                # lexicographic order puts the points of a segment between its ends
                if self.orient(lo, hi, q) == 0:
                    r |= 1 << q
            self._seg[key] = r
        return r

    def triangle_mask(self, a, b, c):
        key = (a, b, c)
        r = self._tri.get(key)
        if r is None:
            r = 0
            for q in range(self.n):
                if self.orient(a, b, q) >= 0 and self.orient(b, c, q) >= 0 and self.orient(c, a, q) >= 0:
                    r |= 1 << q
            self._tri[key] = r
        return r

    def closure(self, mask):
        idx = [i for i in range(self.n) if mask >> i & 1]
        h = self.hull(idx)
        if len(h) == 1:
            return mask
        if len(h) == 2:
            return self.segment_mask(h[0], h[1])
        out = 0
        for i in range(1, len(h) - 1):
            out |= self.triangle_mask(h[0], h[i], h[i + 1])
        return out


def uniqueness_oracle(patch, dirs, max_subset_size=12, budget=60.0, collect_all=False):
    """Search the convex subsets of ``patch`` for two with equal X-rays.

    Convex subsets are generated level by level (every convex set of size
    k+1 arises from a convex set of size k by adding one point), each with
    an incrementally maintained X-ray fingerprint.  The first fingerprint
    collision is re-verified exactly before it is reported.  With
    ``collect_all`` the enumeration runs to ``max_subset_size`` and every
    colliding pair is kept in ``report.collisions``.
    """
    pts = _pts(patch)
    if len(pts) > MAX_PATCH:
        raise ValueError(f"patch has {len(pts)} points; the oracle is limited to {MAX_PATCH}")
    dirs = [d if isinstance(d, Direction) else Direction(d) for d in dirs]
    t0 = time.perf_counter()
    geo = _Patch(pts)
    n = geo.n
    # one fingerprint slot per (direction, line)
    slot_of = []
    n_slots = 0
    for d in dirs:
        ids = {}
        row = []
        for p in geo.pts:
            k = line_key(p, d)
            if k not in ids:
                ids[k] = n_slots + len(ids)
            row.append(ids[k])
        n_slots += len(ids)
        slot_of.append(row)
    point_slots = [tuple(slot_of[j][i] for j in range(len(dirs))) for i in range(n)]

    def extend_fp(fp, i):
        fp = list(fp)
        for s in point_slots[i]:
            fp[s] += 1
        return tuple(fp)

    examined = 0
    level = {}
    empty = (0,) * n_slots
    for i in range(n):
        level[1 << i] = extend_fp(empty, i)
    sizes = []
    timed_out = False
    found = None
    pairs = []
    size = 1
    while level:
        sizes.append(len(level))
        index = {}
        for mask, fp in level.items():
            examined += 1
            group = index.setdefault(fp, [])
            for other in group:
                pairs.append((other, mask))
                if found is None:
                    found = (other, mask)
            group.append(mask)
            if found and not collect_all:
                break
        if (found and not collect_all) or size >= max_subset_size:
            break
        if time.perf_counter() - t0 > budget:
            timed_out = True
            break
        nxt = {}
        for mask, fp in level.items():
            for i in range(n):
                bit = 1 << i
                if mask & bit:
                    continue
                new = mask | bit
                if new in nxt:
                    continue
                if geo.closure(new) == new:
                    nxt[new] = extend_fp(fp, i)
            if time.perf_counter() - t0 > budget:
                timed_out = True
                break
        if timed_out:
            break
        level = nxt
        size += 1

    stats = {
        "subsets_examined": examined,
        "subsets_per_size": sizes,
        "elapsed_s": time.perf_counter() - t0,
    }
    stats["collisions"] = len(pairs)
    if found is None:
        return CollisionReport(False, None, dirs, stats, exhaustive=not timed_out)

    def as_points(m):
        return [geo.pts[i] for i in range(n) if m >> i & 1]

    pair = (as_points(found[0]), as_points(found[1]))
    if not (xrays_equal(pair[0], pair[1], dirs) and is_convex_subset(pair[0], pts) and is_convex_subset(pair[1], pts)):
        raise AssertionError("fingerprint collision failed exact re-verification")
    report = CollisionReport(True, pair, dirs, stats, exhaustive=not timed_out)
    if collect_all:
        report.collisions = [(as_points(a), as_points(b)) for a, b in pairs]
    return report
