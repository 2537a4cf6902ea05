"""Maximal direction sets whose angle-ordered cross ratios all lie in the
forbidden set, the bound b_n they give, and the magic number m_n.

Direction sets are normalised so that three of their slopes are 0, 1 and
infinity; every further slope t then satisfies <0,1,t,inf> (angle ordered)
in C, which leaves a finite candidate pool.  The pool is searched
exhaustively with a colouring bound on the pair-compatibility graph.
"""

from __future__ import annotations

import bisect
import math
import time
from dataclasses import dataclass, field
from itertools import combinations

from .crossratio import INF, as_ext_real, cross_ratio, enumerate_cross_ratio_set
from .exactnum import CycNum, FieldTag

__all__ = [
    "SlopeSet",
    "BoundResult",
    "angle_order",
    "angle_key",
    "candidate_slopes",
    "max_admissible_set",
    "magic_number",
    "MagicResult",
    "reference_slopes",
    "cross_ratio_profile",
    "witness_matches_regular",
    "projectively_regular",
    "all_quadruples_admissible",
    "LARGE_CONDUCTOR",
]

LARGE_CONDUCTOR = 600


class _AngleKey:
    __slots__ = ("t", "cls")

    def __init__(self, t):
        self.t = t
        if t is INF:
            self.cls = 1
        else:
            self.cls = 0 if t.sign() >= 0 else 2

    def __lt__(self, other):
        if self.cls != other.cls:
            return self.cls < other.cls
        if self.cls == 1:
            return False
        return self.t < other.t


def angle_key(t):
    return _AngleKey(as_ext_real(t))


def angle_order(slopes):
    """Sort slopes by the angle in [0, pi) of their direction."""
    ts = [as_ext_real(t) for t in slopes]
    if len(set(ts)) != len(ts):
        raise ValueError("angle_order needs pairwise distinct slopes")
    return sorted(ts, key=_AngleKey)


@dataclass
class SlopeSet:
    tag: FieldTag
    slopes: list

    def __post_init__(self):
        self.slopes = angle_order(self.slopes)

    def __len__(self):
        return len(self.slopes)

    def to_json(self):
        return [encode_slope(t) for t in self.slopes]


def encode_slope(t):
    if t is INF:
        return "inf"
    return t.to_json()


@dataclass
class BoundResult:
    tag: FieldTag
    bound: int
    witness: SlopeSet
    elapsed: float
    exhaustive: bool
    nodes: int = 0
    pool_size: int = 0
    diagnostics: dict = field(default_factory=dict)


def candidate_slopes(C):
    """{0, 1, inf} plus c/(c-1), (c-1)/c, 1/(1-c) for every c in C."""
    if not len(C.values):
        raise ValueError("empty cross-ratio set")
    m = C.values[0].m
    zero, one = CycNum.rational(m, 0), CycNum.rational(m, 1)
    out = [zero, one, INF]
    seen = {zero, one}
    for c in C.values:
        for t in (c / (c - one), (c - one) / c, one / (one - c)):
            if t not in seen:
                seen.add(t)
                out.append(t)
    return out


def _float_slope(t):
    return math.inf if t is INF else float(t)


def _float_cr(a, b, c, d):
    if a == math.inf:
        return (d - b) / (c - b)
    if b == math.inf:
        return (c - a) / (d - a)
    if c == math.inf:
        return (d - b) / (d - a)
    if d == math.inf:
        return (c - a) / (c - b)
    return (c - a) * (d - b) / ((c - b) * (d - a))


def _cr_parts(a, b, c, d):
    """Numerator and denominator of the cross ratio, without dividing."""
    if a is INF:
        return d - b, c - b
    if b is INF:
        return c - a, d - a
    if c is INF:
        return d - b, d - a
    if d is INF:
        return c - a, c - b
    return (c - a) * (d - b), (c - b) * (d - a)


class _Membership:
    """Exact test 'cross ratio of an angle-ordered 4-tuple lies in C'.

    A float screen only ever rejects tuples whose cross ratio is far from
    every element of C; anything close is decided by exact arithmetic.
    """

    def __init__(self, C, rel_tol=1e-7):
        self.values = list(C.values)
        self.fvals = [float(v) for v in self.values]
        self.rel_tol = rel_tol
        one = CycNum.rational(self.values[0].m, 1)
        rot = [c / (c - one) for c in self.values]
        order = sorted(range(len(rot)), key=lambda i: float(rot[i]))
        self.rot_values = [rot[i] for i in order]
        self.rot_fvals = [float(rot[i]) for i in order]
        self.exact_checks = 0

    def _near(self, fvals, x):
        tol = self.rel_tol * max(1.0, abs(x))
        lo = bisect.bisect_left(fvals, x - tol)
        hi = bisect.bisect_right(fvals, x + tol)
        return range(lo, hi)

    def test(self, ts, fts, rotated=False):
        x = _float_cr(*fts)
        if not math.isfinite(x):
            return False
        vals, fvals = (self.rot_values, self.rot_fvals) if rotated else (self.values, self.fvals)
        idx = self._near(fvals, x)
        if not idx:
            return False
        num, den = _cr_parts(*ts)
        for i in idx:
            self.exact_checks += 1
            if num == vals[i] * den:
                return True
        return False


def all_quadruples_admissible(slopes, C):
    """Independent re-check: every angle-ordered 4-subset has cross ratio in C."""
    ordered = angle_order(slopes)
    members = set(C.values)
    for quad in combinations(ordered, 4):
        if cross_ratio(*quad) not in members:
            return False
    return True


def max_admissible_set(tag, budget=300.0, allow_large=False, cset=None, extra_candidates=()):
    """Largest normalised slope set with every angle-ordered 4-subset in C.

    Returns a BoundResult; ``exhaustive`` is False when the time budget ran
    out, in which case ``bound`` is only a lower bound.
    """
    if isinstance(tag, int):
        tag = FieldTag(tag)
    if tag.m > LARGE_CONDUCTOR and not allow_large:
        raise ValueError(f"conductor {tag.m} > {LARGE_CONDUCTOR}; pass allow_large=True")
    t0 = time.perf_counter()
    C = cset if cset is not None else enumerate_cross_ratio_set(tag)
    conductor = C.values[0].m
    pool = candidate_slopes(C)
    seen = set(t for t in pool if t is not INF)
    for t in extra_candidates:
        t = as_ext_real(t)
        if t is INF or t in seen:
            continue
        t = t.lift(conductor) if conductor % t.m == 0 else t
        seen.add(t)
        pool.append(t)
    pool = angle_order(pool)
    fpool = [_float_slope(t) for t in pool]
    anchors = [i for i, t in enumerate(pool) if t is INF or t == 0 or t == 1]
    member = _Membership(C)
    memo = {}
    diag = {"literal_rejections": 0, "rotation_acceptances": 0}

    def ok(quad):
        quad = tuple(sorted(quad))
        r = memo.get(quad)
        if r is None:
            ts = [pool[i] for i in quad]
            fts = [fpool[i] for i in quad]
            r = member.test(ts, fts)
            if not r:
                diag["literal_rejections"] += 1
                if member.test(ts, fts, rotated=True):
                    diag["rotation_acceptances"] += 1
            memo[quad] = r
        return r

    a0, a1, a2 = anchors
    others = [i for i in range(len(pool)) if i not in anchors and ok((a0, a1, a2, i))]
    anchor_pairs = [(a0, a1), (a0, a2), (a1, a2)]
    adj = {v: 0 for v in others}
    for v, w in combinations(others, 2):
        if all(ok((a, b, v, w)) for a, b in anchor_pairs):
            adj[v] |= 1 << w
            adj[w] |= 1 << v

    best = [list(anchors)]
    state = {"nodes": 0, "timed_out": False}
    deadline = t0 + budget

    def colour_sort(P):
        # greedy sequential colouring; returns vertices with colour numbers
        remaining = list(P)
        order, colours = [], []
        k = 0
        while remaining:
            k += 1
            cls_mask = 0
            rest = []
            for v in remaining:
                if adj[v] & cls_mask:
                    rest.append(v)
                else:
                    cls_mask |= 1 << v
                    order.append(v)
                    colours.append(k)
            remaining = rest
        return order, colours

    def expand(S, P):
        state["nodes"] += 1
        if time.perf_counter() > deadline:
            state["timed_out"] = True
            return
        order, colours = colour_sort(P)
        alive = set(P)
        for idx in range(len(order) - 1, -1, -1):
            if len(S) + colours[idx] <= len(best[0]):
                return
            v = order[idx]
            alive.discard(v)
            S2 = S + [v]
            pairs = [(a, b) for a, b in combinations(S, 2) if not (a in anchors and b in anchors)]
            P2 = [
                w
                for w in P
                if w in alive and adj[v] >> w & 1 and all(ok((a, b, v, w)) for a, b in pairs)
            ]
            if len(S2) > len(best[0]):
                best[0] = list(S2)
            if P2:
                expand(S2, P2)
            if state["timed_out"]:
                return

    expand(list(anchors), others)
    witness = SlopeSet(tag, [pool[i] for i in best[0]])
    diag["exact_checks"] = member.exact_checks
    return BoundResult(
        tag=tag,
        bound=len(best[0]),
        witness=witness,
        elapsed=time.perf_counter() - t0,
        exhaustive=not state["timed_out"],
        nodes=state["nodes"],
        pool_size=len(pool),
        diagnostics=diag,
    )


@dataclass
class MagicResult:
    n: int
    magic: int
    exhaustive: bool
    note: str
    bound: BoundResult = None


def magic_number(tag, budget=300.0, allow_large=False, bound=None):
    """Least m such that any m pairwise nonparallel directions determine convex sets.

    Computed as the direction bound plus one.  For the square lattice this
    gives 6 + 1 = 7, matching the known lattice value.
    """
    if isinstance(tag, int):
        tag = FieldTag(tag)
    res = bound if bound is not None else max_admissible_set(tag, budget, allow_large)
    note = "bound + 1" if res.exhaustive else "bound + 1 (search not exhaustive: lower bound only)"
    if tag.N == 4 and res.exhaustive:
        note += "; agrees with the square-lattice value 7"
    return MagicResult(n=tag.n, magic=res.bound + 1, exhaustive=res.exhaustive, note=note, bound=res)


def reference_slopes(tag):
    """Exact slopes tan(h pi / N), h = 0..N-1, of the regular direction fan."""
    if isinstance(tag, int):
        tag = FieldTag(tag)
    N, m = tag.N, tag.m
    i = CycNum.zeta(m, m // 4)
    out = []
    for h in range(N):
        w = CycNum.zeta(m, h * m // (2 * N))
        re2 = w + w.conjugate()
        if re2.is_zero():
            out.append(INF)
        else:
            out.append((-i) * (w - w.conjugate()) / re2)
    return out


def _canonical_cr(lam):
    # rotating an angle-ordered 4-tuple by one step maps lam to lam/(lam-1)
    other = lam / (lam - 1)
    return lam if lam <= other else other


def cross_ratio_profile(slopes):
    """Sorted multiset of rotation-invariant cross ratios over all 4-subsets."""
    ordered = angle_order(slopes)
    vals = [_canonical_cr(cross_ratio(*q)) for q in combinations(ordered, 4)]
    vals.sort(key=lambda v: (float(v), v.to_json()["coeffs"] if isinstance(v, CycNum) else 0))
    return vals


def witness_matches_regular(witness, tag=None):
    """True iff the witness has the cross-ratio profile of the regular fan e^{h pi i/N}."""
    if isinstance(witness, SlopeSet):
        tag, slopes = witness.tag, witness.slopes
    else:
        slopes = list(witness)
    if isinstance(tag, int):
        tag = FieldTag(tag)
    if len(slopes) != tag.N:
        raise ValueError(f"witness has {len(slopes)} slopes, expected N = {tag.N}")
    ref = reference_slopes(tag)
    a = cross_ratio_profile(slopes)
    b = cross_ratio_profile(ref)
    return len(a) == len(b) and all(x == y for x, y in zip(a, b))


def projectively_regular(witness, tag=None):
    """True iff a projective map sends the witness onto the regular fan
    preserving cyclic order (possibly reversed)."""
    if isinstance(witness, SlopeSet):
        tag, slopes = witness.tag, witness.slopes
    else:
        slopes = angle_order(witness)
    if isinstance(tag, int):
        tag = FieldTag(tag)
    ref = reference_slopes(tag)
    k = len(ref)
    if len(slopes) != k:
        return False
    target = [cross_ratio(ref[0], ref[1], ref[2], ref[j]) for j in range(3, k)]
    for seq in (slopes, slopes[::-1]):
        for s in range(k):
            rot = seq[s:] + seq[:s]
            if all(cross_ratio(rot[0], rot[1], rot[2], rot[j]) == target[j - 3] for j in range(3, k)):
                return True
    return False
