"""U-polygon constructions: the regular N-gon with N attached translates,
its two-colouring, homothetic embedding into a patch, and the 3D
great-rhombicosidodecahedron example.
"""

from __future__ import annotations

import itertools
from collections import defaultdict, deque
from dataclasses import dataclass, field

import numpy as np

from .exactnum import CycNum, FieldTag, _lcm
from .geometry import Direction, Point, PointSet, convex_hull, in_hull, line_key
from .tomo import verify_u_polygon, xrays_equal

__all__ = [
    "UPolygonInstance",
    "Homothety",
    "build_regular_upolygon",
    "regular_directions",
    "color_vertices",
    "embed_homothety",
    "embed_instance",
    "scaling_unit",
    "great_rhombicosidodecahedron",
    "icosahedral_axes",
    "demo_3d_upolyhedron",
    "Demo3DReport",
]


@dataclass
class UPolygonInstance:
    tag: FieldTag
    hull: list
    directions: list
    white: list
    grey: list
    interior_lattice: PointSet = None
    coloring_strategy: str = "alternation"

    def verify(self):
        return {
            "u_polygon": verify_u_polygon(self.hull, self.directions),
            "equal_xrays": xrays_equal(self.white, self.grey, self.directions),
            "balanced": len(self.white) == len(self.grey),
        }

    def to_json(self):
        out = {
            "n": self.tag.n,
            "N": self.tag.N,
            "vertices": [p.to_json() for p in self.hull],
            "directions": [d.to_json() for d in self.directions],
            "white": [p.to_json() for p in self.white],
            "grey": [p.to_json() for p in self.grey],
            "coloring": self.coloring_strategy,
        }
        if self.interior_lattice is not None:
            out["interior"] = [p.to_json() for p in self.interior_lattice]
        out["verification"] = self.verify()
        return out


def regular_directions(tag):
    """The N directions e^{h pi i / N}, as exact vectors in Q(zeta_N, i)."""
    N = tag.N
    M = _lcm(N, 4)
    out = []
    for h in range(N):
        if h % 2 == 0:
            w = CycNum.zeta(M, (h // 2) * M // N)
        else:
            # zeta_N^a + zeta_N^(a+1) points along e^{(2a+1) pi i / N}
            a = (h - 1) // 2
            w = CycNum.zeta(M, a * M // N) + CycNum.zeta(M, (a + 1) * M // N)
        out.append(Direction(w))
    return out


def build_regular_upolygon(tag):
    """Regular N-gon R with a translate attached across every edge; hull and colouring."""
    if isinstance(tag, int):
        tag = FieldTag(tag)
    N = tag.N
    M = _lcm(N, 4)
    verts = [CycNum.zeta(M, k * M // N) for k in range(N)]
    pts = set(Point(v) for v in verts)
    for k in range(N):
        shift = verts[k] + verts[(k + 1) % N]
        pts.update(Point(v + shift) for v in verts)
    hull = convex_hull(pts)
    dirs = regular_directions(tag)
    white, grey, strategy = color_vertices(hull, dirs)
    return UPolygonInstance(tag, hull, dirs, white, grey, None, strategy)


def color_vertices(hull, dirs):
    """Split hull vertices into two classes with equal X-rays.

    Alternation around the hull is tried first; otherwise the graph that
    joins the two vertices on each direction line is two-coloured.
    Returns (white, grey, strategy).
    """
    hull = list(hull)
    if len(hull) % 2:
        raise ValueError("a U-polygon colouring needs an even number of vertices")
    if not verify_u_polygon(hull, dirs):
        raise ValueError("not a U-polygon for these directions")
    white, grey = hull[0::2], hull[1::2]
    if xrays_equal(white, grey, dirs):
        return white, grey, "alternation"
    adj = defaultdict(set)
    for d in dirs:
        lines = defaultdict(list)
        for i, v in enumerate(hull):
            lines[line_key(v, d)].append(i)
        for members in lines.values():
            for a, b in zip(members, members[1:]):
                adj[a].add(b)
                adj[b].add(a)
    colour = {}
    for s in range(len(hull)):
        if s in colour:
            continue
        colour[s] = 0
        queue = deque([s])
        while queue:
            a = queue.popleft()
            for b in adj[a]:
                if b not in colour:
                    colour[b] = 1 - colour[a]
                    queue.append(b)
                elif colour[b] == colour[a]:
                    raise ValueError("no two-colouring with equal X-rays exists")
    white = [v for i, v in enumerate(hull) if colour[i] == 0]
    grey = [v for i, v in enumerate(hull) if colour[i] == 1]
    if len(white) != len(grey) or not xrays_equal(white, grey, dirs):
        raise ValueError("no two-colouring with equal X-rays exists")
    return white, grey, "matching"


@dataclass(frozen=True)
class Homothety:
    lam: CycNum
    t: CycNum

    def __post_init__(self):
        if not self.lam.is_real() or self.lam.sign() <= 0:
            raise ValueError("homothety scale must be a positive real")

    def __call__(self, p):
        z = p.z if isinstance(p, Point) else p
        return Point(self.lam * z + self.t)

    def to_json(self):
        return {"lambda": self.lam.to_json(), "t": self.t.to_json()}


def scaling_unit(n):
    """A fundamental real unit of Q(zeta_n) used for the scale ladder (1 if none)."""
    N = _lcm(n, 2)
    if N == 10:
        return 1 + CycNum.zeta(5) + CycNum.zeta(5, 4)
    if N == 8:
        return 1 + CycNum.zeta(8) + CycNum.zeta(8, 7)
    if N == 12:
        return 2 + CycNum.zeta(12) + CycNum.zeta(12, 11)
    return CycNum.rational(1, 1)


def _scale_ladder(n, count):
    u = scaling_unit(n)
    if u == 1:
        cands = [CycNum.rational(1, k) for k in range(1, count + 1)]
    else:
        cands = [u ** j * k for j in range(0, count) for k in range(1, count + 1)]
    cands.sort(key=lambda x: (float(x), x.to_json()["coeffs"]))
    out = []
    for c in cands:
        if c not in out:
            out.append(c)
    return out[:count]


def _as_pointset(patch):
    # accepts a PointSet or a generated Patch
    return patch.points if hasattr(patch, "spec") else patch


def embed_homothety(f, patch, attempts=24):
    """Find z -> lam z + t mapping every point of f into the patch, or None."""
    fpts = [p if isinstance(p, Point) else Point(p) for p in (f.points if isinstance(f, PointSet) else f)]
    patch = _as_pointset(patch)
    ppts = list(patch.points)
    if not fpts:
        return Homothety(CycNum.rational(4, 1), CycNum.rational(4, 0))
    pset = set(ppts)
    n = patch.tag.n
    anchor = fpts[0]
    for lam in _scale_ladder(n, attempts):
        base = lam * anchor.z
        for p in ppts:
            t = p.z - base
            h = Homothety(lam, t)
            if all(h(q) in pset for q in fpts[1:]):
                return h
    return None


def embed_instance(inst, patch, attempts=24):
    """Map a constructed instance into a patch and collect the patch points it encloses.

    Returns (instance, homothety), or None if no homothety was found.
    """
    h = embed_homothety(inst.hull, patch, attempts)
    if h is None:
        return None
    patch = _as_pointset(patch)
    hull = [h(p) for p in inst.hull]
    region = convex_hull(hull)
    verts = set(hull)
    interior = [q for q in patch.points if q not in verts and in_hull(region, q)]
    return UPolygonInstance(
        inst.tag,
        hull,
        inst.directions,
        [h(p) for p in inst.white],
        [h(p) for p in inst.grey],
        PointSet(inst.tag, interior),
        inst.coloring_strategy,
    ), h


# --- three dimensions -----------------------------------------------------

PHI = (1 + 5**0.5) / 2


def _even_perms(v):
    x, y, z = v
    return [(x, y, z), (y, z, x), (z, x, y)]


def _signed(v):
    out = set()
    for signs in itertools.product((1, -1), repeat=3):
        out.add(tuple(s * c for s, c in zip(signs, v)))
    return out


def great_rhombicosidodecahedron():
    """The 120 vertices, scaled onto the unit sphere."""
    p = PHI
    base = [
        (1 / p, 1 / p, 3 + p),
        (2 / p, p, 1 + 2 * p),
        (1 / p, p * p, -1 + 3 * p),
        (2 * p - 1, 2, 2 + p),
        (p, 3, 2 * p),
    ]
    pts = set()
    for b in base:
        for s in _signed(b):
            for q in _even_perms(s):
                pts.add(tuple(round(c, 12) for c in q))
    arr = np.array(sorted(pts))
    norms = np.linalg.norm(arr, axis=1)
    return arr / norms.max(), norms


def icosahedral_axes():
    """Unit vectors of the 6 five-fold, 10 three-fold and 15 two-fold axes."""
    p = PHI
    ico = set()
    for s in _signed((0, p, 1)):
        ico.update(_even_perms(s))
    ico = np.array(sorted(ico))
    d = np.linalg.norm(ico[:, None] - ico[None], axis=2)
    edge = d[d > 1e-9].min()
    adj = np.abs(d - edge) < 1e-9
    edges = [(i, j) for i in range(12) for j in range(i + 1, 12) if adj[i, j]]
    faces = [(i, j, k) for i, j in edges for k in range(j + 1, 12) if adj[i, k] and adj[j, k]]

    def axes(vecs):
        out = []
        for v in vecs:
            v = v / np.linalg.norm(v)
            if not any(abs(abs(v @ w) - 1) < 1e-9 for w in out):
                out.append(v)
        return out

    return {
        "five": axes(ico),
        "three": axes([ico[i] + ico[j] + ico[k] for i, j, k in faces]),
        "two": axes([ico[i] + ico[j] for i, j in edges]),
    }


def _partner_lines(verts, u, tol):
    """Group vertices into lines parallel to u; None if some line has one vertex."""
    u = u / np.linalg.norm(u)
    proj = verts - np.outer(verts @ u, u)
    dist = np.linalg.norm(proj[:, None] - proj[None], axis=2)
    near = dist < tol
    lines, seen = [], np.zeros(len(verts), bool)
    for i in range(len(verts)):
        if seen[i]:
            continue
        members = np.nonzero(near[i])[0]
        seen[members] = True
        if len(members) < 2:
            return None
        lines.append(list(members))
    return lines


def _general_position(dirs, tol):
    for a, b, c in itertools.combinations(dirs, 3):
        if abs(np.linalg.det(np.array([a, b, c]))) < tol:
            return False
    return True


@dataclass
class Demo3DReport:
    identified: bool
    vertex_count: int
    direction_set: str = None
    directions: list = field(default_factory=list)
    general_position: bool = False
    u_polyhedron: bool = False
    equal_xrays: bool = False
    white: list = field(default_factory=list)
    grey: list = field(default_factory=list)
    candidates_tried: int = 0
    failures: list = field(default_factory=list)
    message: str = ""

    def to_json(self):
        return {
            "identified": self.identified,
            "vertex_count": self.vertex_count,
            "direction_set": self.direction_set,
            "directions": [[round(float(c), 12) for c in d] for d in self.directions],
            "general_position": self.general_position,
            "u_polyhedron": self.u_polyhedron,
            "equal_xrays": self.equal_xrays,
            "white_count": len(self.white),
            "grey_count": len(self.grey),
            "candidates_tried": self.candidates_tried,
            "failures": self.failures,
            "message": self.message,
        }


def _two_colour(n, line_sets):
    adj = defaultdict(set)
    for lines in line_sets:
        for members in lines:
            for a, b in zip(members, members[1:]):
                adj[a].add(b)
                adj[b].add(a)
    colour = {}
    for s in range(n):
        if s in colour:
            continue
        colour[s] = 0
        queue = deque([s])
        while queue:
            a = queue.popleft()
            for b in adj[a]:
                if b not in colour:
                    colour[b] = 1 - colour[a]
                    queue.append(b)
                elif colour[b] == colour[a]:
                    return None
    return colour


def demo_3d_upolyhedron(tolerance=1e-9):
    """Search icosahedral axis sets for six directions making the great
    rhombicosidodecahedron a U-polyhedron with a balanced two-colouring."""
    if tolerance <= 0:
        raise ValueError("tolerance must be positive")
    verts, _ = great_rhombicosidodecahedron()
    axes = icosahedral_axes()
    line_cache = {}

    def lines_for(kind, i):
        key = (kind, i)
        if key not in line_cache:
            line_cache[key] = _partner_lines(verts, axes[kind][i], tolerance)
        return line_cache[key]

    candidates = [("five-fold axes", "five", tuple(range(6)))]
    for kind, label in (("three", "three-fold axes"), ("two", "two-fold axes")):
        for combo in itertools.combinations(range(len(axes[kind])), 6):
            candidates.append((label, kind, combo))
    report = Demo3DReport(False, len(verts))
    for label, kind, combo in candidates:
        report.candidates_tried += 1
        dirs = [axes[kind][i] for i in combo]
        if not _general_position(dirs, 1e-6):
            continue
        line_sets = [lines_for(kind, i) for i in combo]
        if any(ls is None for ls in line_sets):
            bad = next(i for i, ls in zip(combo, line_sets) if ls is None)
            msg = f"{label}: axis {bad} has a line through a single vertex"
            if msg not in report.failures:
                report.failures.append(msg)
            continue
        colour = _two_colour(len(verts), line_sets)
        if colour is None:
            report.failures.append(f"{label} {combo}: no two-colouring")
            continue
        white = [i for i in range(len(verts)) if colour[i] == 0]
        grey = [i for i in range(len(verts)) if colour[i] == 1]
        equal = all(
            all(sum(colour[v] == 0 for v in members) * 2 == len(members) for members in lines)
            for lines in line_sets
        )
        if not equal or len(white) != len(grey):
            report.failures.append(f"{label} {combo}: colour classes differ in some X-ray")
            continue
        report.identified = True
        report.direction_set = f"{label} {list(combo)}"
        report.directions = dirs
        report.general_position = True
        report.u_polyhedron = True
        report.equal_xrays = True
        report.white = [verts[i] for i in white]
        report.grey = [verts[i] for i in grey]
        report.message = "U-polyhedron verified"
        return report
    report.message = "direction set not identified"
    return report
