"""Command-line front end.

Every verb prints exactly one JSON document on stdout; logs go to stderr.
Exit codes: 0 success, 1 failed verification or collision found, 2 invalid
input.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from .construct import UPolygonInstance, build_regular_upolygon, demo_3d_upolyhedron
from .crossratio import INF, enumerate_cross_ratio_set, pretty
from .dirsearch import LARGE_CONDUCTOR, magic_number, max_admissible_set
from .exactnum import CycNum, FieldTag, _lcm
from .geometry import Direction, Point, PointSet
from .modelset import PatchSpec, WindowSpec, generate_patch
from .tomo import MAX_PATCH, uniqueness_oracle, xray

log = logging.getLogger("cyclotomo")

__all__ = ["RenderSpec", "render_svg", "dispatch", "main", "dumps", "load_points", "load_directions"]


class InputError(ValueError):
    """Malformed user input; reported with exit code 2."""


def dumps(obj):
    """Canonical JSON text: parsing and re-dumping gives the same bytes."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True)


# --- SVG --------------------------------------------------------------------


@dataclass(frozen=True)
class RenderSpec:
    width: int = 480
    height: int = 480
    scale: float = None  # units per px; None fits the drawing to the canvas
    palette: dict = field(
        default_factory=lambda: {
            "white": "#ffffff",
            "grey": "#9a9a9a",
            "interior": "#000000",
            "points": "#000000",
            "directions": "#c03020",
            "stroke": "#000000",
        }
    )
    show_directions: bool = True
    point_radius: float = 4.0

    def __post_init__(self):
        if self.width <= 0 or self.height <= 0:
            raise ValueError("canvas dimensions must be positive")
        if self.scale is not None and self.scale <= 0:
            raise ValueError("scale must be positive")


def _g(x):
    v = float(format(x, ".12g"))
    return format(v + 0.0, ".12g")


def render_svg(obj, spec=None):
    """Deterministic SVG of a PointSet or a UPolygonInstance."""
    spec = spec or RenderSpec()
    groups = []
    dirs = []
    if isinstance(obj, UPolygonInstance):
        groups.append(("white", obj.white))
        groups.append(("grey", obj.grey))
        if obj.interior_lattice is not None:
            groups.append(("interior", list(obj.interior_lattice)))
        dirs = obj.directions if spec.show_directions else []
        hull = obj.hull
    else:
        groups.append(("points", list(obj)))
        hull = []
    coords = {name: [complex(p) for p in pts] for name, pts in groups}
    allc = [c for cs in coords.values() for c in cs]
    W, H = spec.width, spec.height
    if allc:
        xs = [c.real for c in allc]
        ys = [c.imag for c in allc]
        cx, cy = (min(xs) + max(xs)) / 2, (min(ys) + max(ys)) / 2
        span = max(max(xs) - min(xs), max(ys) - min(ys), 1e-12)
        centroid = complex(sum(xs) / len(xs), sum(ys) / len(ys))
    else:
        cx = cy = 0.0
        span = 1.0
        centroid = 0j
    scale = spec.scale if spec.scale is not None else span / (0.8 * min(W, H))

    def px(c):
        return (c.real - cx) / scale + W / 2, H / 2 - (c.imag - cy) / scale

    pal = spec.palette
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}">',
        '<g id="content">',
    ]
    if hull:
        pts = " ".join(f"{_g(x)},{_g(y)}" for x, y in (px(complex(p)) for p in hull))
        out.append(f'<polygon class="hull" points="{pts}" fill="none" stroke="{pal["stroke"]}" stroke-width="1"/>')
    for d in dirs:
        w = complex(d.w)
        w /= abs(w)
        ray = 0.6 * span
        x0, y0 = px(centroid - ray * w)
        x1, y1 = px(centroid + ray * w)
        out.append(
            f'<line class="direction" x1="{_g(x0)}" y1="{_g(y0)}" x2="{_g(x1)}" y2="{_g(y1)}" '
            f'stroke="{pal["directions"]}" stroke-width="0.75"/>'
        )
    for name, cs in coords.items():
        fill = pal.get(name, pal["points"])
        for c in cs:
            x, y = px(c)
            out.append(
                f'<circle class="{name}" cx="{_g(x)}" cy="{_g(y)}" r="{_g(spec.point_radius)}" '
                f'fill="{fill}" stroke="{pal["stroke"]}" stroke-width="1"/>'
            )
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


# --- input parsing ------------------------------------------------------------


def _tag(n):
    if n < 3:
        raise InputError(f"--n must be at least 3, got {n}")
    return FieldTag(n)


def _rational(text):
    try:
        q = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"not a rational number: {text!r}") from exc
    return q


def parse_window(text):
    parts = text.split(":")
    try:
        if parts[0] == "disc" and len(parts) == 2:
            return WindowSpec.disc(_rational(parts[1]))
        if parts[0] == "ngon" and len(parts) in (3, 4):
            rot = _rational(parts[3]) if len(parts) == 4 else 0
            return WindowSpec.ngon(int(parts[1]), _rational(parts[2]), rot)
    except ValueError as exc:
        raise InputError(f"bad window {text!r}: {exc}") from exc
    raise InputError(f"bad window {text!r}; expected disc:<r> or ngon:<k>:<r>[:<rot>]")


def _read_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def _element(obj, n):
    # a point is either an integer coefficient vector over Z[zeta_n] or a CycNum document
    if isinstance(obj, dict):
        return CycNum.from_json(obj)
    if isinstance(obj, list) and all(isinstance(c, int) for c in obj):
        if n is None:
            raise InputError("coefficient vectors need a field: add an 'n' key")
        return CycNum(n, obj)
    raise InputError(f"cannot read a field element from {obj!r}")


def load_points(obj):
    """Point set from a patch document, a point-set document or an instance document."""
    try:
        if isinstance(obj, dict):
            n = obj.get("n")
            raw = obj.get("points", obj.get("vertices"))
        else:
            n, raw = None, obj
        if not isinstance(raw, list):
            raise InputError("no point list found")
        pts = [Point(_element(p, n)) for p in raw]
    except InputError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed point data: {exc}") from exc
    if n is None:
        n = _guess_n(pts)
    return PointSet(FieldTag(max(n, 3)), pts)


def _guess_n(pts):
    m = 4
    for p in pts:
        m = _lcm(m, p.z.m)
    return m


def load_directions(obj, n=None):
    try:
        if isinstance(obj, dict):
            n = obj.get("n", n)
            raw = obj.get("directions")
        else:
            raw = obj
        if not isinstance(raw, list) or not raw:
            raise InputError("no direction list found")
        return [Direction(_element(d, n)) for d in raw]
    except InputError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed direction data: {exc}") from exc


def _write(path, text):
    try:
        with open(path, "w") as fh:
            fh.write(text)
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc.strerror}") from exc


# --- verbs --------------------------------------------------------------------


def _cmd_cross_ratio_set(args):
    tag = _tag(args.n)
    C = enumerate_cross_ratio_set(tag)
    log.info("C-set for n=%d: %d values", tag.n, len(C))
    doc = C.to_json()
    if args.out:
        _write(args.out, dumps(doc))
    return doc, 0


def _bound_doc(res):
    return {
        "n": res.tag.n,
        "N": res.tag.N,
        "bound": res.bound,
        "exhaustive": res.exhaustive,
        "witness": res.witness.to_json(),
        "witness_pretty": ["inf" if t is INF else pretty(t) for t in res.witness.slopes],
        "pool_size": res.pool_size,
        "nodes": res.nodes,
        "elapsed_s": round(res.elapsed, 3),
        "diagnostics": res.diagnostics,
    }


def _check_large(tag, allow):
    if tag.m > LARGE_CONDUCTOR and not allow:
        raise InputError(f"conductor {tag.m} exceeds {LARGE_CONDUCTOR}; pass --allow-large")


def _cmd_bound(args):
    tag = _tag(args.n)
    _check_large(tag, args.allow_large)
    res = max_admissible_set(tag, budget=float(args.budget_seconds), allow_large=args.allow_large)
    if not res.exhaustive:
        log.warning("search budget exhausted; %d is a lower bound only", res.bound)
    return _bound_doc(res), 0


def _cmd_magic(args):
    tag = _tag(args.n)
    _check_large(tag, False)
    res = magic_number(tag, budget=float(args.budget_seconds))
    doc = {"n": tag.n, "N": tag.N, "magic": res.magic, "exhaustive": res.exhaustive, "note": res.note}
    if res.bound is not None:
        doc["bound"] = res.bound.bound
    return doc, 0


def _cmd_upolygon(args):
    tag = _tag(args.n)
    inst = build_regular_upolygon(tag)
    doc = inst.to_json()
    if args.json:
        _write(args.json, dumps(doc))
    if args.svg:
        _write(args.svg, render_svg(inst))
    ok = all(doc["verification"].values())
    return doc, 0 if ok else 1


def _cmd_patch(args):
    tag = _tag(args.n)
    window = parse_window(args.window) if args.window else WindowSpec()
    if args.shift:
        parts = args.shift.split(",")
        if len(parts) != 2:
            raise InputError("--shift expects <q>,<q>")
        window = WindowSpec(window.shape, window.radius, window.sides, window.rotation, tuple(_rational(q) for q in parts))
    radius = _rational(args.radius)
    try:
        spec = PatchSpec(tag, radius, window, args.star)
        patch = generate_patch(spec)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    doc = patch.to_json()
    _write(args.out, dumps(doc))
    summary = {
        "n": tag.n,
        "out": args.out,
        "point_count": len(patch.coeffs),
        "boundary_hits": patch.boundary_hits,
        "candidates": patch.stats["candidates"],
    }
    return summary, 0


def _cmd_xray(args):
    obj = _read_json(args.points)
    pts = load_points(obj)
    n = obj.get("n") if isinstance(obj, dict) else None
    try:
        coeffs = [int(c) for c in args.direction.split(",")]
    except ValueError as exc:
        raise InputError("--direction expects comma-separated integers") from exc
    if not any(coeffs):
        raise InputError("zero direction")
    d = Direction(CycNum(n or pts.tag.n, coeffs))
    table = xray(pts, d)
    rows = sorted(table.rows.items(), key=lambda kv: float(kv[0]))
    doc = {
        "direction": d.to_json(),
        "rows": [{"key": k.to_json(), "approx": float(k), "count": c} for k, c in rows],
        "total": table.total(),
    }
    return doc, 0


def _cmd_verify_uniqueness(args):
    obj = _read_json(args.points)
    pts = load_points(obj)
    if len(pts) > MAX_PATCH:
        raise InputError(f"patch has {len(pts)} points; the oracle is limited to {MAX_PATCH}")
    n = obj.get("n") if isinstance(obj, dict) else None
    dirs = load_directions(_read_json(args.directions), n)
    rep = uniqueness_oracle(pts, dirs, max_subset_size=args.max_size, budget=float(args.budget_seconds))
    if not rep.exhaustive:
        log.warning("oracle budget exhausted before all subsets were examined")
    return rep.to_json(), 1 if rep.found else 0


def _cmd_demo3d(args):
    if not args.tolerance > 0:
        raise InputError("--tolerance must be positive")
    rep = demo_3d_upolyhedron(args.tolerance)
    return rep.to_json(), 0


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def build_parser():
    p = _Parser(prog="cyclotomo", description="Cyclotomic cross ratios, direction bounds and discrete tomography.")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    s = sub.add_parser("cross-ratio-set", help="enumerate the cross-ratio set C_m(Q)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--out")
    s.set_defaults(func=_cmd_cross_ratio_set)

    s = sub.add_parser("bound", help="maximum admissible direction set size")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--budget-seconds", type=int, default=300)
    s.add_argument("--allow-large", action="store_true")
    s.set_defaults(func=_cmd_bound)

    s = sub.add_parser("magic", help="number of directions that always determine convex sets")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--budget-seconds", type=int, default=300)
    s.set_defaults(func=_cmd_magic)

    s = sub.add_parser("upolygon", help="regular U-polygon construction (exit 1 if it fails to verify)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--svg")
    s.add_argument("--json")
    s.set_defaults(func=_cmd_upolygon)

    s = sub.add_parser("patch", help="cut-and-project patch")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--radius", required=True)
    s.add_argument("--window")
    s.add_argument("--shift")
    s.add_argument("--star", type=int)
    s.add_argument("--out", required=True)
    s.set_defaults(func=_cmd_patch)

    s = sub.add_parser("xray", help="discrete X-ray of a point set")
    s.add_argument("--points", required=True)
    s.add_argument("--direction", required=True)
    s.set_defaults(func=_cmd_xray)

    s = sub.add_parser("verify-uniqueness", help="search for convex sets with equal X-rays (exit 1 = collision)")
    s.add_argument("--points", required=True)
    s.add_argument("--directions", required=True)
    s.add_argument("--max-size", type=int, default=12)
    s.add_argument("--budget-seconds", type=int, default=60)
    s.set_defaults(func=_cmd_verify_uniqueness)

    s = sub.add_parser("demo3d", help="great rhombicosidodecahedron U-polyhedron check")
    s.add_argument("--tolerance", type=float, default=1e-9)
    s.set_defaults(func=_cmd_demo3d)
    return p


def _threads():
    raw = os.environ.get("CYCLOTOMO_THREADS")
    if raw is None:
        return 1
    try:
        k = int(raw)
    except ValueError as exc:
        raise InputError(f"CYCLOTOMO_THREADS must be a positive integer, got {raw!r}") from exc
    if k < 1:
        raise InputError(f"CYCLOTOMO_THREADS must be a positive integer, got {raw!r}")
    return k


def dispatch(argv=None, stdout=None):
    """Run one verb; returns the exit code."""
    stdout = stdout or sys.stdout
    if not logging.getLogger().handlers and not log.handlers:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter("%(levelname)s %(message)s"))
        log.addHandler(handler)
        log.setLevel(logging.INFO)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        threads = _threads()
        if threads > 1:
            log.info("CYCLOTOMO_THREADS=%d: running single-threaded", threads)
        doc, code = args.func(args)
    except InputError as exc:
        log.error("%s", exc)
        return 2
    except (ValueError, ZeroDivisionError, KeyError, TypeError) as exc:
        log.error("invalid input: %s", exc)
        return 2
    stdout.write(dumps(doc) + "\n")
    stdout.flush()
    return code


def main():
    sys.exit(dispatch())
