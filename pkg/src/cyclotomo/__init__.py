"""Exact cyclotomic arithmetic, cross-ratio sets, direction bounds and
discrete tomography of convex sets in cyclotomic model sets."""

from .exactnum import CycNum, FieldTag, real_compare
from .crossratio import INF, CrossRatioSet, QuadrupleIndex, cross_ratio, enumerate_cross_ratio_set, quadruple_value
from .dirsearch import (
    BoundResult,
    MagicResult,
    SlopeSet,
    magic_number,
    max_admissible_set,
    projectively_regular,
    witness_matches_regular,
)
from .geometry import Direction, Point, PointSet, convex_hull, gaussian, is_convex_subset
from .tomo import CollisionReport, uniqueness_oracle, verify_u_polygon, xray, xrays_equal
from .modelset import Patch, PatchSpec, WindowSpec, generate_patch, star_map, window_contains
from .construct import (
    Homothety,
    UPolygonInstance,
    build_regular_upolygon,
    color_vertices,
    demo_3d_upolyhedron,
    embed_homothety,
    embed_instance,
)

__version__ = "0.1.0"

__all__ = [
    "CycNum", "FieldTag", "real_compare",
    "INF", "CrossRatioSet", "QuadrupleIndex", "cross_ratio", "enumerate_cross_ratio_set", "quadruple_value",
    "BoundResult", "MagicResult", "SlopeSet", "magic_number", "max_admissible_set",
    "projectively_regular", "witness_matches_regular",
    "Direction", "Point", "PointSet", "convex_hull", "gaussian", "is_convex_subset",
    "CollisionReport", "uniqueness_oracle", "verify_u_polygon", "xray", "xrays_equal",
    "Patch", "PatchSpec", "WindowSpec", "generate_patch", "star_map", "window_contains",
    "Homothety", "UPolygonInstance", "build_regular_upolygon", "color_vertices",
    "demo_3d_upolyhedron", "embed_homothety", "embed_instance",
]
