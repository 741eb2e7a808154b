"""popkit: exact-arithmetic polygon transformations and convexification search.

All coordinates are exact rationals; pops, popturns, pocket flips and
flipturns map rational polygons to rational polygons, so every result in
this package is bit-exact and every test tolerance-free.
"""

from .geom import (DegenerateLineError, GeometryError, Point, Rational,
                   midpoint, orientation, rational, reflect_across_line,
                   reflect_across_point, segments_intersect, squared_distance)
from .polygon import (ClassificationReport, NotSimpleError, Polygon,
                      PolygonError, classify, convex_hull, hairpin_indices,
                      is_convex, is_simple, scalene_flags, squared_edge_lengths)
from .transforms import (ConvexifyResult, HairpinError, Pocket,
                         StalePocketError, convexify_by_flips, find_pockets,
                         pocket_flip, pocket_flipturn, pop, popturn)
from .alternating import (AlternatingSpec, FamilyError, build,
                          canonical_example, pop_sign, recover_spec,
                          steering_sequence)
from .search import (BIT_SIZE_ABORTED, CONVEXIFIED, DEPTH_EXHAUSTED,
                     PROVEN_IMPOSSIBLE, FamilyReport, SearchOutcome,
                     canonical_key, exhaustive_family_search,
                     search_pop_convexification)
from .document import DocumentError, PolygonDocument, decode, encode
from .svg import render_svg

__version__ = "0.1.0"

__all__ = [
    "AlternatingSpec", "BIT_SIZE_ABORTED", "CONVEXIFIED",
    "ClassificationReport", "ConvexifyResult", "DEPTH_EXHAUSTED",
    "DegenerateLineError", "DocumentError", "FamilyError", "FamilyReport",
    "GeometryError", "HairpinError", "NotSimpleError", "PROVEN_IMPOSSIBLE",
    "Pocket", "Point", "Polygon", "PolygonDocument", "PolygonError",
    "Rational", "SearchOutcome", "StalePocketError", "build",
    "canonical_example", "canonical_key", "classify", "convex_hull",
    "convexify_by_flips", "decode", "encode", "exhaustive_family_search",
    "find_pockets", "hairpin_indices", "is_convex", "is_simple", "midpoint",
    "orientation", "pocket_flip", "pocket_flipturn", "pop", "pop_sign",
    "popturn", "rational", "recover_spec", "reflect_across_line",
    "reflect_across_point", "render_svg", "scalene_flags",
    "search_pop_convexification", "segments_intersect",
    "squared_distance", "squared_edge_lengths", "steering_sequence",
]
