"""Polygon type and its classification predicates.

The heavy predicates (`is_simple`, `convex_hull`) run on a lazily computed
integer rescaling of the vertex coordinates: multiplying every coordinate by
the common denominator preserves all sign tests exactly while keeping the
O(n^2) inner loops in plain integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .geom import GeometryError, Point, squared_distance


class PolygonError(GeometryError):
    """Invalid polygon construction."""


class NotSimpleError(GeometryError):
    """Operation defined only for simple polygons."""


class Polygon:
    """Cyclic sequence of at least three exact vertices.

    Indexing is modular: ``P[i]`` resolves ``i % len(P)``, so ``P[-1]`` is
    the last vertex. Adjacent vertices must differ (no zero-length edges);
    coincident *non-adjacent* vertices are allowed -- they simply make the
    polygon non-simple. All interfaces here are 0-based.
    """

    __slots__ = ("vertices", "_scaled")

    def __init__(self, vertices):
        pts = tuple(v if isinstance(v, Point) else Point(*v) for v in vertices)
        if len(pts) < 3:
            raise PolygonError(f"polygon needs at least 3 vertices, got {len(pts)}")
        for i, p in enumerate(pts):
            if p == pts[(i + 1) % len(pts)]:
                raise PolygonError(f"zero-length edge at index {i}")
        self.vertices = pts
        self._scaled = None

    def __len__(self):
        return len(self.vertices)

    def __getitem__(self, i: int) -> Point:
        return self.vertices[i % len(self.vertices)]

    def __iter__(self):
        return iter(self.vertices)

    def __eq__(self, other):
        if not isinstance(other, Polygon):
            return NotImplemented
        return self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        inner = ", ".join(repr(p) for p in self.vertices)
        return f"Polygon([{inner}])"

    def replace_vertex(self, i: int, p: Point) -> "Polygon":
        """New polygon with vertex ``i % n`` replaced by ``p``."""
        verts = list(self.vertices)
        verts[i % len(verts)] = p
        return Polygon(verts)

    def _int_coords(self):
        """Vertices scaled by the common denominator, as plain int pairs."""
        if self._scaled is None:
            scale = 1
            for p in self.vertices:
                scale = lcm(scale, p.x.denominator, p.y.denominator)
            self._scaled = tuple(
                (p.x.numerator * (scale // p.x.denominator),
                 p.y.numerator * (scale // p.y.denominator))
                for p in self.vertices)
        return self._scaled


@dataclass(frozen=True)
class ClassificationReport:
    simple: bool
    convex: bool
    strictly_convex: bool
    scalene: bool
    weakly_scalene: bool
    hairpin_indices: tuple[int, ...]


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _sign(v):
    return (v > 0) - (v < 0)


def _segments_touch(p1, p2, q1, q2) -> bool:
    """Closed-segment intersection on integer points."""
    if (max(p1[0], p2[0]) < min(q1[0], q2[0])
            or max(q1[0], q2[0]) < min(p1[0], p2[0])
            or max(p1[1], p2[1]) < min(q1[1], q2[1])
            or max(q1[1], q2[1]) < min(p1[1], p2[1])):
        return False
    o1 = _sign(_cross(p1, p2, q1))
    o2 = _sign(_cross(p1, p2, q2))
    o3 = _sign(_cross(q1, q2, p1))
    o4 = _sign(_cross(q1, q2, p2))
    if o1 != o2 and o3 != o4:
        return True
    def between(a, b, p):
        return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
                and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))
    if o1 == 0 and between(p1, p2, q1):
        return True
    if o2 == 0 and between(p1, p2, q2):
        return True
    if o3 == 0 and between(q1, q2, p1):
        return True
    if o4 == 0 and between(q1, q2, p2):
        return True
    return False


def is_simple(P: Polygon) -> bool:
    """True iff all vertices are distinct, non-adjacent edges share no point,
    and adjacent edges share exactly their common endpoint (no collinear
    back-tracking)."""
    pts = P._int_coords()
    n = len(pts)
    if len(set(pts)) != n:
        return False
    for i in range(n):
        a, v, b = pts[i - 1], pts[i], pts[(i + 1) % n]
        # collinear neighbors pointing the same way overlap along the line
        if _cross(v, a, b) == 0 and \
                (a[0] - v[0]) * (b[0] - v[0]) + (a[1] - v[1]) * (b[1] - v[1]) > 0:
            return False
    for i in range(n):
        p1, p2 = pts[i], pts[(i + 1) % n]
        for j in range(i + 2, n):
            if i == 0 and j == n - 1:
                continue
            if _segments_touch(p1, p2, pts[j], pts[(j + 1) % n]):
                return False
    return True


def _turn_census(P: Polygon):
    pts = P._int_coords()
    n = len(pts)
    pos = neg = zero = False
    for i in range(n):
        s = _sign(_cross(pts[i - 1], pts[i], pts[(i + 1) % n]))
        if s > 0:
            pos = True
        elif s < 0:
            neg = True
        else:
            zero = True
    return pos, neg, zero


def is_convex(P: Polygon, strict: bool = False) -> bool:
    """Convexity = simplicity plus uniform turn direction.

    Non-strict mode tolerates zero turns (three consecutive collinear
    vertices); strict mode does not. Self-intersecting polygons with uniform
    turn signs (star traversals) are *not* convex here.
    """
    pos, neg, zero = _turn_census(P)
    if pos and neg:
        return False
    if not pos and not neg:
        return False
    if strict and zero:
        return False
    return is_simple(P)


def squared_edge_lengths(P: Polygon) -> list[Fraction]:
    """Entry i is the exact squared length of edge (p_i, p_{i+1})."""
    n = len(P)
    return [squared_distance(P[i], P[i + 1]) for i in range(n)]


def scalene_flags(P: Polygon) -> tuple[bool, bool]:
    """(scalene, weakly_scalene): no two edges equal / no two consecutive
    edges equal, both over exact squared lengths."""
    sq = squared_edge_lengths(P)
    n = len(sq)
    scalene = len(set(sq)) == n
    weakly = all(sq[i] != sq[(i + 1) % n] for i in range(n))
    return scalene, weakly


def hairpin_indices(P: Polygon) -> set[int]:
    """Indices i whose neighbors p_{i-1} and p_{i+1} coincide."""
    n = len(P)
    return {i for i in range(n) if P[i - 1] == P[i + 1]}


def convex_hull(P: Polygon) -> list[int]:
    """Indices of the strict hull vertices, counterclockwise, starting at the
    smallest participating index. Points interior to hull edges are excluded.
    """
    if not is_simple(P):
        raise NotSimpleError("convex hull requires a simple polygon")
    pts = P._int_coords()
    order = sorted(range(len(pts)), key=lambda i: pts[i])

    def half(indices):
        out = []
        for i in indices:
            while len(out) >= 2 and _cross(pts[out[-2]], pts[out[-1]], pts[i]) <= 0:
                out.pop()
            out.append(i)
        return out

    lower = half(order)
    upper = half(reversed(order))
    hull = lower[:-1] + upper[:-1]
    start = hull.index(min(hull))
    return hull[start:] + hull[:start]


def classify(P: Polygon) -> ClassificationReport:
    simple = is_simple(P)
    pos, neg, zero = _turn_census(P)
    convex = simple and (pos != neg)
    scalene, weakly = scalene_flags(P)
    return ClassificationReport(
        simple=simple,
        convex=convex,
        strictly_convex=convex and not zero,
        scalene=scalene,
        weakly_scalene=weakly,
        hairpin_indices=tuple(sorted(hairpin_indices(P))),
    )
