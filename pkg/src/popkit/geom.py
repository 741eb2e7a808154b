"""Exact planar primitives: rational points, reflections, sign predicates.

Every coordinate is a `fractions.Fraction`, so everything here is closed
over the rationals and tolerance-free: equality means exact value equality,
and applying a reflection twice reproduces the input bit for bit. Floats
are rejected at the boundary to keep it that way.
"""

from __future__ import annotations

from fractions import Fraction

Rational = Fraction

PROPER_ONLY = "proper-only"
INCLUDING_ENDPOINTS = "including-endpoints"


class GeometryError(ValueError):
    """Base class for every geometric error raised by this package."""


class DegenerateLineError(GeometryError):
    """Two coincident points do not determine a reflection line."""


def rational(value) -> Fraction:
    """Coerce int, "n/d" string, or Fraction to an exact Fraction.

    Floats are refused: silently converting binary floats would smuggle
    rounding error into an otherwise exact pipeline.
    """
    if isinstance(value, float):
        raise TypeError(f"refusing float {value!r}; pass int, str or Fraction")
    return Fraction(value)


class Point:
    """Immutable exact point in the plane."""

    __slots__ = ("x", "y")

    def __init__(self, x, y):
        self.x = rational(x)
        self.y = rational(y)

    def __eq__(self, other):
        if not isinstance(other, Point):
            return NotImplemented
        return self.x == other.x and self.y == other.y

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return hash((self.x, self.y))

    def __iter__(self):
        yield self.x
        yield self.y

    def __repr__(self):
        return f"Point({self.x}, {self.y})"


def midpoint(a: Point, b: Point) -> Point:
    return Point((a.x + b.x) / 2, (a.y + b.y) / 2)


def squared_distance(a: Point, b: Point) -> Fraction:
    dx = a.x - b.x
    dy = a.y - b.y
    return dx * dx + dy * dy


def orientation(a: Point, b: Point, c: Point) -> int:
    """Sign of the turn a -> b -> c: +1 counterclockwise, -1 clockwise, 0 collinear."""
    cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
    if cross > 0:
        return 1
    if cross < 0:
        return -1
    return 0


def reflect_across_line(p: Point, a: Point, b: Point) -> Point:
    """Mirror image of p across the line through a and b.

    Requires a != b. The image of a rational point across a rational line
    is rational (the projection uses only field operations), and the
    distances from p to a and to b are preserved exactly.
    """
    if a == b:
        raise DegenerateLineError("reflection line needs two distinct points")
    dx = b.x - a.x
    dy = b.y - a.y
    t = ((p.x - a.x) * dx + (p.y - a.y) * dy) / (dx * dx + dy * dy)
    return Point(2 * (a.x + t * dx) - p.x, 2 * (a.y + t * dy) - p.y)


def reflect_across_point(p: Point, m: Point) -> Point:
    """Mirror image of p through m (a half-turn about m): 2m - p."""
    return Point(2 * m.x - p.x, 2 * m.y - p.y)


def _on_segment(p: Point, a: Point, b: Point) -> bool:
    # assumes p collinear with a, b
    return (min(a.x, b.x) <= p.x <= max(a.x, b.x)
            and min(a.y, b.y) <= p.y <= max(a.y, b.y))


def segments_intersect(s1, s2, mode: str = INCLUDING_ENDPOINTS) -> bool:
    """Exact intersection test for two segments given as (Point, Point) pairs.

    mode "including-endpoints": any shared point counts (touching endpoints,
    endpoint on interior, collinear overlap).
    mode "proper-only": only intersections through both interiors count --
    a transversal crossing, or a collinear overlap of positive length.
    """
    if mode not in (PROPER_ONLY, INCLUDING_ENDPOINTS):
        raise ValueError(f"unknown mode {mode!r}")
    a, b = s1
    c, d = s2
    if a == b or c == d:
        raise GeometryError("zero-length segment")
    o1 = orientation(a, b, c)
    o2 = orientation(a, b, d)
    o3 = orientation(c, d, a)
    o4 = orientation(c, d, b)

    if mode == PROPER_ONLY:
        if o1 * o2 < 0 and o3 * o4 < 0:
            return True
        if o1 == o2 == o3 == o4 == 0:
            # collinear: open intervals along the carrier line must overlap
            ux, uy = b.x - a.x, b.y - a.y
            tb = ux * ux + uy * uy
            tc = (c.x - a.x) * ux + (c.y - a.y) * uy
            td = (d.x - a.x) * ux + (d.y - a.y) * uy
            lo, hi = min(tc, td), max(tc, td)
            return max(lo, 0) < min(hi, tb)
        return False

    if o1 != o2 and o3 != o4:
        return True
    if o1 == 0 and _on_segment(c, a, b):
        return True
    if o2 == 0 and _on_segment(d, a, b):
        return True
    if o3 == 0 and _on_segment(a, c, d):
        return True
    if o4 == 0 and _on_segment(b, c, d):
        return True
    return False
