"""The four edge-length preserving moves, plus the flip-until-convex loop.

pop / popturn act on a single vertex; pocket flip / pocket flipturn act on a
whole pocket chain. Pops may produce self-intersecting or coincident-vertex
polygons -- those stay representable, the engine carries them through.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .geom import (GeometryError, midpoint, reflect_across_line,
                   reflect_across_point, squared_distance)
from .polygon import (NotSimpleError, Polygon, _cross, convex_hull,
                      is_convex, is_simple)


class HairpinError(GeometryError):
    """Popping a vertex whose neighbors coincide is undefined."""


class StalePocketError(GeometryError):
    """The supplied pocket is not a pocket of the given polygon."""


@dataclass(frozen=True)
class Pocket:
    """A hull edge (the lid) that is not a polygon edge, plus the polygon
    subchain it spans. ``chain`` lists the vertex indices strictly between
    the lid endpoints in polygon order."""
    lid: tuple[int, int]
    chain: tuple[int, ...]


@dataclass(frozen=True)
class ConvexifyResult:
    polygon: Polygon
    operations: int
    converged: bool


def _check_index(P: Polygon, i: int) -> int:
    if not 0 <= i < len(P):
        raise GeometryError(f"vertex index {i} out of range for {len(P)}-gon")
    return i


def pop(P: Polygon, i: int) -> Polygon:
    """Reflect vertex i across the line through its two neighbors.

    Squared edge lengths are preserved entrywise. Refused at hairpin
    vertices, where the reflection line is not unique.
    """
    _check_index(P, i)
    prev, nxt = P[i - 1], P[i + 1]
    if prev == nxt:
        raise HairpinError(f"vertex {i} is a hairpin vertex; popping it is undefined")
    return P.replace_vertex(i, reflect_across_line(P[i], prev, nxt))


def popturn(P: Polygon, i: int) -> Polygon:
    """Reflect vertex i through the midpoint of its two neighbors.

    Well-defined even at hairpin vertices; the two incident edge lengths
    swap places.
    """
    _check_index(P, i)
    return P.replace_vertex(i, reflect_across_point(P[i], midpoint(P[i - 1], P[i + 1])))


def find_pockets(P: Polygon) -> list[Pocket]:
    """All pockets of a simple polygon, in hull order.

    One pocket per hull edge whose endpoints are non-adjacent polygon
    vertices, except degenerate "pockets" whose chain lies entirely on the
    lid line (their region is empty). Hence: empty result iff P is convex.
    """
    hull = convex_hull(P)  # raises NotSimpleError on self-intersecting input
    on_hull = frozenset(hull)
    pts = P._int_coords()
    n = len(P)
    pockets = []
    for h in hull:
        chain = []
        j = (h + 1) % n
        while j not in on_hull:
            chain.append(j)
            j = (j + 1) % n
        if not chain:
            continue
        a, b = pts[h], pts[j]
        if all(_cross(a, b, pts[c]) == 0 for c in chain):
            continue  # flat chain, empty pocket region
        pockets.append(Pocket(lid=(h, j), chain=tuple(chain)))
    return pockets


def _require_pocket(P: Polygon, pocket: Pocket) -> None:
    if pocket not in find_pockets(P):
        raise StalePocketError(f"{pocket} is not a pocket of this polygon")


def pocket_flip(P: Polygon, pocket: Pocket) -> Polygon:
    """Reflect the pocket chain across the lid line.

    A chain vertex lying exactly on the lid line maps to itself. The result
    of flipping a pocket of a simple polygon is again simple.
    """
    _require_pocket(P, pocket)
    a, b = P[pocket.lid[0]], P[pocket.lid[1]]
    verts = list(P.vertices)
    for c in pocket.chain:
        verts[c] = reflect_across_line(verts[c], a, b)
    return Polygon(verts)


def pocket_flipturn(P: Polygon, pocket: Pocket) -> Polygon:
    """Rotate the pocket chain half a turn about the lid midpoint.

    The chain re-attaches in reversed order (the rotation swaps the lid
    endpoints), so the multiset of edge lengths is preserved with the
    pocket's edge sequence reversed. Result is again simple.
    """
    _require_pocket(P, pocket)
    m = midpoint(P[pocket.lid[0]], P[pocket.lid[1]])
    flipped = [reflect_across_point(P[c], m) for c in reversed(pocket.chain)]
    verts = list(P.vertices)
    for c, p in zip(pocket.chain, flipped):
        verts[c] = p
    return Polygon(verts)


def _select_pocket(pockets, strategy, rng, P):
    if strategy == "first":
        return pockets[0]
    if strategy == "largest-lid":
        return max(pockets, key=lambda pk: squared_distance(P[pk.lid[0]], P[pk.lid[1]]))
    if strategy == "seeded-random":
        return pockets[rng.randrange(len(pockets))]
    raise ValueError(f"unknown strategy {strategy!r}")


def convexify_by_flips(P: Polygon, mode: str = "flip", strategy: str = "first",
                       cap: int = 100000, seed: int = 0,
                       observer=None) -> ConvexifyResult:
    """Apply pocket flips (or flipturns) until the polygon is convex.

    Pocket choice per step follows ``strategy``; "seeded-random" draws from
    ``random.Random(seed)`` so runs are reproducible. Stops after ``cap``
    operations with ``converged=False`` if convexity was not reached.
    ``observer``, when given, is called with each intermediate polygon.
    """
    if mode not in ("flip", "flipturn"):
        raise ValueError(f"unknown mode {mode!r}")
    if strategy not in ("first", "largest-lid", "seeded-random"):
        raise ValueError(f"unknown strategy {strategy!r}")
    if not is_simple(P):
        raise NotSimpleError("convexification by flips requires a simple polygon")
    apply_op = pocket_flip if mode == "flip" else pocket_flipturn
    rng = random.Random(seed)
    current = P
    ops = 0
    while not is_convex(current):
        if ops >= cap:
            return ConvexifyResult(current, ops, converged=False)
        pockets = find_pockets(current)
        current = apply_op(current, _select_pocket(pockets, strategy, rng, current))
        ops += 1
        if observer is not None:
            observer(current)
    return ConvexifyResult(current, ops, converged=True)
