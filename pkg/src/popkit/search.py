"""Search engines: exhaustive sign-state enumeration for the alternating
family, and bounded breadth-first shortest-pop-sequence search for general
polygons.

Pop state spaces of general polygons are infinite (coordinates can grow
without bound), so the BFS is depth-capped and refuses to expand states
whose coordinates exceed a bit-size limit; both truncations are reported
honestly in the outcome status. Alternating inputs are auto-detected and
routed to the finite sign-space enumeration, which is complete.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .alternating import (AlternatingSpec, FamilyError, _family_points,
                          phase_offset, recover_spec)
from .polygon import Polygon, hairpin_indices, is_convex, is_simple
from .transforms import pop

CONVEXIFIED = "Convexified"
PROVEN_IMPOSSIBLE = "ProvenImpossible"
DEPTH_EXHAUSTED = "DepthExhausted"
BIT_SIZE_ABORTED = "BitSizeAborted"

DEFAULT_BIT_LIMIT = 512
MAX_FAMILY_N = 26  # enumeration size 2^n; refuse beyond desk scale


@dataclass(frozen=True)
class SearchOutcome:
    """Result of a pop-convexification search.

    ``sequence`` is present iff status is Convexified, and is then a
    shortest sequence within the explored region (ties broken toward the
    lexicographically smallest index sequence). ProvenImpossible is only
    reported when the reachable state space was fully enumerated.
    """
    status: str
    sequence: tuple[int, ...] | None
    states_explored: int
    max_depth_reached: int


@dataclass(frozen=True)
class FamilyReport:
    """Classification of every sign state of A(x, y, .)."""
    x: tuple[Fraction, ...]
    y: tuple[Fraction, ...]
    total_states: int
    convex_states: tuple[tuple[int, ...], ...]
    simple_states: int
    self_intersecting_states: int

    @property
    def k(self) -> int:
        return len(self.x)


def canonical_key(P: Polygon) -> bytes:
    """Injective byte encoding of the exact vertex sequence.

    Equal polygons (same vertex list) get equal keys; rotations and
    reflections of the list get different keys. Relies on Fraction's
    canonical reduced string form.
    """
    return ";".join(f"{p.x},{p.y}" for p in P.vertices).encode("ascii")


def exhaustive_family_search(x, y) -> FamilyReport:
    """Classify all 2^(2k) sign states of A(x, y, .).

    Pops only toggle sign bits, so this enumeration covers the entire
    pop-reachable set of every member: an empty ``convex_states`` is a
    machine check that no member with this (x, y) can ever be convexified.
    """
    probe = AlternatingSpec(tuple(x), tuple(y), (1,) * (2 * len(tuple(x))))
    n = probe.n
    if n > MAX_FAMILY_N:
        raise FamilyError(
            f"state space 2^{n} exceeds the desk-scale bound 2^{MAX_FAMILY_N}")
    convex_states = []
    simple_count = 0
    for sigma in product((1, -1), repeat=n):
        poly = Polygon(_family_points(probe.x, probe.y, sigma))
        if is_convex(poly):
            convex_states.append(sigma)
            simple_count += 1
        elif is_simple(poly):
            simple_count += 1
    total = 2 ** n
    return FamilyReport(
        x=probe.x,
        y=probe.y,
        total_states=total,
        convex_states=tuple(convex_states),
        simple_states=simple_count,
        self_intersecting_states=total - simple_count,
    )


def _exceeds_bit_limit(P: Polygon, bit_limit: int) -> bool:
    for p in P.vertices:
        for v in (p.x, p.y):
            if v.numerator.bit_length() > bit_limit or v.denominator.bit_length() > bit_limit:
                return True
    return False


def _has_coincident_vertices(P: Polygon) -> bool:
    return len(set(P._int_coords())) != len(P)


def _alternating_search(P: Polygon, spec: AlternatingSpec, max_depth: int) -> SearchOutcome:
    """Complete search in sign space: distance to a convex state is its
    Hamming distance, and the pop sequence is the sorted list of differing
    polygon indices (signs commute)."""
    n = spec.n
    offset = phase_offset(P)
    best = None
    for sigma in product((1, -1), repeat=n):
        poly = Polygon(_family_points(spec.x, spec.y, sigma))
        if not is_convex(poly):
            continue
        diff = [i for i in range(n) if sigma[i] != spec.sigma[i]]
        seq = tuple(sorted((i + offset) % n for i in diff))
        cand = (len(diff), seq)
        if best is None or cand < best:
            best = cand
    states = 2 ** n
    if best is None:
        return SearchOutcome(PROVEN_IMPOSSIBLE, None, states, min(max_depth, n))
    distance, seq = best
    if distance <= max_depth:
        return SearchOutcome(CONVEXIFIED, seq, states, distance)
    return SearchOutcome(DEPTH_EXHAUSTED, None, states, min(max_depth, n))


def search_pop_convexification(P: Polygon, max_depth: int,
                               bit_limit: int = DEFAULT_BIT_LIMIT,
                               allow_coincident: bool = True) -> SearchOutcome:
    """Shortest sequence of pops turning P into a convex polygon.

    Breadth-first over pop applications with exact-state deduplication, so a
    Convexified outcome carries a shortest sequence; children are expanded
    in ascending vertex order, making results deterministic and equal-length
    ties resolve to the lexicographically smallest sequence. Hairpin
    vertices are skipped (their pop is undefined). With
    ``allow_coincident=False``, generated states with coincident
    non-adjacent vertices are discarded (the input itself is not checked).

    Alternating inputs switch to the exact finite enumeration, which can
    prove impossibility outright.
    """
    if max_depth < 0:
        raise ValueError("max_depth must be nonnegative")
    if is_convex(P):
        return SearchOutcome(CONVEXIFIED, (), 1, 0)
    spec = recover_spec(P)
    if spec is not None:
        return _alternating_search(P, spec, max_depth)

    n = len(P)
    seen = {canonical_key(P)}
    queue = deque([(P, ())])
    explored = 1
    deepest = 0
    pruned = False
    truncated = False
    while queue:
        poly, seq = queue.popleft()
        if len(seq) >= max_depth:
            truncated = True
            continue
        skip = hairpin_indices(poly)
        for i in range(n):
            if i in skip:
                continue
            child = pop(poly, i)
            if not allow_coincident and _has_coincident_vertices(child):
                continue
            key = canonical_key(child)
            if key in seen:
                continue
            seen.add(key)
            explored += 1
            depth = len(seq) + 1
            if depth > deepest:
                deepest = depth
            if is_convex(child):
                return SearchOutcome(CONVEXIFIED, seq + (i,), explored, depth)
            if _exceeds_bit_limit(child, bit_limit):
                pruned = True
                continue
            queue.append((child, seq + (i,)))
    if pruned:
        return SearchOutcome(BIT_SIZE_ABORTED, None, explored, deepest)
    if truncated:
        return SearchOutcome(DEPTH_EXHAUSTED, None, explored, deepest)
    return SearchOutcome(PROVEN_IMPOSSIBLE, None, explored, deepest)
