"""Seeded random generators shared across the test suite.

Everything takes an explicit random.Random so corpora are reproducible.
"""

from fractions import Fraction
from functools import cmp_to_key

from popkit.alternating import AlternatingSpec
from popkit.geom import Point
from popkit.polygon import Polygon, is_simple


def random_points(rng, n, span=9):
    seen = set()
    pts = []
    while len(pts) < n:
        xy = (rng.randint(-span, span), rng.randint(-span, span))
        if xy in seen:
            continue
        seen.add(xy)
        pts.append(xy)
    return [Point(x, y) for x, y in pts]


def random_polygon(rng, n, span=9):
    """Arbitrary valid polygon: distinct vertices, any amount of
    self-intersection."""
    return Polygon(random_points(rng, n, span))


def random_simple_polygon(rng, n, span=9):
    """Random simple polygon: distinct lattice points ordered by exact
    angle around their centroid (star-shaped), retried until simple."""
    while True:
        pts = random_points(rng, n, span)
        cx = Fraction(sum(p.x for p in pts), n)
        cy = Fraction(sum(p.y for p in pts), n)
        if any(p.x == cx and p.y == cy for p in pts):
            continue

        def cmp(p, q):
            dpx, dpy = p.x - cx, p.y - cy
            dqx, dqy = q.x - cx, q.y - cy
            hp = 0 if (dpy > 0 or (dpy == 0 and dpx > 0)) else 1
            hq = 0 if (dqy > 0 or (dqy == 0 and dqx > 0)) else 1
            if hp != hq:
                return -1 if hp < hq else 1
            cross = dpx * dqy - dpy * dqx
            if cross != 0:
                return -1 if cross > 0 else 1
            rp = dpx * dpx + dpy * dpy
            rq = dqx * dqx + dqy * dqy
            return (rp > rq) - (rp < rq)

        poly = Polygon(sorted(pts, key=cmp_to_key(cmp)))
        if is_simple(poly):
            return poly


def random_admissible_vector(rng, k, limit=40):
    """k distinct positive rationals with small numerators/denominators."""
    seen = set()
    vals = []
    while len(vals) < k:
        v = Fraction(rng.randint(1, limit), rng.randint(1, 4))
        if v in seen:
            continue
        seen.add(v)
        vals.append(v)
    return tuple(vals)


def random_sigma(rng, k):
    return tuple(rng.choice((-1, 1)) for _ in range(2 * k))


def random_spec(rng, k):
    return AlternatingSpec(
        random_admissible_vector(rng, k),
        random_admissible_vector(rng, k),
        random_sigma(rng, k),
    )
