"""The alternating polygon family A(x, y, sigma).

A member with parameter k has 2k vertices that alternate between the two
coordinate axes: 0-based vertex 2t sits at (sigma[2t] * x[t], 0) and vertex
2t+1 at (0, sigma[2t+1] * y[t]). Because a vertex's two neighbors always lie
on the *other* axis, popping vertex i reflects it across that axis and only
flips sigma[i]: the family is closed under pops, and the sign vector is a
complete state descriptor once (x, y) is fixed.

Note: interfaces here are 0-based; figure-style labels p1..pn elsewhere are
1-based, so 0-based index i corresponds to label p_{i+1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .geom import GeometryError, Point, rational
from .polygon import Polygon
from .transforms import pop


class FamilyError(GeometryError):
    """Parameters violate the alternating family invariants."""


@dataclass(frozen=True)
class AlternatingSpec:
    """Parameters (x, y, sigma) of one family member; n = 2k."""

    x: tuple[Fraction, ...]
    y: tuple[Fraction, ...]
    sigma: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "x", tuple(rational(v) for v in self.x))
        object.__setattr__(self, "y", tuple(rational(v) for v in self.y))
        object.__setattr__(self, "sigma", tuple(int(s) for s in self.sigma))
        _validate(self.x, self.y, self.sigma)

    @property
    def k(self) -> int:
        return len(self.x)

    @property
    def n(self) -> int:
        return 2 * len(self.x)


def _validate(x, y, sigma):
    problems = []
    if len(x) < 2:
        problems.append(f"k must be at least 2, got {len(x)}")
    if len(y) != len(x):
        problems.append(f"x and y must have equal length, got {len(x)} and {len(y)}")
    for name, vec in (("x", x), ("y", y)):
        bad = [f"{name}[{i}]={v}" for i, v in enumerate(vec) if v <= 0]
        if bad:
            problems.append("coordinates must be positive: " + ", ".join(bad))
        if len(set(vec)) != len(vec):
            dups = sorted({str(v) for v in vec if vec.count(v) > 1})
            problems.append(f"{name} values must be distinct, repeated: " + ", ".join(dups))
    if len(sigma) != 2 * len(x):
        problems.append(f"sigma must have length {2 * len(x)}, got {len(sigma)}")
    if any(s not in (-1, 1) for s in sigma):
        problems.append("sigma entries must be +1 or -1")
    if problems:
        raise FamilyError("; ".join(problems))


def _family_points(x, y, sigma) -> list[Point]:
    pts = []
    for t in range(len(x)):
        pts.append(Point(sigma[2 * t] * x[t], 0))
        pts.append(Point(0, sigma[2 * t + 1] * y[t]))
    return pts


def build(spec: AlternatingSpec) -> Polygon:
    """The polygon A(x, y, sigma); vertex 0 is on the x-axis."""
    return Polygon(_family_points(spec.x, spec.y, spec.sigma))


def recover_spec(P: Polygon):
    """Recognize P as a family member and return its spec, or None.

    Both index phases are accepted: if vertex 0 sits on the y-axis the
    vertex list is read as rotated by one position, so rotating a member's
    vertex list never ejects it from the family. The returned spec always
    uses the x-axis-first phase; ``build(spec)`` equals P up to that
    rotation.
    """
    n = len(P)
    if n % 2 or n < 4:
        return None
    first = P[0]
    if first.y == 0 and first.x != 0:
        offset = 0
    elif first.x == 0 and first.y != 0:
        offset = 1
    else:
        return None
    xs, ys, sigma = [], [], []
    for j in range(n):
        p = P[j + offset]
        if j % 2 == 0:
            if p.y != 0 or p.x == 0:
                return None
            xs.append(abs(p.x))
            sigma.append(1 if p.x > 0 else -1)
        else:
            if p.x != 0 or p.y == 0:
                return None
            ys.append(abs(p.y))
            sigma.append(1 if p.y > 0 else -1)
    if len(set(xs)) != len(xs) or len(set(ys)) != len(ys):
        return None
    return AlternatingSpec(tuple(xs), tuple(ys), tuple(sigma))


def phase_offset(P: Polygon) -> int:
    """0 if vertex 0 lies on the x-axis, 1 if on the y-axis.

    Only meaningful for polygons accepted by ``recover_spec``; spec index j
    corresponds to polygon index (j + offset) % n.
    """
    return 0 if P[0].y == 0 else 1


def canonical_example(kind: str, k: int) -> AlternatingSpec:
    """The two stock members with x = y = (k, k-1, ..., 1).

    "P1" has sigma = (+1, +1, -1, ..., -1) and is simple for k >= 3;
    "P2" has sigma all +1 and is self-intersecting.
    """
    if k < 2:
        raise FamilyError(f"k must be at least 2, got {k}")
    vals = tuple(Fraction(k - i) for i in range(k))
    kind_u = kind.upper()
    if kind_u == "P1":
        sigma = (1, 1) + (-1,) * (2 * k - 2)
    elif kind_u == "P2":
        sigma = (1,) * (2 * k)
    else:
        raise ValueError(f"unknown example kind {kind!r}, expected P1 or P2")
    return AlternatingSpec(vals, vals, sigma)


def pop_sign(spec: AlternatingSpec, i: int) -> AlternatingSpec:
    """Spec of pop(build(spec), i): sigma with bit i negated."""
    if not 0 <= i < spec.n:
        raise GeometryError(f"sign index {i} out of range for n={spec.n}")
    sigma = list(spec.sigma)
    sigma[i] = -sigma[i]
    return AlternatingSpec(spec.x, spec.y, tuple(sigma))


def steering_sequence(spec: AlternatingSpec, sigma_target) -> tuple[int, ...]:
    """Ascending indices where spec.sigma and the target disagree.

    Popping those vertices of build(spec), in any order, yields the member
    with the target sign vector; at most n pops.
    """
    target = tuple(int(s) for s in sigma_target)
    if len(target) != spec.n:
        raise FamilyError(f"target sign vector must have length {spec.n}, got {len(target)}")
    if any(s not in (-1, 1) for s in target):
        raise FamilyError("sigma entries must be +1 or -1")
    return tuple(i for i in range(spec.n) if spec.sigma[i] != target[i])


def apply_steering(P: Polygon, sequence) -> Polygon:
    for i in sequence:
        P = pop(P, i)
    return P


# -- external text forms: "2,3,1" vectors and "++---+" sign strings --------

def parse_vector(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(rational(part.strip()) for part in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise FamilyError(f"bad coordinate vector {text!r}: {exc}") from None


def format_vector(vec) -> str:
    return ",".join(str(v) for v in vec)


def parse_sigma(text: str) -> tuple[int, ...]:
    out = []
    for ch in text.strip():
        if ch == "+":
            out.append(1)
        elif ch == "-":
            out.append(-1)
        else:
            raise FamilyError(f"bad sign character {ch!r} in {text!r}, expected + or -")
    return tuple(out)


def format_sigma(sigma) -> str:
    return "".join("+" if s > 0 else "-" for s in sigma)
