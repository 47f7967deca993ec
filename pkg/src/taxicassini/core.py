"""Planar taxicab (L1) geometry primitives.

Distances, per-coordinate sign pairs, the nine closed regions that the
coordinate lines through two foci cut the plane into, a closeness predicate,
and the isometry group of the taxicab plane (translations composed with the
eight-element dihedral point group).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, NamedTuple


class GeometryError(ValueError):
    """Input outside an operation's documented domain."""


@dataclass(frozen=True)
class Point:
    """A location in the plane; coordinates must be finite."""

    x1: float
    x2: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x1) and math.isfinite(self.x2)):
            raise GeometryError(f"coordinates must be finite, got ({self.x1!r}, {self.x2!r})")

    def __iter__(self) -> Iterator[float]:
        yield self.x1
        yield self.x2

    def __neg__(self) -> "Point":
        return Point(-self.x1, -self.x2)

    def coord(self, axis: int) -> float:
        """Coordinate by axis number, 1 or 2."""
        return self.x1 if axis == 1 else self.x2


ORIGIN = Point(0.0, 0.0)


def taxicab_distance(a: Point, b: Point) -> float:
    """L1 distance |a1 - b1| + |a2 - b2|."""
    return abs(a.x1 - b.x1) + abs(a.x2 - b.x2)


class SignPair(NamedTuple):
    """Per-coordinate signs in {-1, 0, +1}."""

    s1: int
    s2: int


def _sign(d: float) -> int:
    if d > 0:
        return 1
    if d < 0:
        return -1
    return 0


def coordinate_signs(p: Point, x: Point) -> SignPair:
    """Sign of each coordinate of x relative to p; 0 on p's coordinate lines.

    Constant on the interior of each of the nine regions induced by two foci.
    """
    return SignPair(_sign(x.x1 - p.x1), _sign(x.x2 - p.x2))


def closer_to(a: Point, b: Point, x: Point) -> bool:
    """True if x is at least as close to a as to b (ties included)."""
    return taxicab_distance(x, a) <= taxicab_distance(x, b)


class RegionId(Enum):
    """The nine closed regions induced by the coordinate lines through p and q.

    Quadrants sit at the foci and at the two coordinate complements
    c1 = (p1, q2) and c2 = (q1, p2); half-strips join a focus to a complement;
    the central rectangle has all four as corners.  Regions are closed, so
    boundary points belong to every region touching them.  When the foci share
    a coordinate line some regions collapse to rays or a segment but keep
    their identity.
    """

    QUADRANT_P = "Q_p"
    QUADRANT_Q = "Q_q"
    QUADRANT_C1 = "Q_c1"
    QUADRANT_C2 = "Q_c2"
    STRIP_P_C1 = "S_p_c1"
    STRIP_P_C2 = "S_p_c2"
    STRIP_Q_C1 = "S_q_c1"
    STRIP_Q_C2 = "S_q_c2"
    CENTRAL_RECTANGLE = "R"


QUADRANTS = frozenset(
    {RegionId.QUADRANT_P, RegionId.QUADRANT_Q, RegionId.QUADRANT_C1, RegionId.QUADRANT_C2}
)
HALF_STRIPS = frozenset(
    {RegionId.STRIP_P_C1, RegionId.STRIP_P_C2, RegionId.STRIP_Q_C1, RegionId.STRIP_Q_C2}
)


@dataclass(frozen=True)
class FociFrame:
    """Derived landmarks of a focus pair.

    c1/c2 are the coordinate complements, g_plus/g_minus the guide complements
    (intersections of the slope +1/-1 guide lines through p with the opposite
    guide lines through q), mid the midpoint.
    """

    p: Point
    q: Point
    c1: Point
    c2: Point
    g_plus: Point
    g_minus: Point
    mid: Point


def foci_frame(p: Point, q: Point) -> FociFrame:
    """Compute the coordinate and guide complements plus midpoint for (p, q)."""
    g_plus = Point(
        (p.x1 - p.x2 + q.x1 + q.x2) / 2,
        (-p.x1 + p.x2 + q.x1 + q.x2) / 2,
    )
    g_minus = Point(
        (p.x1 + p.x2 + q.x1 - q.x2) / 2,
        (p.x1 + p.x2 - q.x1 + q.x2) / 2,
    )
    return FociFrame(
        p=p,
        q=q,
        c1=Point(p.x1, q.x2),
        c2=Point(q.x1, p.x2),
        g_plus=g_plus,
        g_minus=g_minus,
        mid=Point((p.x1 + q.x1) / 2, (p.x2 + q.x2) / 2),
    )


_REGION_BY_SIDES = {
    ("p", "p"): RegionId.QUADRANT_P,
    ("p", "m"): RegionId.STRIP_P_C1,
    ("p", "q"): RegionId.QUADRANT_C1,
    ("m", "p"): RegionId.STRIP_P_C2,
    ("m", "m"): RegionId.CENTRAL_RECTANGLE,
    ("m", "q"): RegionId.STRIP_Q_C1,
    ("q", "p"): RegionId.QUADRANT_C2,
    ("q", "m"): RegionId.STRIP_Q_C2,
    ("q", "q"): RegionId.QUADRANT_Q,
}


def _axis_sides(pj: float, qj: float, xj: float) -> set[str]:
    # "p": on p's side away from q, "m": between the lines, "q": beyond q.
    # Closed intervals, so boundary values earn several labels.  When the foci
    # share the coordinate, "p" is conventionally the >= side.
    sides: set[str] = set()
    if pj == qj:
        if xj >= pj:
            sides.add("p")
        if xj == pj:
            sides.add("m")
        if xj <= pj:
            sides.add("q")
        return sides
    s = 1.0 if pj > qj else -1.0
    dp = s * (xj - pj)
    dq = s * (xj - qj)
    if dp >= 0:
        sides.add("p")
    if dp <= 0 and dq >= 0:
        sides.add("m")
    if dq <= 0:
        sides.add("q")
    return sides


def classify_region(frame: FociFrame, x: Point) -> frozenset[RegionId]:
    """All closed regions containing x; comparisons are exact."""
    sides1 = _axis_sides(frame.p.x1, frame.q.x1, x.x1)
    sides2 = _axis_sides(frame.p.x2, frame.q.x2, x.x2)
    return frozenset(_REGION_BY_SIDES[a, b] for a in sides1 for b in sides2)


class PointGroup(Enum):
    """The eight linear taxicab isometries fixing the origin.

    Values are (swap, s1, s2) encoding x -> (s1*u, s2*v) where (u, v) is
    (x2, x1) when swap else (x1, x2).  Declaration order is the fixed
    enumeration used by standardize's tie-break.
    """

    IDENTITY = (False, 1, 1)
    ROT90 = (True, -1, 1)
    ROT180 = (False, -1, -1)
    ROT270 = (True, 1, -1)
    FLIP_X1 = (False, -1, 1)  # reflect across the vertical coordinate line
    FLIP_X2 = (False, 1, -1)  # reflect across the horizontal coordinate line
    FLIP_DIAG = (True, 1, 1)  # reflect across the slope +1 guide line
    FLIP_ANTIDIAG = (True, -1, -1)  # reflect across the slope -1 guide line

    @property
    def swaps_axes(self) -> bool:
        return self.value[0]

    def apply(self, x1: float, x2: float) -> tuple[float, float]:
        swap, s1, s2 = self.value
        if swap:
            return s1 * x2, s2 * x1
        return s1 * x1, s2 * x2

    def compose(self, other: "PointGroup") -> "PointGroup":
        """Element acting as self after other."""
        return _COMPOSE[self, other]

    def inverse(self) -> "PointGroup":
        return _INVERSE[self]


_BY_VALUE = {g.value: g for g in PointGroup}


def _from_basis_images(im1: tuple[float, float], im2: tuple[float, float]) -> PointGroup:
    # Signed permutations are pinned down by the images of (1,0) and (0,1).
    if im1[1] == 0:
        key = (False, int(im1[0]), int(im2[1]))
    else:
        key = (True, int(im2[0]), int(im1[1]))
    return _BY_VALUE[key]


_COMPOSE = {
    (g, h): _from_basis_images(g.apply(*h.apply(1, 0)), g.apply(*h.apply(0, 1)))
    for g in PointGroup
    for h in PointGroup
}
_INVERSE = {
    g: next(h for h in PointGroup if _COMPOSE[g, h] is PointGroup.IDENTITY) for g in PointGroup
}


@dataclass(frozen=True)
class Isometry:
    """Distance-preserving map x -> G(x) + t for a point-group element G."""

    element: PointGroup
    translation: Point = field(default=ORIGIN)

    def apply(self, x: Point) -> Point:
        y1, y2 = self.element.apply(x.x1, x.x2)
        return Point(y1 + self.translation.x1, y2 + self.translation.x2)

    def compose(self, other: "Isometry") -> "Isometry":
        """Isometry acting as self after other."""
        return Isometry(self.element.compose(other.element), self.apply(other.translation))

    def inverse(self) -> "Isometry":
        g = self.element.inverse()
        t1, t2 = g.apply(self.translation.x1, self.translation.x2)
        return Isometry(g, Point(-t1, -t2))

    @property
    def is_identity(self) -> bool:
        return self.element is PointGroup.IDENTITY and self.translation == ORIGIN


def apply_isometry(iso: Isometry, x: Point) -> Point:
    """Image of x under the isometry."""
    return iso.apply(x)


def standardize(p: Point, q: Point) -> tuple[Isometry, Point, Point]:
    """Isometry placing the focus pair in standard position.

    Returns (phi, p', q') where phi maps the midpoint to the origin and
    q' = -p' with p' in the closed first octant (p1' >= p2' >= 0).  The
    point-group element is the first in the fixed enumeration that works, so
    an already-standard pair gets the identity.  The returned points are the
    exact octant representative of the half-difference vector; applying phi
    to the foci reproduces them to within roundoff (<= 1e-12 relative).
    """
    v1 = (p.x1 - q.x1) / 2
    v2 = (p.x2 - q.x2) / 2
    element = PointGroup.IDENTITY
    w1, w2 = v1, v2
    for candidate in PointGroup:
        u1, u2 = candidate.apply(v1, v2)
        if u1 >= u2 >= 0:
            element, w1, w2 = candidate, u1, u2
            break
    else:  # pragma: no cover - every vector has an octant representative
        raise GeometryError("no point-group element standardizes the pair")
    m1, m2 = element.apply((p.x1 + q.x1) / 2, (p.x2 + q.x2) / 2)
    iso = Isometry(element, Point(-m1, -m2))
    return iso, Point(w1, w2), Point(-w1, -w2)
