"""Exact planar predicates on points, segments and triangles."""
from __future__ import annotations

from enum import Enum
from typing import NamedTuple

from .exact import QuadNum, as_quad, sign

__all__ = [
    "Location",
    "Point",
    "Shape",
    "Triangle",
    "area2",
    "congruent",
    "cross",
    "interiors_overlap",
    "locate",
    "on_segment_interior",
    "orientation",
    "shape_of",
    "similar",
    "sq_dist",
]


class Point(NamedTuple):
    x: QuadNum
    y: QuadNum

    @classmethod
    def of(cls, x, y) -> Point:
        return cls(as_quad(x), as_quad(y))

    def __add__(self, other: Point) -> Point:  # type: ignore[override]
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Point) -> Point:
        return Point(self.x - other.x, self.y - other.y)

    def scale(self, k) -> Point:
        return Point(self.x * k, self.y * k)

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"


class Triangle(NamedTuple):
    v0: Point
    v1: Point
    v2: Point

    @classmethod
    def of(cls, *coords) -> Triangle:
        """``Triangle.of((x0, y0), (x1, y1), (x2, y2))`` with numbers or strings."""
        return cls(*(Point.of(x, y) for x, y in coords))

    def edges(self) -> tuple[tuple[Point, Point], ...]:
        return ((self.v0, self.v1), (self.v1, self.v2), (self.v2, self.v0))

    def ccw(self) -> Triangle:
        """Same triangle with counterclockwise vertex order."""
        if orientation(*self) < 0:
            return Triangle(self.v0, self.v2, self.v1)
        return self

    def centroid(self) -> Point:
        return Point(
            (self.v0.x + self.v1.x + self.v2.x) / 3,
            (self.v0.y + self.v1.y + self.v2.y) / 3,
        )

    def vertex_set(self) -> frozenset[Point]:
        return frozenset(self)

    def __str__(self) -> str:
        return f"[{self.v0}, {self.v1}, {self.v2}]"


class Location(Enum):
    OUTSIDE = "outside"
    VERTEX = "vertex"
    EDGE_INTERIOR = "edge_interior"
    INTERIOR = "interior"


def cross(p: Point, q: Point, r: Point) -> QuadNum:
    """(q - p) x (r - p)."""
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)


def orientation(p: Point, q: Point, r: Point) -> int:
    return sign(cross(p, q, r))


def sq_dist(p: Point, q: Point) -> QuadNum:
    dx = p.x - q.x
    dy = p.y - q.y
    return dx * dx + dy * dy


def area2(t: Triangle) -> QuadNum:
    """Twice the unsigned area."""
    return abs(cross(*t))


def on_segment_interior(p: Point, a: Point, b: Point) -> bool:
    """True iff p lies on the open segment (a, b)."""
    if orientation(a, b, p) != 0:
        return False
    # p strictly between a and b along the segment direction
    dx, dy = b.x - a.x, b.y - a.y
    t = (p.x - a.x) * dx + (p.y - a.y) * dy
    return sign(t) > 0 and sign(t - (dx * dx + dy * dy)) < 0


def on_closed_segment(p: Point, a: Point, b: Point) -> bool:
    return p == a or p == b or on_segment_interior(p, a, b)


def locate(p: Point, t: Triangle) -> Location:
    o = orientation(*t)
    if o == 0:
        raise ValueError(f"degenerate triangle {t}")
    s0 = orientation(t.v0, t.v1, p) * o
    s1 = orientation(t.v1, t.v2, p) * o
    s2 = orientation(t.v2, t.v0, p) * o
    if s0 < 0 or s1 < 0 or s2 < 0:
        return Location.OUTSIDE
    zeros = (s0 == 0) + (s1 == 0) + (s2 == 0)
    if zeros == 0:
        return Location.INTERIOR
    if zeros == 1:
        return Location.EDGE_INTERIOR
    return Location.VERTEX


def interiors_overlap(t1: Triangle, t2: Triangle) -> bool:
    """True iff the open interiors of two triangles intersect.

    Two convex polygons have disjoint interiors exactly when some edge line of
    one of them weakly separates the two vertex sets.
    """
    for a, b in ((t1.ccw(), t2), (t2.ccw(), t1)):
        for p, q in a.edges():
            if all(orientation(p, q, v) <= 0 for v in b):
                return False
    return True


class Shape(NamedTuple):
    """Sorted squared side lengths (a^2 <= b^2 <= c^2)."""

    a2: QuadNum
    b2: QuadNum
    c2: QuadNum

    def is_right(self) -> bool:
        return self.a2 + self.b2 == self.c2

    def is_isosceles(self) -> bool:
        return self.a2 == self.b2 or self.b2 == self.c2

    def is_equilateral(self) -> bool:
        return self.a2 == self.c2

    def scaled(self, k2) -> Shape:
        """Shape scaled so squared sides are multiplied by ``k2``."""
        return Shape(self.a2 * k2, self.b2 * k2, self.c2 * k2)

    def label(self, sq_len: QuadNum) -> int | None:
        """Column 0/1/2 of a side with the given squared length.

        For isosceles shapes the middle label is never used: equal sides are
        reported as ``a`` (when a == b) or ``c`` (when b == c).
        """
        if sq_len == self.a2:
            return 0
        if sq_len == self.c2:
            return 2
        if sq_len == self.b2:
            return 1
        return None


def shape_of(t: Triangle) -> Shape:
    if orientation(*t) == 0:
        raise ValueError(f"degenerate triangle {t}")
    sides = sorted((sq_dist(t.v1, t.v2), sq_dist(t.v2, t.v0), sq_dist(t.v0, t.v1)))
    return Shape(*sides)


def congruent(t1: Triangle, t2: Triangle) -> bool:
    return shape_of(t1) == shape_of(t2)


def similar(s1: Shape, s2: Shape) -> bool:
    return s1.b2 * s2.a2 == s2.b2 * s1.a2 and s1.c2 * s2.a2 == s2.c2 * s1.a2


def corner_label(t: Triangle, i: int, shape: Shape) -> int:
    """Angle label (0=alpha, 1=beta, 2=gamma) of vertex i, from its opposite side."""
    opp = sq_dist(t[(i + 1) % 3], t[(i + 2) % 3])
    lab = shape.label(opp)
    if lab is None:
        raise ValueError(f"corner {i} of {t} does not match shape {shape}")
    return lab
