"""Planar primitives for the current plane: points, implicit lines, circles.

Lines are kept in implicit normal form a*x + b*y = c with a**2 + b**2 = 1 and
the first nonzero coefficient positive, so vertical lines need no slope
special-casing and two constructions of the same line compare equal.
All functions are pure; nothing here holds state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    CollinearPoints,
    DegenerateInput,
    InfiniteIntersections,
    NoIntersection,
)

TOL_GEOM = 1e-9
_PARALLEL_EPS = 1e-12
_COLLINEAR_EPS = 1e-12


@dataclass(frozen=True)
class Point2:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"point coordinates must be finite, got ({self.x}, {self.y})")

    @classmethod
    def from_complex(cls, z: complex) -> "Point2":
        return cls(z.real, z.imag)

    def as_complex(self) -> complex:
        return complex(self.x, self.y)

    def distance_to(self, other: "Point2") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)


@dataclass(frozen=True)
class Line2:
    """Line a*x + b*y = c, canonicalized on construction."""

    a: float
    b: float
    c: float

    def __post_init__(self):
        norm = math.hypot(self.a, self.b)
        if norm == 0.0 or not (math.isfinite(norm) and math.isfinite(self.c)):
            raise ValueError("line coefficients must be finite with (a, b) != (0, 0)")
        a, b, c = self.a / norm, self.b / norm, self.c / norm
        if a < 0.0 or (a == 0.0 and b < 0.0):
            a, b, c = -a, -b, -c
        # + 0.0 turns -0.0 into 0.0 so equal lines hash/compare identically
        object.__setattr__(self, "a", a + 0.0)
        object.__setattr__(self, "b", b + 0.0)
        object.__setattr__(self, "c", c + 0.0)

    @classmethod
    def from_points(cls, p: Point2, q: Point2) -> "Line2":
        if p == q:
            raise DegenerateInput("two distinct points are needed to define a line")
        return cls.from_point_direction(p, q.x - p.x, q.y - p.y)

    @classmethod
    def from_point_direction(cls, p: Point2, dx: float, dy: float) -> "Line2":
        return cls.from_point_normal(p, -dy, dx)

    @classmethod
    def from_point_normal(cls, p: Point2, nx: float, ny: float) -> "Line2":
        return cls(nx, ny, nx * p.x + ny * p.y)

    @property
    def is_vertical(self) -> bool:
        return self.b == 0.0

    @property
    def is_horizontal(self) -> bool:
        return self.a == 0.0

    @property
    def slope(self) -> float:
        return math.inf if self.b == 0.0 else -self.a / self.b

    def direction(self) -> tuple[float, float]:
        return (self.b, -self.a)

    def normal(self) -> tuple[float, float]:
        return (self.a, self.b)

    def residual(self, p: Point2) -> float:
        """Signed distance of p from the line (the normal is unit length)."""
        return self.a * p.x + self.b * p.y - self.c

    def contains(self, p: Point2, tol: float = TOL_GEOM) -> bool:
        return abs(self.residual(p)) <= tol

    def y_at(self, x: float) -> float:
        if self.b == 0.0:
            raise NoIntersection("vertical line has no single y at a given x")
        return (self.c - self.a * x) / self.b

    def perpendicular_through(self, p: Point2) -> "Line2":
        return Line2.from_point_normal(p, self.b, -self.a)

    def parallel_at_offset(self, offset: float) -> "Line2":
        """Parallel line shifted by `offset` along the unit normal (a, b)."""
        return Line2(self.a, self.b, self.c + offset)


@dataclass(frozen=True)
class Circle2:
    center: Point2
    radius: float

    def __post_init__(self):
        if not (math.isfinite(self.radius) and self.radius > 0.0):
            raise ValueError(f"radius must be positive and finite, got {self.radius}")

    def contains(self, p: Point2, tol: float = TOL_GEOM) -> bool:
        return abs(self.center.distance_to(p) - self.radius) <= tol

    def point_at_angle(self, theta: float) -> Point2:
        return Point2(
            self.center.x + self.radius * math.cos(theta),
            self.center.y + self.radius * math.sin(theta),
        )


def midpoint(p: Point2, q: Point2) -> Point2:
    return Point2(0.5 * (p.x + q.x), 0.5 * (p.y + q.y))


def perpendicular_bisector(p: Point2, q: Point2) -> Line2:
    """Locus of points equidistant from p and q."""
    if p == q:
        raise DegenerateInput("cannot bisect a zero-length segment")
    return Line2.from_point_normal(midpoint(p, q), q.x - p.x, q.y - p.y)


def intersect_line_with_horizontal(line: Line2, y0: float) -> Point2:
    """Unique point of `line` on the horizontal y = y0."""
    if line.is_horizontal:
        if line.c == y0:
            raise InfiniteIntersections(f"line coincides with y = {y0}")
        raise NoIntersection(f"horizontal line y = {line.c} never meets y = {y0}")
    return Point2((line.c - line.b * y0) / line.a, y0)


def intersect_lines(l1: Line2, l2: Line2) -> Point2:
    det = l1.a * l2.b - l2.a * l1.b
    if abs(det) <= _PARALLEL_EPS:
        # canonical form: parallel lines share (a, b), so compare offsets
        if abs(l1.c - l2.c) <= _PARALLEL_EPS:
            raise InfiniteIntersections("lines coincide")
        raise NoIntersection("lines are parallel")
    x = (l1.c * l2.b - l2.c * l1.b) / det
    y = (l1.a * l2.c - l2.a * l1.c) / det
    return Point2(x, y)


def intersect_line_circle(line: Line2, circle: Circle2) -> list[Point2]:
    """0, 1 or 2 intersection points, ordered by descending y (ties by ascending x)."""
    e = line.residual(circle.center)
    fx = circle.center.x - e * line.a
    fy = circle.center.y - e * line.b
    disc = circle.radius * circle.radius - e * e
    if disc < 0.0:
        return []
    if disc == 0.0:
        return [Point2(fx, fy)]
    h = math.sqrt(disc)
    dx, dy = line.direction()
    pts = [Point2(fx + h * dx, fy + h * dy), Point2(fx - h * dx, fy - h * dy)]
    pts.sort(key=lambda p: (-p.y, p.x))
    return pts


def circle_through_three_points(p: Point2, q: Point2, r: Point2) -> Circle2:
    """Circumscribed circle; raises CollinearPoints for degenerate triples."""
    qx, qy = q.x - p.x, q.y - p.y
    rx, ry = r.x - p.x, r.y - p.y
    d = 2.0 * (qx * ry - qy * rx)
    scale = max(math.hypot(qx, qy), math.hypot(rx, ry), math.hypot(rx - qx, ry - qy))
    if abs(d) <= _COLLINEAR_EPS * scale * scale:
        raise CollinearPoints("points are collinear (or coincident); they define a line, not a circle")
    q2 = qx * qx + qy * qy
    r2 = rx * rx + ry * ry
    ux = (ry * q2 - qy * r2) / d
    uy = (qx * r2 - rx * q2) / d
    return Circle2(Point2(p.x + ux, p.y + uy), math.hypot(ux, uy))
