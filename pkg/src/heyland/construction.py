"""End-to-end reconstruction of the circle diagram from two measured phasors.

The no-load and blocked-rotor current phasors fix a unique circle whose center
sits on the horizontal through the no-load point.  Everything else (torque
chord, extremal points, slip scale, efficiency line) is derived from that
circle with straightedge-style operations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    DegenerateChord,
    DegenerateInput,
    IllPosedConstruction,
    InfiniteIntersections,
    NoIntersection,
    NotOnCircle,
    OutsideMotoringArc,
)
from .geometry import (
    TOL_GEOM,
    Circle2,
    Line2,
    Point2,
    intersect_line_circle,
    intersect_line_with_horizontal,
    intersect_lines,
    midpoint,
    perpendicular_bisector,
)

# The slip scale sits parallel to the torque chord on the blocked-rotor side,
# 15% past the blocked-rotor point, so the calibration ray meets it beyond pA.
SLIP_SCALE_MARGIN = 0.15


@dataclass(frozen=True)
class Phasor:
    """Current phasor: magnitude in amperes, angle in radians from the +x axis."""

    magnitude: float
    angle: float

    def __post_init__(self):
        if not (math.isfinite(self.magnitude) and self.magnitude >= 0.0):
            raise ValueError(f"phasor magnitude must be finite and >= 0, got {self.magnitude}")
        if not math.isfinite(self.angle):
            raise ValueError(f"phasor angle must be finite, got {self.angle}")

    @classmethod
    def from_point(cls, p: Point2) -> "Phasor":
        return cls(math.hypot(p.x, p.y), math.atan2(p.y, p.x))


def phasor_to_point(ph: Phasor) -> Point2:
    return Point2(ph.magnitude * math.cos(ph.angle), ph.magnitude * math.sin(ph.angle))


@dataclass(frozen=True)
class TestPoints:
    """No-load endpoint p0 and blocked-rotor endpoint pA (referred to rated voltage)."""

    p0: Point2
    pA: Point2

    def __post_init__(self):
        if self.p0 == self.pA:
            raise DegenerateInput("no-load and blocked-rotor points coincide")


@dataclass(frozen=True)
class ScaleLine:
    """Carrier line plus (point, label) calibration ticks, labels monotone along the line."""

    line: Line2
    tick_points: tuple[tuple[Point2, float], ...]


@dataclass(frozen=True)
class OperatingReadout:
    input_current: Phasor
    power_factor: float
    output_segment: float
    torque_segment: float
    slip: float
    efficiency: float


@dataclass(frozen=True)
class CircleDiagram:
    test: TestPoints
    circle: Circle2
    output_line: Line2
    torque_chord: Line2
    E: Point2
    C_prime: Point2
    M_O: Point2
    M_T: Point2
    slip_scale: ScaleLine
    efficiency_line: ScaleLine


def build_circle(test: TestPoints) -> tuple[Circle2, Point2, Line2]:
    """Circle through both test points with center on the horizontal through p0.

    Returns (circle, midpoint of p0-pA, output line).  Raises
    IllPosedConstruction when the test points are vertically aligned, which
    makes the perpendicular bisector parallel to the reference horizontal.
    """
    c_prime = midpoint(test.p0, test.pA)
    bisector = perpendicular_bisector(test.p0, test.pA)
    try:
        center = intersect_line_with_horizontal(bisector, test.p0.y)
    except (NoIntersection, InfiniteIntersections) as exc:
        raise IllPosedConstruction(
            "test points are vertically aligned; the perpendicular bisector "
            "never meets the horizontal through the no-load point"
        ) from exc
    radius = center.distance_to(test.p0)
    output_line = Line2.from_points(test.p0, test.pA)
    return Circle2(center, radius), c_prime, output_line


def torque_chord(test: TestPoints) -> tuple[Point2, Line2]:
    """Chord from p0 to E = (x_A, (y_0 + y_A)/2)."""
    e = Point2(test.pA.x, 0.5 * (test.p0.y + test.pA.y))
    if e == test.p0:
        raise DegenerateChord("torque chord endpoint E coincides with the no-load point")
    return e, Line2.from_points(test.p0, e)


def _upper_perpendicular_point(circle: Circle2, line: Line2) -> Point2:
    """Upper intersection of the circle with the perpendicular to `line` through the center."""
    perp = line.perpendicular_through(circle.center)
    return intersect_line_circle(perp, circle)[0]


def extremal_points(circle: Circle2, output_line: Line2, chord: Line2) -> tuple[Point2, Point2]:
    """Circle points where the radius is orthogonal to the output line / torque chord.

    Of the two antipodal candidates each, the one with greater y (the motoring
    side) is returned.
    """
    return (
        _upper_perpendicular_point(circle, output_line),
        _upper_perpendicular_point(circle, chord),
    )


def annotate_scales(
    test: TestPoints, circle: Circle2, output_line: Line2, chord: Line2
) -> tuple[ScaleLine, ScaleLine]:
    """Slip scale parallel to the torque chord and efficiency line along the output line.

    Slip ticks: 0 where the scale line crosses the vertical through p0 (the
    limiting zero-slip ray, tangent to the circle at p0) and 1 where it crosses
    the ray p0->pA extended; intermediate ticks interpolate linearly, which is
    exact under central projection from p0.  Efficiency ticks: 0 on the
    vertical through the origin, 1 where the output line meets the horizontal
    through the top of the circle.
    """
    p0 = test.p0
    offset = chord.residual(test.pA)
    if abs(offset) <= TOL_GEOM * max(1.0, circle.radius):
        raise IllPosedConstruction(
            "torque chord passes through the blocked-rotor point; slip scale cannot be placed"
        )
    scale_carrier = chord.parallel_at_offset((1.0 + SLIP_SCALE_MARGIN) * offset)
    try:
        tick0 = intersect_lines(scale_carrier, Line2(1.0, 0.0, p0.x))
        tick1 = intersect_lines(scale_carrier, output_line)
    except (NoIntersection, InfiniteIntersections) as exc:
        raise IllPosedConstruction("slip scale calibration rays do not meet the scale line") from exc
    ticks = tuple(
        (Point2(tick0.x + t * (tick1.x - tick0.x), tick0.y + t * (tick1.y - tick0.y)), t)
        for t in (0.0, 0.25, 0.5, 0.75, 1.0)
    )
    slip_scale = ScaleLine(scale_carrier, ticks)

    top = Line2(0.0, 1.0, circle.center.y + circle.radius)
    try:
        eff0 = intersect_lines(output_line, Line2(1.0, 0.0, 0.0))
        eff1 = intersect_lines(output_line, top)
    except (NoIntersection, InfiniteIntersections) as exc:
        raise IllPosedConstruction(
            "output line never meets the horizontal through the circle top"
        ) from exc
    efficiency_line = ScaleLine(output_line, ((eff0, 0.0), (eff1, 1.0)))
    return slip_scale, efficiency_line


def build_diagram(test: TestPoints) -> CircleDiagram:
    """Run the whole construction and return the annotated diagram."""
    circle, c_prime, output_line = build_circle(test)
    e, chord = torque_chord(test)
    m_o, m_t = extremal_points(circle, output_line, chord)
    slip_scale, efficiency_line = annotate_scales(test, circle, output_line, chord)
    return CircleDiagram(
        test=test,
        circle=circle,
        output_line=output_line,
        torque_chord=chord,
        E=e,
        C_prime=c_prime,
        M_O=m_o,
        M_T=m_t,
        slip_scale=slip_scale,
        efficiency_line=efficiency_line,
    )


def readouts_at_point(
    diagram: CircleDiagram, p: Point2, tol: float = TOL_GEOM, pf_axis: str = "y"
) -> OperatingReadout:
    """Classical vertical-intercept readouts at a circle point on the motoring arc.

    With Q1/Q2 the intersections of the vertical through p with the output line
    and torque chord and D its foot on y = 0: output = |p-Q1|, torque = |p-Q2|,
    slip = |Q1-Q2| / |p-Q2| (0 at p0 by convention), efficiency = |p-Q1| / |p-D|.
    The power factor reads the component along the voltage axis (`pf_axis`).
    """
    if pf_axis not in ("x", "y"):
        raise ValueError(f"pf_axis must be 'x' or 'y', got {pf_axis!r}")
    circle = diagram.circle
    if abs(circle.center.distance_to(p) - circle.radius) > tol:
        raise NotOnCircle(f"point ({p.x}, {p.y}) is not on the diagram circle")
    p0, pa = diagram.test.p0, diagram.test.pA
    if p.y < p0.y - tol:
        raise OutsideMotoringArc("point lies below the reference horizontal")
    lo, hi = min(p0.x, pa.x), max(p0.x, pa.x)
    if not (lo - tol <= p.x <= hi + tol):
        raise OutsideMotoringArc("point lies beyond the arc between the test points")

    y1 = diagram.output_line.y_at(p.x)
    y2 = diagram.torque_chord.y_at(p.x)
    output_segment = abs(p.y - y1)
    torque_segment = abs(p.y - y2)
    slip = abs(y1 - y2) / torque_segment if torque_segment > 0.0 else 0.0
    efficiency = output_segment / abs(p.y) if p.y != 0.0 else 0.0
    norm = math.hypot(p.x, p.y)
    component = p.y if pf_axis == "y" else p.x
    power_factor = component / norm if norm > 0.0 else 0.0
    return OperatingReadout(
        input_current=Phasor.from_point(p),
        power_factor=power_factor,
        output_segment=output_segment,
        torque_segment=torque_segment,
        slip=slip,
        efficiency=efficiency,
    )


def slip_from_scale(diagram: CircleDiagram, p: Point2) -> float:
    """Read the slip of circle point p off the slip scale by central projection from p0.

    Returns inf when the ray through p is parallel to the scale line (p at the
    chord's far intersection, where the vertical-intercept slip diverges too).
    """
    p0 = diagram.test.p0
    if p == p0:
        return 0.0
    scale = diagram.slip_scale
    try:
        s = intersect_lines(Line2.from_points(p0, p), scale.line)
    except (NoIntersection, InfiniteIntersections):
        return math.inf
    t0 = scale.tick_points[0][0]
    t1 = scale.tick_points[-1][0]
    dx, dy = t1.x - t0.x, t1.y - t0.y
    return ((s.x - t0.x) * dx + (s.y - t0.y) * dy) / (dx * dx + dy * dy)
