"""Cross-checks that three independent routes describe the same machine.

For any valid parameter set the rotor-current locus is computed (i) by the
geometric construction from two synthetic test points, (ii) by the analytic
three-slip circle fit, and (iii) as the fractional-linear image of the slip
axis.  All three are compared in the diagram frame whose vertical axis is the
Thevenin voltage direction; in that frame the locus center falls exactly on
the horizontal through the no-load point, which is what the construction
assumes.  The maximum-torque slip is likewise computed geometrically
(orthogonal radius against the zero-torque chord), by phase-residual root
finding, and by numeric argmax, and the three must agree.
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass

from .circuit import (
    CircuitParams,
    TheveninEquivalent,
    analytic_locus_circle,
    closed_form_max_torque_slip,
    input_current,
    max_torque_slip,
    rotor_current,
    thevenin,
)
from .construction import TestPoints, build_circle, extremal_points
from .geometry import Circle2, Line2, Point2
from .mobius import from_circuit, image_of_real_axis, invert, torque_phase_residual

DEFAULT_CIRCLE_TOL = 1e-9
DEFAULT_SLIP_TOL = 1e-4
_CLOSED_FORM_TOL = 1e-6


@dataclass(frozen=True)
class EquivalenceReport:
    """Outcome of the three-route comparison, circles in the diagram frame.

    center_error / radius_error are the worst disagreements of the geometric
    and map-image circles against the analytic one; max_point_residual is the
    worst distance-from-circle over the slip sweep (rotor and input loci,
    motoring and generating).
    """

    geometric_circle: Circle2
    analytic_circle: Circle2
    mobius_circle: Circle2
    center_error: float
    radius_error: float
    max_point_residual: float
    torque_slip_geometric: float
    torque_slip_analytic: float
    passed: bool


def compare_circles(c1: Circle2, c2: Circle2, tol: float) -> tuple[float, float, bool]:
    center_error = c1.center.distance_to(c2.center)
    radius_error = abs(c1.radius - c2.radius)
    return center_error, radius_error, center_error <= tol and radius_error <= tol


def diagram_frame_rotation(th: TheveninEquivalent) -> complex:
    """Unit complex that turns the Thevenin voltage onto the +y axis."""
    return cmath.exp(1j * (math.pi / 2 - cmath.phase(th.V_th)))


def _rotate_circle(circle: Circle2, u: complex) -> Circle2:
    return Circle2(Point2.from_complex(circle.center.as_complex() * u), circle.radius)


def zero_torque_chord(th: TheveninEquivalent, params: CircuitParams, u: complex) -> Line2:
    """Chord through the zero-air-gap-power locus points (slip -> 0 and slip -> inf).

    The air-gap power is a linear function on the locus circle vanishing on
    this chord, so the point with radius orthogonal to it carries maximum
    torque.
    """
    origin = Point2(0.0, 0.0)
    p_inf = Point2.from_complex(u * (th.V_th / complex(th.R_th, th.X_th + params.Xr)))
    return Line2.from_points(origin, p_inf)


def sample_params(rng: random.Random) -> CircuitParams:
    """Random machine constants in the verification ranges."""
    return CircuitParams(
        Rs=rng.uniform(0.0, 1.0),
        Xs=rng.uniform(0.0, 1.0),
        Xm=rng.uniform(5.0, 50.0),
        Rr=rng.uniform(0.05, 2.0),
        Xr=rng.uniform(0.1, 2.0),
        V=1.0,
    )


def slip_sweep(n: int, s_min: float = 0.01, s_max: float = 5.0) -> list[float]:
    """n log-spaced motoring slips in [s_min, s_max] plus their generating mirrors."""
    ratio = s_max / s_min
    mags = [s_min * ratio ** (i / (n - 1)) for i in range(n)]
    return mags + [-s for s in mags]


def phase_residual_root(
    th: TheveninEquivalent, params: CircuitParams, lo: float = 1e-3, hi: float = 10.0
) -> float:
    """Bisection root of the torque phase residual over positive slip."""
    f_lo, f_hi = torque_phase_residual(th, params, lo), torque_phase_residual(th, params, hi)
    while f_lo > 0.0 and lo > 1e-12:
        lo /= 10.0
        f_lo = torque_phase_residual(th, params, lo)
    while f_hi < 0.0 and hi < 1e12:
        hi *= 10.0
        f_hi = torque_phase_residual(th, params, hi)
    if f_lo > 0.0 or f_hi < 0.0:
        raise RuntimeError("phase residual does not change sign; no torque extremum bracketed")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if torque_phase_residual(th, params, mid) < 0.0:
            lo = mid
        else:
            hi = mid
        if hi - lo <= 1e-15 * hi:
            break
    return 0.5 * (lo + hi)


def verify_full_equivalence(
    params: CircuitParams,
    tol: float = DEFAULT_CIRCLE_TOL,
    slip_tol: float = DEFAULT_SLIP_TOL,
    n_slips: int = 50,
) -> EquivalenceReport:
    """Run the full three-route comparison for one parameter set."""
    th = thevenin(params)
    u = diagram_frame_rotation(th)

    # Route 1: geometric construction on synthetic test points (no-load point
    # of the rotor current is the origin; blocked rotor is slip 1).
    p0 = Point2(0.0, 0.0)
    pa = Point2.from_complex(u * rotor_current(th, params, 1.0))
    geometric, _, output_line = build_circle(TestPoints(p0, pa))

    # Route 2: analytic three-slip fit.  Route 3: image of the slip axis.
    analytic = _rotate_circle(analytic_locus_circle(params, "rotor"), u)
    mobius_map = from_circuit(th, params)
    image = image_of_real_axis(mobius_map)
    if not isinstance(image, Circle2):
        raise RuntimeError("slip-axis image degenerated to a line for valid parameters")
    mobius_circle = _rotate_circle(image, u)

    ce1, re1, ok1 = compare_circles(geometric, analytic, tol)
    ce2, re2, ok2 = compare_circles(mobius_circle, analytic, tol)
    center_error = max(ce1, ce2)
    radius_error = max(re1, re2)

    # Membership of motoring and generating sweeps on both loci.
    input_circle = analytic_locus_circle(params, "input")
    c_rot = geometric.center.as_complex()
    c_inp = input_circle.center.as_complex()
    max_residual = 0.0
    max_relative = 0.0
    for s in slip_sweep(n_slips):
        r_rot = abs(abs(u * rotor_current(th, params, s) - c_rot) - geometric.radius)
        r_inp = abs(abs(input_current(params, s) - c_inp) - input_circle.radius)
        max_residual = max(max_residual, r_rot, r_inp)
        max_relative = max(
            max_relative, r_rot / geometric.radius, r_inp / input_circle.radius
        )

    # Maximum-torque slip three ways: geometric orthogonality, residual root,
    # numeric argmax (the argmax also carries the closed-form cross-check).
    s_numeric, _ = max_torque_slip(th, params)
    chord = zero_torque_chord(th, params, u)
    _, m_t = extremal_points(geometric, output_line, chord)
    z = invert(mobius_map, m_t.as_complex() / u)
    if z.real == 0.0 or abs(z.imag) > 1e-6 * abs(z):
        raise RuntimeError("geometric maximum-torque point does not invert to a real slip")
    s_geometric = 1.0 / z.real
    s_root = phase_residual_root(th, params)
    s_closed = closed_form_max_torque_slip(th, params)

    passed = (
        ok1
        and ok2
        and max_relative <= tol
        and abs(s_geometric - s_numeric) <= slip_tol * s_numeric
        and abs(s_root - s_numeric) <= slip_tol * s_numeric
        and abs(s_closed - s_numeric) <= _CLOSED_FORM_TOL * s_numeric
    )
    return EquivalenceReport(
        geometric_circle=geometric,
        analytic_circle=analytic,
        mobius_circle=mobius_circle,
        center_error=center_error,
        radius_error=radius_error,
        max_point_residual=max_residual,
        torque_slip_geometric=s_geometric,
        torque_slip_analytic=s_numeric,
        passed=passed,
    )
