"""Fractional linear maps on the extended plane and the image of the slip axis.

With z = 1/s the rotor current is w = (a z + b)/(c z + d); the punctured real
axis maps to a circle whenever the pole is not real, which is the analytic
reason the current locus is circular.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .circuit import CircuitParams, TheveninEquivalent, rotor_current, rotor_current_derivative
from .errors import DegenerateMap, InvalidSlip
from .geometry import Circle2, Line2, Point2, circle_through_three_points

INFINITY: complex = complex(math.inf, math.inf)
"""The point at infinity of the extended plane."""

GeneralizedCircle = Circle2 | Line2
"""A circle or a line (a circle through the point at infinity)."""

_POLE_IMAG_EPS = 1e-12
_REAL_SAMPLES = (0.0, 1.0, -1.0, 2.0, 3.0, -2.0)


def is_infinite(z: complex) -> bool:
    return cmath.isinf(z)


@dataclass(frozen=True)
class MobiusMap:
    """w = (a*z + b) / (c*z + d) with a*d - b*c != 0."""

    a: complex
    b: complex
    c: complex
    d: complex

    def __post_init__(self):
        if self.a * self.d - self.b * self.c == 0:
            raise DegenerateMap("determinant a*d - b*c vanishes")

    @property
    def determinant(self) -> complex:
        return self.a * self.d - self.b * self.c

    @property
    def pole(self) -> complex:
        """Preimage of infinity."""
        if self.c == 0:
            return INFINITY
        return -self.d / self.c


def evaluate(m: MobiusMap, z: complex) -> complex:
    """Apply the map with extended-plane semantics: the pole maps to INFINITY, INFINITY to a/c."""
    if is_infinite(z):
        return INFINITY if m.c == 0 else m.a / m.c
    den = m.c * z + m.d
    if den == 0:
        return INFINITY
    return (m.a * z + m.b) / den


def invert(m: MobiusMap, w: complex) -> complex:
    """Preimage of w under the map."""
    if is_infinite(w):
        return m.pole
    den = m.a - m.c * w
    if den == 0:
        return INFINITY
    return (m.d * w - m.b) / den


def from_circuit(th: TheveninEquivalent, params: CircuitParams) -> MobiusMap:
    """Map z = 1/s to the rotor current: (0, V_th, Rr, R_th + j(X_th + Xr))."""
    if th.V_th == 0:
        raise DegenerateMap("zero Thevenin voltage gives a constant map")
    return MobiusMap(0j, th.V_th, complex(params.Rr), complex(th.R_th, th.X_th + params.Xr))


def image_of_real_axis(m: MobiusMap) -> GeneralizedCircle:
    """Image of the real axis: a line when the pole is real (or the map is affine), else a circle."""
    pole = m.pole
    if is_infinite(pole):
        w1, w2 = (evaluate(m, z) for z in _REAL_SAMPLES[:2])
        return Line2.from_points(Point2.from_complex(w1), Point2.from_complex(w2))
    if abs(pole.imag) <= _POLE_IMAG_EPS * (1.0 + abs(pole)):
        zs = [z for z in _REAL_SAMPLES if abs(z - pole.real) > 1e-9][:2]
        w1, w2 = (evaluate(m, z) for z in zs)
        return Line2.from_points(Point2.from_complex(w1), Point2.from_complex(w2))
    zs = _REAL_SAMPLES[:3]
    if min(abs(z - pole) for z in zs) < 1e-6 * (1.0 + abs(pole)):
        zs = _REAL_SAMPLES[3:]
    pts = (Point2.from_complex(evaluate(m, z)) for z in zs)
    return circle_through_three_points(*pts)


def torque_phase_residual(th: TheveninEquivalent, params: CircuitParams, s: float) -> float:
    """Im{(s * dI_r/ds - I_r) * conj(V_th)}: the numerator of dT/ds, zero exactly at torque extrema.

    For the circuit map this equals -Im{b*d*conj(V_th) / (c*z + d)^2} at z = 1/s.
    It is negative below the maximum-torque slip and positive above it.
    """
    if s == 0.0:
        raise InvalidSlip("slip must be nonzero")
    i = rotor_current(th, params, s)
    di = rotor_current_derivative(th, params, s)
    return ((s * di - i) * th.V_th.conjugate()).imag
