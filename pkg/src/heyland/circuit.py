"""Per-phase steady-state model of the induction machine.

Thevenin reduction of the stator/magnetizing branches, rotor and input
currents versus slip, the air-gap-power torque proxy, and the circle carrying
the current locus.  All impedances are per-phase ohms, currents amperes; the
supply voltage is the (real) reference phasor, so current components are
relative to the voltage axis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

from .errors import InvalidSlip, InvariantViolation, SingularNetwork
from .geometry import Circle2, Point2, circle_through_three_points

_LOCUS_CHECK_SLIPS = (0.05, 0.2, 2.0, 5.0, -0.05, -0.5, -2.0, -5.0)


@dataclass(frozen=True)
class CircuitParams:
    """Equivalent-circuit constants, rotor quantities referred to the stator.

    Rs, Xs: stator resistance and leakage reactance
    Xm:     magnetizing reactance (purely reactive branch)
    Rr, Xr: referred rotor resistance and leakage reactance
    V:      per-phase supply voltage
    """

    Rs: float
    Xs: float
    Xm: float
    Rr: float
    Xr: float
    V: float

    def __post_init__(self):
        for key in ("Rs", "Xs", "Xm", "Rr", "Xr", "V"):
            if not math.isfinite(getattr(self, key)):
                raise InvariantViolation(key, "must be finite")
        for key in ("Rs", "Xs", "Xr"):
            if getattr(self, key) < 0.0:
                raise InvariantViolation(key, "must be >= 0")
        for key in ("Xm", "Rr", "V"):
            if getattr(self, key) <= 0.0:
                raise InvariantViolation(key, "must be > 0")

    @property
    def Zs(self) -> complex:
        return complex(self.Rs, self.Xs)

    @property
    def Zm(self) -> complex:
        return complex(0.0, self.Xm)

    def Zr(self, s: float) -> complex:
        if s == 0.0:
            raise InvalidSlip("rotor impedance is undefined at slip 0")
        return complex(self.Rr / s, self.Xr)


@dataclass(frozen=True)
class TheveninEquivalent:
    """Source V_th behind R_th + jX_th as seen from the rotor branch."""

    R_th: float
    X_th: float
    V_th: complex

    @property
    def Z_th(self) -> complex:
        return complex(self.R_th, self.X_th)


def thevenin(params: CircuitParams) -> TheveninEquivalent:
    """Collapse stator and magnetizing branches: Z_th = Zs*Zm/(Zs+Zm), V_th = V*Zm/(Zs+Zm)."""
    denom = params.Zs + params.Zm
    if denom == 0:
        raise SingularNetwork("Zs + Zm = 0")
    z_th = params.Zs * params.Zm / denom
    v_th = params.V * params.Zm / denom
    return TheveninEquivalent(z_th.real, z_th.imag, v_th)


def rotor_current(th: TheveninEquivalent, params: CircuitParams, s: float) -> complex:
    """I_r(s) = V_th / (Z_th + Rr/s + jXr)."""
    if s == 0.0:
        raise InvalidSlip("slip must be nonzero")
    return th.V_th / complex(th.R_th + params.Rr / s, th.X_th + params.Xr)


def rotor_current_derivative(th: TheveninEquivalent, params: CircuitParams, s: float) -> complex:
    """Closed-form d I_r / d s."""
    if s == 0.0:
        raise InvalidSlip("slip must be nonzero")
    delta = complex(th.R_th, th.X_th + params.Xr)
    return th.V_th * params.Rr / (params.Rr + delta * s) ** 2


def input_current(params: CircuitParams, s: float | None = None) -> complex:
    """Stator current at slip s; s=None selects the symbolic no-load (s -> 0) limit."""
    if s is None:
        denom = params.Zs + params.Zm
        if denom == 0:
            raise SingularNetwork("Zs + Zm = 0")
        return params.V / denom
    if s == 0.0:
        raise InvalidSlip("slip must be nonzero; pass s=None for the no-load limit")
    zr = params.Zr(s)
    denom = params.Zs + params.Zm * zr / (params.Zm + zr)
    if denom == 0:
        raise SingularNetwork("total input impedance is zero")
    return params.V / denom


def analytic_locus_circle(
    params: CircuitParams, which: Literal["rotor", "input"] = "input"
) -> Circle2:
    """Circle containing the chosen current locus over all nonzero real slips.

    Fitted through three exact samples (slips 1, -1, 0.5 for the rotor current;
    the no-load limit, 1 and -1 for the input current) and cross-checked
    against a slip sweep; CollinearPoints from the fit propagates (it cannot
    occur for valid parameters).
    """
    if which == "rotor":
        th = thevenin(params)
        samples = [rotor_current(th, params, s) for s in (1.0, -1.0, 0.5)]
        current = lambda s: rotor_current(th, params, s)  # noqa: E731
    elif which == "input":
        samples = [input_current(params, s) for s in (None, 1.0, -1.0)]
        current = lambda s: input_current(params, s)  # noqa: E731
    else:
        raise ValueError(f"which must be 'rotor' or 'input', got {which!r}")
    circle = circle_through_three_points(*(Point2.from_complex(z) for z in samples))
    for s in _LOCUS_CHECK_SLIPS:
        z = current(s)
        if abs(abs(z - circle.center.as_complex()) - circle.radius) > 1e-6 * circle.radius:
            raise RuntimeError(f"{which} current at slip {s} left the fitted locus circle")
    return circle


def torque(th: TheveninEquivalent, params: CircuitParams, s: float) -> float:
    """Air-gap power proxy |I_r|^2 * Rr / s, proportional to torque at fixed synchronous speed."""
    if s == 0.0:
        raise InvalidSlip("slip must be nonzero")
    i = rotor_current(th, params, s)
    return (i.real * i.real + i.imag * i.imag) * params.Rr / s


def torque_from_rotated_phasor(th: TheveninEquivalent, params: CircuitParams, s: float) -> float:
    """Torque proxy from the voltage-aligned current projection, -Im{I_r * conj(V_th)} / s.

    Differs from `torque` by the constant factor Rr / (X_th + Xr); the two
    share extremizers.
    """
    if s == 0.0:
        raise InvalidSlip("slip must be nonzero")
    i = rotor_current(th, params, s)
    return -(i * th.V_th.conjugate()).imag / s


def closed_form_max_torque_slip(th: TheveninEquivalent, params: CircuitParams) -> float:
    """Analytic maximizer of the air-gap power over s > 0: Rr / |Z_th + jXr|."""
    return params.Rr / math.hypot(th.R_th, th.X_th + params.Xr)


def max_torque_slip(
    th: TheveninEquivalent,
    params: CircuitParams,
    s_lo: float = 1e-3,
    s_hi: float = 10.0,
    grid: int = 1000,
    tol: float = 1e-10,
) -> tuple[float, float]:
    """Numeric argmax of torque over positive slip: log-grid scan plus golden-section refinement.

    The scan window widens by decades when the coarse maximum sits on a
    boundary, so extreme Rr/Xr ratios are still bracketed.  Returns
    (s at maximum torque, maximum torque).
    """
    lo, hi = s_lo, s_hi
    for _ in range(8):
        ratio = hi / lo
        slips = [lo * ratio ** (i / (grid - 1)) for i in range(grid)]
        values = [torque(th, params, s) for s in slips]
        k = max(range(grid), key=values.__getitem__)
        if k == 0 and lo > 1e-9:
            lo /= 10.0
        elif k == grid - 1 and hi < 1e6:
            hi *= 10.0
        else:
            break
    a = slips[max(k - 1, 0)]
    b = slips[min(k + 1, grid - 1)]
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc = torque(th, params, c)
    fd = torque(th, params, d)
    while b - a > tol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = torque(th, params, c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = torque(th, params, d)
    s_best = 0.5 * (a + b)
    return s_best, torque(th, params, s_best)
