"""Closed-form readout probabilities under imperfect gates and averaged error surfaces.

For gate angles (theta1, theta2, psi, phi) and input polar angle delta, the
assigned probabilities have the closed form

    p_up   = sin^2(theta1 - theta2) + A
    p_down = cos^2(theta1 - theta2) - A
    A      = (1/2) sin(2 theta1) sin(2 theta2)
             * (1 + cos(psi) cos(phi/2) + sin(psi) sin(phi/2) cos(delta))

The signed error against a perfect apparatus, E = p_up - cos^2(delta/2), is
affine in cos(delta):

    E(delta) = c0 + c1 cos(delta),   c1 = (sin(2 theta1) sin(2 theta2)
                                            sin(psi) sin(phi/2) - 1) / 2 <= 0,

so E is smallest at delta = 0 and largest at delta = pi.  The averaged figure
of merit Ebar = (1/pi) * int_0^pi |E| d(delta) has an exact piecewise form
(|E| kinks where c0 + c1 cos(delta) = 0) and is cross-checked by adaptive
quadrature.  Probabilities are asserted to land in [0, 1], never clamped.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import NamedTuple

import numpy as np

from .core import ATOL, GateParams, ValidationError
from .protocol import ReadoutProbabilities
from .quadrature import integrate_adaptive

DEFAULT_RESOLUTION = 101
DEFAULT_THETA_RANGE = (0.0, math.pi / 2)
DEFAULT_PHASE_RANGE = (0.0, 2 * math.pi)

# Which gate angles an axis writes; "theta" drives both tunneling angles and
# "psi_phi_locked" drives psi = v together with phi = 2v.
_AXIS_TARGETS = {
    "theta1": ("theta1",),
    "theta2": ("theta2",),
    "psi": ("psi",),
    "phi": ("phi",),
    "theta": ("theta1", "theta2"),
    "psi_phi_locked": ("psi", "phi"),
}

AXIS_NAMES = tuple(_AXIS_TARGETS)
PANELS = ("a", "b", "c")


def _check_delta(delta: float) -> None:
    if not 0.0 <= delta <= math.pi:
        raise ValidationError("delta", f"delta = {delta!r} outside [0, pi]")


def probabilities_closed_form(params: GateParams, delta: float) -> ReadoutProbabilities:
    """Evaluate the closed-form p_up/p_down for an input polar angle delta."""
    _check_delta(delta)
    a = 0.5 * math.sin(2 * params.theta1) * math.sin(2 * params.theta2) * (
        1.0
        + math.cos(params.psi) * math.cos(params.phi / 2)
        + math.sin(params.psi) * math.sin(params.phi / 2) * math.cos(delta)
    )
    diff = params.theta1 - params.theta2
    return ReadoutProbabilities(p_up=math.sin(diff) ** 2 + a, p_down=math.cos(diff) ** 2 - a)


def error_coefficients(params: GateParams) -> tuple[float, float]:
    """Coefficients (c0, c1) of the affine error E(delta) = c0 + c1 cos(delta)."""
    s = math.sin(2 * params.theta1) * math.sin(2 * params.theta2)
    c0 = (
        math.sin(params.theta1 - params.theta2) ** 2
        + 0.5 * s * (1.0 + math.cos(params.psi) * math.cos(params.phi / 2))
        - 0.5
    )
    c1 = 0.5 * (s * math.sin(params.psi) * math.sin(params.phi / 2) - 1.0)
    return c0, c1


def measurement_error(params: GateParams, delta: float) -> float:
    """Signed error E = p_up - cos^2(delta/2) of the imperfect apparatus."""
    _check_delta(delta)
    c0, c1 = error_coefficients(params)
    return c0 + c1 * math.cos(delta)


def avg_abs_error(params: GateParams, method: str = "analytic") -> float:
    """Average of |E| over delta uniform on [0, pi].

    "analytic" integrates the affine error piecewise exactly, splitting at the
    interior kink arccos(-c0/c1) when |c0| < |c1|; "quadrature" integrates
    |E| numerically to absolute tolerance 1e-10 as an independent route.
    """
    if method == "analytic":
        c0, c1 = error_coefficients(params)
        if abs(c0) < abs(c1):
            kink = math.acos(-c0 / c1)
            left = c0 * kink + c1 * math.sin(kink)
            right = c0 * (math.pi - kink) - c1 * math.sin(kink)
            return (abs(left) + abs(right)) / math.pi
        # One sign throughout; the cosine term integrates to zero over [0, pi].
        return abs(c0)
    if method == "quadrature":
        integral = integrate_adaptive(
            lambda d: abs(measurement_error(params, d)), 0.0, math.pi, tol=1e-10
        )
        return integral / math.pi
    raise ValidationError("method", f"unknown method {method!r}, expected analytic or quadrature")


class ExtremalError(NamedTuple):
    e_min: float
    e_max: float
    delta_min: float
    delta_max: float


def extremal_error(params: GateParams, grid_points: int = 101) -> ExtremalError:
    """Error extremes over all inputs: the minimum sits at delta = 0 and the
    maximum at delta = pi, verified on a delta grid before returning."""
    e_low = measurement_error(params, 0.0)
    e_high = measurement_error(params, math.pi)
    for delta in np.linspace(0.0, math.pi, grid_points):
        e = measurement_error(params, float(delta))
        if e < e_low - ATOL or e > e_high + ATOL:
            raise ValidationError(
                "params", f"error at delta = {float(delta)!r} escapes the [E(0), E(pi)] envelope"
            )
    return ExtremalError(e_low, e_high, 0.0, math.pi)


@dataclass(frozen=True)
class AxisSpec:
    """One swept gate parameter: its name, range, and point count."""

    name: str
    start: float
    stop: float
    num: int

    def __post_init__(self):
        if self.name not in _AXIS_TARGETS:
            raise ValidationError(
                "axis", f"unknown axis name {self.name!r}, expected one of {AXIS_NAMES}"
            )
        if self.num < 2:
            raise ValidationError("resolution", f"need at least 2 points per axis, got {self.num}")

    def values(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, self.num)


@dataclass(frozen=True, eq=False)
class ErrorGrid:
    """Rectangular sweep of the averaged error, row-major with axis1 slowest."""

    axis1: AxisSpec
    axis2: AxisSpec
    fixed: GateParams
    values: np.ndarray

    def __post_init__(self):
        vals = np.array(self.values, dtype=float)
        if vals.shape != (self.axis1.num, self.axis2.num):
            raise ValidationError(
                "values",
                f"grid shape {vals.shape} does not match axes ({self.axis1.num}, {self.axis2.num})",
            )
        if vals.size and (vals.min() < -ATOL or vals.max() > 1.0 + ATOL):
            raise ValidationError("values", "averaged error escaped [0, 1]")
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)


def _write_axis(params: GateParams, name: str, value: float) -> GateParams:
    if name == "theta":
        return replace(params, theta1=value, theta2=value)
    if name == "psi_phi_locked":
        return replace(params, psi=value, phi=2.0 * value)
    return replace(params, **{name: value})


def sweep_grid(
    axis1: AxisSpec, axis2: AxisSpec, fixed: GateParams, method: str = "analytic"
) -> ErrorGrid:
    """Evaluate the averaged error at every node of a two-axis sweep.

    Node evaluations are independent pure computations; output ordering is
    row-major by axis indices regardless of how they are scheduled.
    """
    touched1, touched2 = _AXIS_TARGETS[axis1.name], _AXIS_TARGETS[axis2.name]
    if set(touched1) & set(touched2):
        raise ValidationError(
            "axis2", f"axis {axis2.name!r} overlaps axis {axis1.name!r} on {set(touched1) & set(touched2)}"
        )
    vals = np.empty((axis1.num, axis2.num))
    for i, v1 in enumerate(axis1.values()):
        base = _write_axis(fixed, axis1.name, float(v1))
        for j, v2 in enumerate(axis2.values()):
            vals[i, j] = avg_abs_error(_write_axis(base, axis2.name, float(v2)), method)
    return ErrorGrid(axis1, axis2, fixed, vals)


def panel_axes(
    panel: str,
    resolution: int = DEFAULT_RESOLUTION,
    range1: tuple[float, float] | None = None,
    range2: tuple[float, float] | None = None,
) -> tuple[AxisSpec, AxisSpec, GateParams]:
    """Preset two-parameter slices of the error surface.

    a: tunneling angles theta1 vs theta2, phases ideal;
    b: phases psi vs phi, tunneling angles ideal;
    c: locked pair theta1 = theta2 = theta vs psi, with phi locked to 2 psi.
    """
    ideal = GateParams.ideal()
    if panel == "a":
        r1 = range1 if range1 is not None else DEFAULT_THETA_RANGE
        r2 = range2 if range2 is not None else DEFAULT_THETA_RANGE
        return AxisSpec("theta1", r1[0], r1[1], resolution), AxisSpec("theta2", r2[0], r2[1], resolution), ideal
    if panel == "b":
        r1 = range1 if range1 is not None else DEFAULT_PHASE_RANGE
        r2 = range2 if range2 is not None else DEFAULT_PHASE_RANGE
        return AxisSpec("psi", r1[0], r1[1], resolution), AxisSpec("phi", r2[0], r2[1], resolution), ideal
    if panel == "c":
        r1 = range1 if range1 is not None else DEFAULT_THETA_RANGE
        r2 = range2 if range2 is not None else DEFAULT_PHASE_RANGE
        return (
            AxisSpec("theta", r1[0], r1[1], resolution),
            AxisSpec("psi_phi_locked", r2[0], r2[1], resolution),
            ideal,
        )
    raise ValidationError("panel", f"unknown panel {panel!r}, expected one of {PANELS}")
