"""Control-to-angle calculators: pulse areas for tunneling rotations and
spin-orbit region lengths for spin rotations.

The tunneling angle follows theta = -integral(tau dt)/hbar for a piecewise
constant coupling pulse.  The spin-orbit precession angle accumulated while
crossing a region of length L with coupling alpha follows

    theta(L) = 2 m* alpha L / hbar^2

with the effective mass m* in units of the free-electron mass.  Under this
convention m* = 0.026 puts the pi/2-rotation length at 58 nm for InAs
(alpha = 4e-11 eV m) and 250 nm for InGaAs/InAlAs (alpha = 0.93e-11 eV m)
to within 2%.
"""

from __future__ import annotations

from dataclasses import dataclass

from .constants import ELECTRON_MASS_KG, EV_TO_J, HBAR_J_S, HBAR_UEV_PS, m_to_nm, nm_to_m
from .core import ValidationError

DEFAULT_EFFECTIVE_MASS = 0.026


@dataclass(frozen=True)
class PulseSpec:
    """Piecewise constant coupling pulse: (amplitude in ueV, duration in ps)
    per segment."""

    segments: tuple[tuple[float, float], ...]

    def __post_init__(self):
        if not self.segments:
            raise ValidationError("segments", "pulse needs at least one segment")
        for i, (_, duration) in enumerate(self.segments):
            if duration <= 0:
                raise ValidationError("segments", f"segment {i} duration {duration!r} must be > 0")


@dataclass(frozen=True)
class RashbaSpec:
    """Spin-orbit region parameters.

    Parameters
    ----------
    alpha_ev_m : float
        Spin-orbit coupling in eV*m; must be positive.
    effective_mass : float
        Carrier mass in units of the free-electron mass; must be positive.
    target_angle : float
        Desired spin-rotation angle in radians.
    """

    alpha_ev_m: float
    effective_mass: float
    target_angle: float

    def __post_init__(self):
        if self.alpha_ev_m <= 0:
            raise ValidationError("alpha", f"alpha = {self.alpha_ev_m!r} must be > 0")
        if self.effective_mass <= 0:
            raise ValidationError("effective_mass", f"mass = {self.effective_mass!r} must be > 0")


def pulse_angle(spec: PulseSpec) -> float:
    """Tunneling rotation angle -sum(tau_i * dt_i)/hbar in radians."""
    area = sum(amplitude * duration for amplitude, duration in spec.segments)
    return -area / HBAR_UEV_PS


def pulse_for_angle(target: float, duration_ps: float) -> float:
    """Constant amplitude (ueV) realizing `target` radians over `duration_ps`.

    Round-trips through pulse_angle to 1e-12 relative.
    """
    if duration_ps <= 0:
        raise ValidationError("duration", f"duration = {duration_ps!r} must be > 0")
    return -target * HBAR_UEV_PS / duration_ps


def rashba_length(spec: RashbaSpec) -> float:
    """Region length (nm) whose crossing rotates the spin by the target angle.

    Parameters
    ----------
    spec : RashbaSpec
        Coupling, effective mass, and target rotation angle.

    Returns
    -------
    float
        L = target_angle * hbar^2 / (2 m* alpha), in nanometers.
    """
    mass_kg = spec.effective_mass * ELECTRON_MASS_KG
    alpha_j_m = spec.alpha_ev_m * EV_TO_J
    length_m = spec.target_angle * HBAR_J_S**2 / (2.0 * mass_kg * alpha_j_m)
    return m_to_nm(length_m)


def rashba_angle(alpha_ev_m: float, effective_mass: float, length_nm: float) -> float:
    """Spin-rotation angle (radians) accumulated over `length_nm`.

    Inverse of rashba_length; the pair round-trips to 1e-12 relative.
    """
    if alpha_ev_m <= 0:
        raise ValidationError("alpha", f"alpha = {alpha_ev_m!r} must be > 0")
    if effective_mass <= 0:
        raise ValidationError("effective_mass", f"mass = {effective_mass!r} must be > 0")
    mass_kg = effective_mass * ELECTRON_MASS_KG
    alpha_j_m = alpha_ev_m * EV_TO_J
    return 2.0 * mass_kg * alpha_j_m * nm_to_m(length_nm) / HBAR_J_S**2
