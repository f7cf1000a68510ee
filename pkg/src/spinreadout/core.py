"""Basis conventions, state vectors, and gate constructors for the spin x mode space.

A single particle carries a spin-1/2 ("up"/"down") and a dot-occupancy mode.
Two layouts are supported, with a fixed spin-major, mode-minor index map:

    dim 4, modes ("0", "1"):
        |up;0> -> 0, |up;1> -> 1, |down;0> -> 2, |down;1> -> 3
    dim 6, modes ("0", "0p", "1"):
        |up;0> -> 0, |up;0p> -> 1, |up;1> -> 2,
        |down;0> -> 3, |down;0p> -> 4, |down;1> -> 5

All angles are radians.  Every value is immutable after construction and all
operations are pure, so everything here is safe to share across threads.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

SPIN_UP = "up"
SPIN_DOWN = "down"
SPINS = (SPIN_UP, SPIN_DOWN)

DOT0 = "0"
DOT0P = "0p"
DOT1 = "1"

TWO_DOT_MODES = (DOT0, DOT1)
THREE_DOT_MODES = (DOT0, DOT0P, DOT1)
_MODES_BY_DIM = {4: TWO_DOT_MODES, 6: THREE_DOT_MODES}

# Absolute tolerance for all exact-algebra checks (norms, unitarity,
# probability sums) in double precision.
ATOL = 1e-12


class ValidationError(ValueError):
    """An argument fell outside its documented domain; `field` names it."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


def modes_for_dim(dim: int) -> tuple[str, ...]:
    """Ordered mode labels for a supported dimension (4 or 6)."""
    try:
        return _MODES_BY_DIM[dim]
    except KeyError:
        raise ValidationError("dim", f"unsupported dimension {dim}, expected 4 or 6") from None


def mode_position(mode: str, dim: int) -> int:
    """Position of `mode` within one spin block of a `dim`-dimensional space."""
    modes = modes_for_dim(dim)
    try:
        return modes.index(mode)
    except ValueError:
        raise ValidationError(
            "mode", f"unknown mode {mode!r} for dim {dim}, expected one of {modes}"
        ) from None


def basis_index(spin: str, mode: str, dim: int = 4) -> int:
    """Flat index of |spin; mode> under the spin-major ordering."""
    if spin not in SPINS:
        raise ValidationError("spin", f"unknown spin {spin!r}, expected 'up' or 'down'")
    n_modes = len(modes_for_dim(dim))
    return (0 if spin == SPIN_UP else 1) * n_modes + mode_position(mode, dim)


@dataclass(frozen=True, eq=False)
class StateVector:
    """Complex amplitude vector over the spin x mode basis, unit norm enforced."""

    amplitudes: np.ndarray

    def __post_init__(self):
        amp = np.array(self.amplitudes, dtype=complex)
        if amp.ndim != 1 or amp.shape[0] not in _MODES_BY_DIM:
            raise ValidationError(
                "amplitudes", f"expected a vector of length 4 or 6, got shape {amp.shape}"
            )
        norm_sq = float(np.sum(np.abs(amp) ** 2))
        if abs(norm_sq - 1.0) > ATOL:
            raise ValidationError(
                "amplitudes", f"squared norm {norm_sq!r} deviates from 1 by more than {ATOL}"
            )
        amp.setflags(write=False)
        object.__setattr__(self, "amplitudes", amp)

    @property
    def dim(self) -> int:
        return self.amplitudes.shape[0]

    def amplitude(self, spin: str, mode: str) -> complex:
        return complex(self.amplitudes[basis_index(spin, mode, self.dim)])


@dataclass(frozen=True, eq=False)
class Unitary:
    """Dense complex square matrix; unitarity is checked at construction."""

    matrix: np.ndarray

    def __post_init__(self):
        m = np.array(self.matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] not in _MODES_BY_DIM:
            raise ValidationError("matrix", f"expected a 4x4 or 6x6 matrix, got shape {m.shape}")
        defect = float(np.max(np.abs(m.conj().T @ m - np.eye(m.shape[0]))))
        if defect > ATOL:
            raise ValidationError("matrix", f"not unitary, max |U^dag U - I| = {defect:.3e}")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


def basis_state(spin: str, mode: str, dim: int = 4) -> StateVector:
    amp = np.zeros(dim, dtype=complex)
    amp[basis_index(spin, mode, dim)] = 1.0
    return StateVector(amp)


def identity(dim: int = 4) -> Unitary:
    modes_for_dim(dim)
    return Unitary(np.eye(dim, dtype=complex))


def rx_mode(theta: float, mode_pair: tuple[str, str] = (DOT0, DOT1), dim: int = 4) -> Unitary:
    """Tunneling rotation exp(i theta sigma_x) on a mode pair, identity on spin.

    Sends |sigma; a> to cos(theta)|sigma; a> + i sin(theta)|sigma; b> for the
    pair (a, b); a third mode, if present, is untouched.
    """
    if len(mode_pair) != 2:
        raise ValidationError("mode_pair", f"expected two modes, got {mode_pair!r}")
    a, b = mode_pair
    if a == b:
        raise ValidationError("mode_pair", f"modes must be distinct, got {a!r} twice")
    pos_a, pos_b = mode_position(a, dim), mode_position(b, dim)
    n_modes = len(modes_for_dim(dim))
    c, s = math.cos(theta), math.sin(theta)
    m = np.eye(dim, dtype=complex)
    for offset in (0, n_modes):
        i, j = offset + pos_a, offset + pos_b
        m[i, i] = c
        m[j, j] = c
        m[i, j] = 1j * s
        m[j, i] = 1j * s
    return Unitary(m)


def u2_ideal() -> Unitary:
    """Local spin sign flip on dot 0: diag(1, 1, -1, 1), flipping only |down;0>."""
    return Unitary(np.diag([1, 1, -1, 1]).astype(complex))


def u2_general(psi: float, phi: float) -> Unitary:
    """Imperfect conditional phase diag(e^{i(psi-phi/2)}, 1, e^{i(psi+phi/2)}, 1).

    psi is the extra phase tying spin to mode, phi the spin-rotation angle;
    (psi, phi) = (pi/2, pi) recovers the ideal sign flip.
    """
    return Unitary(
        np.diag([cmath.exp(1j * (psi - phi / 2)), 1.0, cmath.exp(1j * (psi + phi / 2)), 1.0])
    )


def rz_spin(phi: float, mode: str, dim: int = 4) -> Unitary:
    """Spin rotation exp(i phi sigma_z) applied on the target mode only."""
    pos = mode_position(mode, dim)
    n_modes = len(modes_for_dim(dim))
    m = np.eye(dim, dtype=complex)
    m[pos, pos] = cmath.exp(1j * phi)
    m[n_modes + pos, n_modes + pos] = cmath.exp(-1j * phi)
    return Unitary(m)


def compose(gates: list[Unitary] | tuple[Unitary, ...]) -> Unitary:
    """Product of `gates` in time order: the first listed acts first."""
    if not gates:
        raise ValidationError("gates", "need at least one gate to compose")
    dim = gates[0].dim
    total = np.eye(dim, dtype=complex)
    for i, gate in enumerate(gates):
        if gate.dim != dim:
            raise ValidationError("gates", f"gate {i} has dim {gate.dim}, expected {dim}")
        total = gate.matrix @ total
    return Unitary(total)


def apply(u: Unitary, s: StateVector) -> StateVector:
    """Act with `u` on `s`; the result re-validates the unit norm."""
    if u.dim != s.dim:
        raise ValidationError("dim", f"gate dim {u.dim} does not match state dim {s.dim}")
    return StateVector(u.matrix @ s.amplitudes)


@dataclass(frozen=True)
class SpinInput:
    """Bloch angles of the unknown spin sitting in dot 0.

    delta is rejected outside [0, pi] rather than wrapped, so that averages
    over the input distribution keep their meaning.
    """

    delta: float
    gamma: float = 0.0

    def __post_init__(self):
        if not 0.0 <= self.delta <= math.pi:
            raise ValidationError("delta", f"delta = {self.delta!r} outside [0, pi]")
        if not 0.0 <= self.gamma < 2 * math.pi:
            raise ValidationError("gamma", f"gamma = {self.gamma!r} outside [0, 2*pi)")

    def to_state(self, dim: int = 4) -> StateVector:
        """(cos(delta/2)|up> + e^{i gamma} sin(delta/2)|down>) in dot 0."""
        amp = np.zeros(dim, dtype=complex)
        amp[basis_index(SPIN_UP, DOT0, dim)] = math.cos(self.delta / 2)
        amp[basis_index(SPIN_DOWN, DOT0, dim)] = cmath.exp(1j * self.gamma) * math.sin(self.delta / 2)
        return StateVector(amp)


@dataclass(frozen=True)
class GateParams:
    """Gate-imperfection angles: mode rotations theta1/theta2 of the two
    tunneling steps, conditional phase psi, spin-rotation angle phi.
    Angles are unrestricted; periodicity is the caller's concern."""

    theta1: float
    theta2: float
    psi: float
    phi: float

    @classmethod
    def ideal(cls) -> "GateParams":
        return cls(math.pi / 4, math.pi / 4, math.pi / 2, math.pi)
