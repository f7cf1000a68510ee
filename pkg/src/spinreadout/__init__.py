"""spinreadout: simulate and analyze single-spin readout via spin-to-charge
conversion in a double (or triple) quantum dot."""

from .core import (
    ATOL,
    DOT0,
    DOT0P,
    DOT1,
    SPIN_DOWN,
    SPIN_UP,
    GateParams,
    SpinInput,
    StateVector,
    Unitary,
    ValidationError,
    apply,
    basis_index,
    basis_state,
    compose,
    identity,
    modes_for_dim,
    rx_mode,
    rz_spin,
    u2_general,
    u2_ideal,
)
from .device import (
    PulseSpec,
    RashbaSpec,
    pulse_angle,
    pulse_for_angle,
    rashba_angle,
    rashba_length,
)
from .error_analysis import (
    AxisSpec,
    ErrorGrid,
    ExtremalError,
    avg_abs_error,
    error_coefficients,
    extremal_error,
    measurement_error,
    panel_axes,
    probabilities_closed_form,
    sweep_grid,
)
from .montecarlo import (
    DetectorModel,
    ShotRecord,
    effective_outcome_probability,
    sample_readout,
)
from .protocol import (
    ReadoutAmplitudes,
    ReadoutProbabilities,
    dot_occupancy,
    ideal_sequence,
    noisy_sequence,
    occupancies,
    run_readout,
    three_dot_coupler,
    three_dot_sequence,
)

__version__ = "0.1.0"

__all__ = [
    "ATOL",
    "DOT0",
    "DOT0P",
    "DOT1",
    "SPIN_DOWN",
    "SPIN_UP",
    "AxisSpec",
    "DetectorModel",
    "ErrorGrid",
    "ExtremalError",
    "GateParams",
    "PulseSpec",
    "RashbaSpec",
    "ReadoutAmplitudes",
    "ReadoutProbabilities",
    "ShotRecord",
    "SpinInput",
    "StateVector",
    "Unitary",
    "ValidationError",
    "apply",
    "avg_abs_error",
    "basis_index",
    "basis_state",
    "compose",
    "dot_occupancy",
    "effective_outcome_probability",
    "error_coefficients",
    "extremal_error",
    "identity",
    "ideal_sequence",
    "measurement_error",
    "modes_for_dim",
    "noisy_sequence",
    "occupancies",
    "panel_axes",
    "probabilities_closed_form",
    "pulse_angle",
    "pulse_for_angle",
    "rashba_angle",
    "rashba_length",
    "run_readout",
    "rx_mode",
    "rz_spin",
    "sample_readout",
    "sweep_grid",
    "three_dot_coupler",
    "three_dot_sequence",
    "u2_general",
    "u2_ideal",
]
