"""Single-shot readout sampling: Born-rule draws on dot-1 occupancy through an
imperfect charge detector."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import DOT1, GateParams, SpinInput, ValidationError, apply
from .protocol import dot_occupancy, noisy_sequence

# Substream granularity: batch i of a run always covers shots
# [i*BATCH_SHOTS, (i+1)*BATCH_SHOTS) from its own generator, so partial sums
# agree between serial and parallel execution.
BATCH_SHOTS = 8192


@dataclass(frozen=True)
class DetectorModel:
    """Binary detector channel: a present charge is reported with probability
    `efficiency`, an absent one with probability `false_positive`."""

    efficiency: float = 1.0
    false_positive: float = 0.0

    def __post_init__(self):
        for name, p in (("efficiency", self.efficiency), ("false_positive", self.false_positive)):
            if not 0.0 <= p <= 1.0:
                raise ValidationError(name, f"{name} = {p!r} outside [0, 1]")

    @classmethod
    def ideal(cls) -> "DetectorModel":
        return cls(1.0, 0.0)


@dataclass(frozen=True)
class ShotRecord:
    shots: int
    detected_dot1: int
    seed: int
    estimated_p_up: float

    def __post_init__(self):
        if not 0 <= self.detected_dot1 <= self.shots:
            raise ValidationError(
                "detected_dot1", f"count {self.detected_dot1} outside [0, {self.shots}]"
            )
        if not 0.0 <= self.estimated_p_up <= 1.0:
            raise ValidationError("estimated_p_up", f"{self.estimated_p_up!r} outside [0, 1]")


def effective_outcome_probability(p_occupied: float, detector: DetectorModel) -> float:
    """Probability of a reported detection given the occupancy probability."""
    if not 0.0 <= p_occupied <= 1.0:
        raise ValidationError("p_occupied", f"{p_occupied!r} outside [0, 1]")
    return p_occupied * detector.efficiency + (1.0 - p_occupied) * detector.false_positive


def _batch_rng(seed: int, batch_index: int) -> np.random.Generator:
    # PCG64 substream keyed by (seed, batch index); stable across numpy versions.
    return np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(batch_index,)))


def sample_readout(
    spin_in: SpinInput,
    params: GateParams,
    shots: int,
    seed: int,
    detector: DetectorModel | None = None,
) -> ShotRecord:
    """Simulate `shots` single-shot readouts of the monitored dot 1.

    Each shot draws the charge presence from the Born-rule dot-1 occupancy of
    the sequence output, then pushes it through the detector channel.  The
    result is a pure function of (inputs, seed).
    """
    if shots < 1:
        raise ValidationError("shots", f"need at least one shot, got {shots}")
    if seed < 0:
        raise ValidationError("seed", f"seed must be non-negative, got {seed}")
    det = detector if detector is not None else DetectorModel.ideal()

    out = apply(noisy_sequence(params), spin_in.to_state(4))
    p_occupied = dot_occupancy(out, DOT1)

    detected = 0
    done = 0
    batch_index = 0
    while done < shots:
        count = min(BATCH_SHOTS, shots - done)
        u = _batch_rng(seed, batch_index).random((2, count))
        occupied = u[0] < p_occupied
        reported = np.where(occupied, u[1] < det.efficiency, u[1] < det.false_positive)
        detected += int(np.count_nonzero(reported))
        done += count
        batch_index += 1
    return ShotRecord(shots=shots, detected_dot1=detected, seed=seed, estimated_p_up=detected / shots)
