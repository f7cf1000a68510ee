"""Command-line front-end: run readout sequences, emit error grids, sample
single-shot statistics, and evaluate device parameters.

Output is deterministic for a fixed flag set (including --seed).  Grids
default to CSV, everything else to JSON; reports go to stdout unless
--output is given.  Validation happens before any computation or file I/O,
so a failed run never leaves a partial output file.
"""

from __future__ import annotations

import argparse
import json
import sys

from .core import (
    DOT0,
    DOT0P,
    DOT1,
    GateParams,
    SpinInput,
    ValidationError,
    apply,
    modes_for_dim,
)
from .device import (
    DEFAULT_EFFECTIVE_MASS,
    PulseSpec,
    RashbaSpec,
    pulse_angle,
    pulse_for_angle,
    rashba_angle,
    rashba_length,
)
from .error_analysis import (
    AXIS_NAMES,
    DEFAULT_RESOLUTION,
    AxisSpec,
    ErrorGrid,
    panel_axes,
    sweep_grid,
)
from .montecarlo import DetectorModel, effective_outcome_probability, sample_readout
from .protocol import (
    dot_occupancy,
    noisy_sequence,
    occupancies,
    run_readout,
    three_dot_sequence,
)

_ANGLE_FLAGS = ("theta1", "theta2", "psi", "phi")


def _fmt(value: float) -> str:
    return format(float(value), ".12g")


def _complex_json(z: complex) -> dict[str, float]:
    return {"re": z.real, "im": z.imag}


def grid_to_csv(grid: ErrorGrid) -> str:
    """Serialize a grid as `axis1,axis2,Ebar` rows, axis1 slowest, 12
    significant digits, '\\n' line endings."""
    lines = ["axis1,axis2,Ebar"]
    v1, v2 = grid.axis1.values(), grid.axis2.values()
    for i in range(grid.axis1.num):
        for j in range(grid.axis2.num):
            lines.append(f"{_fmt(v1[i])},{_fmt(v2[j])},{_fmt(grid.values[i, j])}")
    return "\n".join(lines) + "\n"


def grid_to_json(grid: ErrorGrid) -> str:
    def axis_payload(axis: AxisSpec) -> dict:
        return {"name": axis.name, "start": axis.start, "stop": axis.stop, "num": axis.num}

    payload = {
        "axis1": axis_payload(grid.axis1),
        "axis2": axis_payload(grid.axis2),
        "fixed": _params_json(grid.fixed),
        "values": grid.values.tolist(),
    }
    return json.dumps(payload, indent=2) + "\n"


def _params_json(params: GateParams) -> dict[str, float]:
    return {name: getattr(params, name) for name in _ANGLE_FLAGS}


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _parse_range(text: str, flag: str) -> tuple[float, float]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValidationError(flag, f"expected LO,HI, got {text!r}")
    try:
        return float(parts[0]), float(parts[1])
    except ValueError:
        raise ValidationError(flag, f"non-numeric bound in {text!r}") from None


def _parse_segments(text: str) -> tuple[tuple[float, float], ...]:
    segments = []
    for part in text.split(","):
        halves = part.split(":")
        if len(halves) != 2:
            raise ValidationError("segments", f"expected AMP_UEV:DURATION_PS, got {part!r}")
        try:
            segments.append((float(halves[0]), float(halves[1])))
        except ValueError:
            raise ValidationError("segments", f"non-numeric segment in {part!r}") from None
    return tuple(segments)


def _explicit_angles(args: argparse.Namespace) -> dict[str, float]:
    return {
        name: getattr(args, name)
        for name in _ANGLE_FLAGS
        if getattr(args, name) is not None
    }


def _params_from_args(args: argparse.Namespace) -> GateParams:
    explicit = _explicit_angles(args)
    if args.ideal and explicit:
        raise ValidationError("ideal", "--ideal conflicts with explicit gate angle flags")
    ideal = GateParams.ideal()
    return GateParams(
        theta1=explicit.get("theta1", ideal.theta1),
        theta2=explicit.get("theta2", ideal.theta2),
        psi=explicit.get("psi", ideal.psi),
        phi=explicit.get("phi", ideal.phi),
    )


def _cmd_protocol(args: argparse.Namespace) -> int:
    spin_in = SpinInput(args.delta, args.gamma)
    if args.variant == "three-dot":
        explicit = _explicit_angles(args)
        if explicit:
            raise ValidationError(
                next(iter(explicit)), "the three-dot variant runs fixed ideal gates only"
            )
        state = apply(three_dot_sequence(), spin_in.to_state(6))
        occ = occupancies(state)
        report = {
            "variant": "three-dot",
            "input": {"delta": args.delta, "gamma": args.gamma},
            "amplitudes": {
                f"{spin};{mode}": _complex_json(state.amplitude(spin, mode))
                for spin in ("up", "down")
                for mode in modes_for_dim(6)
            },
            "occupancy": occ,
            "p_up": occ[DOT1],
            "p_down": occ[DOT0P],
            "unconverted": occ[DOT0],
        }
    else:
        params = _params_from_args(args)
        amps, probs = run_readout(spin_in, params)
        report = {
            "variant": "two-dot",
            "input": {"delta": args.delta, "gamma": args.gamma},
            "params": _params_json(params),
            "amplitudes": {
                "f1": _complex_json(amps.f1),
                "f2": _complex_json(amps.f2),
                "g1": _complex_json(amps.g1),
                "g2": _complex_json(amps.g2),
            },
            "occupancy": {DOT0: probs.p_down, DOT1: probs.p_up},
            "p_up": probs.p_up,
            "p_down": probs.p_down,
        }
    _emit(json.dumps(report, indent=2) + "\n", args.output)
    return 0


def _cmd_errmap(args: argparse.Namespace) -> int:
    range1 = _parse_range(args.range1, "range1") if args.range1 else None
    range2 = _parse_range(args.range2, "range2") if args.range2 else None
    if args.panel == "custom":
        if not args.axis1 or not args.axis2:
            raise ValidationError("axis1", "panel custom needs --axis1 and --axis2")
        if range1 is None or range2 is None:
            raise ValidationError("range1", "panel custom needs --range1 and --range2")
        axis1 = AxisSpec(args.axis1, range1[0], range1[1], args.resolution)
        axis2 = AxisSpec(args.axis2, range2[0], range2[1], args.resolution)
        fixed = _params_from_args(args)
    else:
        if args.axis1 or args.axis2:
            raise ValidationError("axis1", "--axis1/--axis2 apply to --panel custom only")
        axis1, axis2, fixed = panel_axes(args.panel, args.resolution, range1, range2)
    grid = sweep_grid(axis1, axis2, fixed)
    text = grid_to_csv(grid) if args.format == "csv" else grid_to_json(grid)
    _emit(text, args.output)
    return 0


def _cmd_montecarlo(args: argparse.Namespace) -> int:
    spin_in = SpinInput(args.delta, args.gamma)
    params = _params_from_args(args)
    detector = DetectorModel(args.efficiency, args.false_positive)
    record = sample_readout(spin_in, params, args.shots, args.seed, detector)
    out = apply(noisy_sequence(params), spin_in.to_state(4))
    analytic = effective_outcome_probability(dot_occupancy(out, DOT1), detector)
    payload = {
        "shots": record.shots,
        "detected_dot1": record.detected_dot1,
        "seed": record.seed,
        "estimated_p_up": record.estimated_p_up,
        "analytic_p_up": analytic,
    }
    _emit(json.dumps(payload, indent=2) + "\n", args.output)
    return 0


def _cmd_device(args: argparse.Namespace) -> int:
    if args.calc == "pulse-angle":
        text = f"{pulse_angle(PulseSpec(_parse_segments(args.segments)))!r} rad\n"
    elif args.calc == "pulse-for-angle":
        text = f"{pulse_for_angle(args.angle, args.duration)!r} ueV\n"
    elif args.calc == "rashba-length":
        spec = RashbaSpec(args.alpha, args.mass, args.angle)
        text = f"{rashba_length(spec)!r} nm\n"
    else:  # rashba-angle
        text = f"{rashba_angle(args.alpha, args.mass, args.length)!r} rad\n"
    _emit(text, args.output)
    return 0


def _add_gate_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--ideal", action="store_true", help="use the ideal gate set (pi/4, pi/4, pi/2, pi)"
    )
    parser.add_argument("--theta1", type=float, default=None, help="first tunneling angle, radians")
    parser.add_argument("--theta2", type=float, default=None, help="second tunneling angle, radians")
    parser.add_argument("--psi", type=float, default=None, help="conditional phase, radians")
    parser.add_argument("--phi", type=float, default=None, help="spin-rotation angle, radians")


def _add_output_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--output", default=None, help="write here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinreadout",
        description="Simulate single-spin readout by spin-to-charge conversion.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    proto = sub.add_parser("protocol", help="run a readout sequence, report the outcome")
    proto.add_argument("--variant", choices=("two-dot", "three-dot"), default="two-dot")
    proto.add_argument("--delta", type=float, required=True, help="input polar angle in [0, pi]")
    proto.add_argument("--gamma", type=float, default=0.0, help="input relative phase in [0, 2pi)")
    _add_gate_flags(proto)
    _add_output_flag(proto)

    errmap = sub.add_parser("errmap", help="sweep the averaged readout error over two gate angles")
    errmap.add_argument("--panel", choices=("a", "b", "c", "custom"), default="a")
    errmap.add_argument("--resolution", type=int, default=DEFAULT_RESOLUTION, help="points per axis")
    errmap.add_argument("--range1", default=None, help="axis 1 range as LO,HI (radians)")
    errmap.add_argument("--range2", default=None, help="axis 2 range as LO,HI (radians)")
    errmap.add_argument("--axis1", default=None, help=f"custom axis name, one of {', '.join(AXIS_NAMES)}")
    errmap.add_argument("--axis2", default=None, help="custom second axis name")
    _add_gate_flags(errmap)
    errmap.add_argument("--format", choices=("csv", "json"), default="csv")
    _add_output_flag(errmap)

    mc = sub.add_parser("montecarlo", help="sample single-shot detector statistics")
    mc.add_argument("--delta", type=float, required=True, help="input polar angle in [0, pi]")
    mc.add_argument("--gamma", type=float, default=0.0, help="input relative phase in [0, 2pi)")
    _add_gate_flags(mc)
    mc.add_argument("--shots", type=int, required=True, help="number of single-shot readouts")
    mc.add_argument("--seed", type=int, default=0, help="RNG seed")
    mc.add_argument("--efficiency", type=float, default=1.0, help="detector efficiency in [0, 1]")
    mc.add_argument(
        "--false-positive", type=float, default=0.0, help="detector false-positive rate in [0, 1]"
    )
    _add_output_flag(mc)

    device = sub.add_parser("device", help="pulse-area and spin-orbit length calculators")
    calc = device.add_subparsers(dest="calc", required=True)

    p_angle = calc.add_parser("pulse-angle", help="rotation angle of a coupling pulse")
    p_angle.add_argument(
        "--segments", required=True, help="comma-separated AMP_UEV:DURATION_PS segments"
    )
    _add_output_flag(p_angle)

    p_for = calc.add_parser("pulse-for-angle", help="constant amplitude for a target angle")
    p_for.add_argument("--angle", type=float, required=True, help="target rotation, radians")
    p_for.add_argument("--duration", type=float, required=True, help="pulse duration, ps")
    _add_output_flag(p_for)

    r_len = calc.add_parser("rashba-length", help="region length for a target spin rotation")
    r_len.add_argument("--alpha", type=float, required=True, help="spin-orbit coupling, eV*m")
    r_len.add_argument(
        "--mass", type=float, default=DEFAULT_EFFECTIVE_MASS, help="effective mass, electron masses"
    )
    r_len.add_argument("--angle", type=float, required=True, help="target spin rotation, radians")
    _add_output_flag(r_len)

    r_ang = calc.add_parser("rashba-angle", help="spin rotation accumulated over a region length")
    r_ang.add_argument("--alpha", type=float, required=True, help="spin-orbit coupling, eV*m")
    r_ang.add_argument(
        "--mass", type=float, default=DEFAULT_EFFECTIVE_MASS, help="effective mass, electron masses"
    )
    r_ang.add_argument("--length", type=float, required=True, help="region length, nm")
    _add_output_flag(r_ang)

    return parser


_DISPATCH = {
    "protocol": _cmd_protocol,
    "errmap": _cmd_errmap,
    "montecarlo": _cmd_montecarlo,
    "device": _cmd_device,
}


def _normalize_argv(argv: list[str]) -> list[str]:
    """Fold `--segments VALUE` into `--segments=VALUE`; a dash-led value like
    -1:2 would otherwise be read as a flag."""
    out = []
    tokens = iter(argv)
    for token in tokens:
        if token == "--segments":
            value = next(tokens, None)
            out.append(token if value is None else f"--segments={value}")
        else:
            out.append(token)
    return out


def main(argv: list[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    args = build_parser().parse_args(_normalize_argv(list(argv)))
    try:
        return _DISPATCH[args.command](args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
