"""Command-line front end: angle scans, single-point evaluation, critical angle.

Emits CSV or JSON tables with the fields (theta, f_plus, f_minus, entropy,
F, violated, slater_rank), suitable for regenerating the entropy and Bell
curves.  Output is deterministic byte for byte for a fixed invocation.

Exit status: 0 on success, 2 on usage or domain errors, 1 on runtime
failures such as an unwritable output file.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import asdict, dataclass
from typing import Optional

import numpy as np

from .amplitudes import AmplitudeProvider, constant_provider, coulomb_provider, normalize
from .bell import bell_F, critical_angle
from .entanglement import entropy_of_state
from .spin_states import ExchangeStatistics, outgoing_state, slater_decomposition, slater_rank

CSV_HEADER = "theta,f_plus,f_minus,entropy,F,violated,slater_rank"

DEFAULT_THETA_MIN = 0.01
DEFAULT_THETA_MAX = math.pi / 2.0
DEFAULT_STEPS = 200

_STATISTICS = {
    "fermion": ExchangeStatistics.FERMION,
    "boson": ExchangeStatistics.BOSON,
}


@dataclass(frozen=True)
class ScanRecord:
    """One evaluated angle of a scan table."""

    theta: float
    f_plus: float
    f_minus: float
    entropy: float
    F: float
    violated: bool
    slater_rank: int


@dataclass(frozen=True)
class ScanConfig:
    """Scan parameters; angles in radians, range restricted to (0, pi/2]."""

    theta_min: float
    theta_max: float
    steps: int
    interaction: str = "coulomb"
    statistics: str = "fermion"
    format: str = "csv"
    output: Optional[str] = None

    def __post_init__(self) -> None:
        if not 0.0 < self.theta_min < self.theta_max <= math.pi / 2.0:
            raise ValueError("scan range must satisfy 0 < theta-min < theta-max <= pi/2")
        if self.steps < 2:
            raise ValueError(f"a scan needs at least 2 steps, got {self.steps!r}")


def parse_interaction(text: str) -> AmplitudeProvider:
    """Resolve an interaction name: 'coulomb' or 'constant:<f_plus>'."""
    if text == "coulomb":
        return coulomb_provider()
    if text.startswith("constant:"):
        _, _, raw = text.partition(":")
        try:
            f_plus = float(raw)
        except ValueError:
            raise ValueError(f"bad interaction {text!r}: expected constant:<f_plus>") from None
        return constant_provider(f_plus)
    raise ValueError(f"unknown interaction {text!r} (choose coulomb or constant:<f_plus>)")


def evaluate_angle(theta: float, provider: AmplitudeProvider, statistics: ExchangeStatistics) -> ScanRecord:
    """Compute one output record at the given angle."""
    amps = normalize(provider(theta))
    state = outgoing_state(amps, statistics)
    f_value = bell_F(amps)
    return ScanRecord(
        theta=theta,
        f_plus=amps.f_plus.real,
        f_minus=amps.f_minus.real,
        entropy=entropy_of_state(state),
        F=f_value,
        violated=f_value < 1.0,
        slater_rank=slater_rank(slater_decomposition(amps)),
    )


def scan_records(config: ScanConfig) -> list[ScanRecord]:
    """Evaluate the scan grid in ascending theta order."""
    provider = parse_interaction(config.interaction)
    statistics = _STATISTICS[config.statistics]
    thetas = np.linspace(config.theta_min, config.theta_max, config.steps)
    return [evaluate_angle(float(t), provider, statistics) for t in thetas]


def _csv_row(r: ScanRecord) -> str:
    return ",".join(
        (
            f"{r.theta:.12f}",
            f"{r.f_plus:.12f}",
            f"{r.f_minus:.12f}",
            f"{r.entropy:.12f}",
            f"{r.F:.12f}",
            "true" if r.violated else "false",
            str(r.slater_rank),
        )
    )


def render_csv(records: list[ScanRecord]) -> str:
    lines = [CSV_HEADER]
    lines.extend(_csv_row(r) for r in records)
    return "\n".join(lines) + "\n"


def render_json(records: list[ScanRecord]) -> str:
    return json.dumps([asdict(r) for r in records], indent=2) + "\n"


def render(records: list[ScanRecord], fmt: str) -> str:
    return render_csv(records) if fmt == "csv" else render_json(records)


def _emit(text: str, output: Optional[str]) -> None:
    if output is None or output == "-":
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _fail(message: str, code: int) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def cmd_scan(args: argparse.Namespace) -> int:
    try:
        config = ScanConfig(
            theta_min=args.theta_min,
            theta_max=args.theta_max,
            steps=args.steps,
            interaction=args.interaction,
            statistics=args.statistics,
            format=args.format,
            output=args.output,
        )
        records = scan_records(config)
    except ValueError as exc:
        return _fail(str(exc), 2)
    try:
        _emit(render(records, config.format), config.output)
    except OSError as exc:
        return _fail(str(exc), 1)
    return 0


def cmd_point(args: argparse.Namespace) -> int:
    try:
        if not 0.0 < args.theta <= math.pi / 2.0:
            raise ValueError(f"theta must lie in (0, pi/2], got {args.theta!r}")
        provider = parse_interaction(args.interaction)
        record = evaluate_angle(args.theta, provider, _STATISTICS[args.statistics])
    except ValueError as exc:
        return _fail(str(exc), 2)
    try:
        _emit(render([record], args.format), args.output)
    except OSError as exc:
        return _fail(str(exc), 1)
    return 0


def cmd_critical(args: argparse.Namespace) -> int:
    try:
        provider = parse_interaction(args.interaction)
        root = critical_angle(provider, tol=args.tol)
    except ValueError as exc:
        return _fail(str(exc), 2)
    if root is None:
        print("no crossing")
    else:
        print(f"theta_c = {root:.12f} rad ({math.degrees(root):.12f} deg)")
    return 0


def _add_common_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--interaction", default="coulomb", help="coulomb or constant:<f_plus>")
    parser.add_argument("--statistics", choices=sorted(_STATISTICS), default="fermion")
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    parser.add_argument("--output", default=None, help="output file (default: stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinscatter",
        description="Spin entanglement and Bell-inequality tables for identical-particle scattering.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    scan = sub.add_parser("scan", help="tabulate an angle scan over (0, pi/2]")
    scan.add_argument("--theta-min", type=float, default=DEFAULT_THETA_MIN)
    scan.add_argument("--theta-max", type=float, default=DEFAULT_THETA_MAX)
    scan.add_argument("--steps", type=int, default=DEFAULT_STEPS)
    _add_common_options(scan)

    point = sub.add_parser("point", help="evaluate a single angle")
    point.add_argument("theta", type=float, help="scattering angle in radians, in (0, pi/2]")
    _add_common_options(point)

    crit = sub.add_parser("critical", help="locate the Bell crossing angle")
    crit.add_argument("--interaction", default="coulomb", help="coulomb or constant:<f_plus>")
    crit.add_argument("--tol", type=float, default=1e-10)

    return parser


_HANDLERS = {
    "scan": cmd_scan,
    "point": cmd_point,
    "critical": cmd_critical,
}


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return _HANDLERS[args.command](args)


def entry_point() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry_point()
