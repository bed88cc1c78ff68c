"""Command-line front end: phase scans, Monte Carlo runs, verification.

Subcommands:
  scan     analytic interference scan with uncertainty columns (CSV)
  sample   sequential measurement Monte Carlo (CSV), deterministic per seed
  verify   run the named invariant suite, one PASS/FAIL line per check

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass

import numpy as np

from .interferometer import interference_scan
from .measurement import (
    MeasurementOrder,
    sequential_experiment_partitioned,
    uniformity_test,
)
from .qalgebra import InvariantViolation
from .rng import RandomStream
from .uncertainty import duality_report
from .verify import format_report, run_verification

SCAN_COLUMNS = (
    "phi",
    "w_expectation",
    "p_expectation",
    "delta_p",
    "delta_w",
    "robertson_bound",
    "gap",
)
SAMPLE_COLUMNS = (
    "phi",
    "phi0",
    "order",
    "shots",
    "first_mean",
    "first_variance",
    "second_mean",
    "second_variance",
    "n_plus",
    "n_minus",
    "chi2",
    "chi2_pass",
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3


@dataclass(frozen=True)
class RunConfig:
    """Validated run parameters shared by the scan and sample commands."""

    phi0: float = 0.0
    phi_start: float = -math.pi
    phi_end: float = math.pi
    steps: int = 181
    shots: int = 100_000
    seed: int = 1
    output_path: str | None = None
    order: str = "both"
    workers: int = 1

    def __post_init__(self) -> None:
        if self.steps < 1:
            raise InvariantViolation(f"steps must be >= 1, got {self.steps}")
        if self.phi_start > self.phi_end:
            raise InvariantViolation(
                f"phi range is inverted: {self.phi_start} > {self.phi_end}"
            )
        if not (math.isfinite(self.phi0) and math.isfinite(self.phi_start) and math.isfinite(self.phi_end)):
            raise InvariantViolation("angles must be finite")
        if self.shots < 1:
            raise InvariantViolation(f"shots must be >= 1, got {self.shots}")
        if not 0 <= self.seed <= 0xFFFFFFFFFFFFFFFF:
            raise InvariantViolation(f"seed must fit in 64 unsigned bits, got {self.seed}")
        if self.order not in ("pw", "wp", "both"):
            raise InvariantViolation(f"order must be pw, wp, or both, got {self.order!r}")
        if self.workers < 1:
            raise InvariantViolation(f"workers must be >= 1, got {self.workers}")

    def grid(self) -> list[float]:
        return [float(x) for x in np.linspace(self.phi_start, self.phi_end, self.steps)]


def _fmt(value) -> str:
    if isinstance(value, str):
        return value
    if isinstance(value, (bool, np.bool_)):
        return "1" if value else "0"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return format(float(value), ".17g")


def _csv(header: tuple[str, ...], rows: list[tuple]) -> str:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(_fmt(v) for v in row))
    return "\n".join(lines) + "\n"


def cmd_scan(config: RunConfig) -> str:
    """Analytic scan: interference expectations plus uncertainty columns."""
    grid = config.grid()
    scan = interference_scan(config.phi0, grid)
    rows = []
    for point in scan.points:
        report = duality_report(point.phi, config.phi0)
        rows.append(
            (
                point.phi,
                point.w_expect,
                point.p_expect,
                report.delta_p,
                report.delta_w,
                report.bound,
                report.gap,
            )
        )
    return _csv(SCAN_COLUMNS, rows)


def cmd_sample(config: RunConfig) -> str:
    """Monte Carlo sequential measurements over the grid, both orders.

    Each row gets its own child stream derived from the seed and the row
    index, so row values do not depend on how many rows precede them.
    """
    if config.order == "both":
        orders = [MeasurementOrder.P_THEN_W, MeasurementOrder.W_THEN_P]
    else:
        orders = [MeasurementOrder(config.order)]
    base = RandomStream(config.seed)
    rows = []
    row_index = 0
    for phi in config.grid():
        for order in orders:
            stream = base.derive(row_index)
            row_index += 1
            stats = sequential_experiment_partitioned(
                order, phi, config.phi0, config.shots, stream, config.workers
            )
            chi2, ok = uniformity_test(stats.second_counts)
            rows.append(
                (
                    phi,
                    config.phi0,
                    order.value,
                    stats.shots,
                    stats.first_mean,
                    stats.first_variance,
                    stats.second_mean,
                    stats.second_variance,
                    stats.second_counts[0],
                    stats.second_counts[1],
                    chi2,
                    ok,
                )
            )
    return _csv(SAMPLE_COLUMNS, rows)


def cmd_verify(shots: int | None = None, seed: int = 1) -> tuple[int, str]:
    """Run the invariant suite; exit code 0 only if every check passes."""
    report = run_verification(shots=shots, seed=seed)
    code = EXIT_OK if report.all_passed else EXIT_VERIFY_FAILED
    return code, format_report(report) + "\n"


_GNUPLOT_SCAN = """set datafile separator ','
set key autotitle columnhead
set xlabel 'phi (rad)'
plot '{path}' using 1:2 with lines, '' using 1:6 with lines
"""

_GNUPLOT_SAMPLE = """set datafile separator ','
set key autotitle columnhead
set xlabel 'phi (rad)'
plot '{path}' using 1:6 with points
"""


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def _angle(value: float, degrees: bool) -> float:
    return math.radians(value) if degrees else value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twopath",
        description="Ideal two-path interferometer: scans, sampling, verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, sampling: bool) -> None:
        p.add_argument("--phi0", type=float, default=0.0, help="setup offset (rad)")
        p.add_argument(
            "--from", dest="phi_from", type=float, default=None,
            help="scan start (default -pi, or -180 with --degrees)",
        )
        p.add_argument(
            "--to", dest="phi_to", type=float, default=None,
            help="scan end (default pi, or 180 with --degrees)",
        )
        p.add_argument("--steps", type=int, default=181 if not sampling else 9,
                       help="number of grid points")
        p.add_argument("--out", default=None, help="output path (default stdout)")
        p.add_argument("--degrees", action="store_true",
                       help="interpret input angles as degrees")
        p.add_argument("--gnuplot", action="store_true",
                       help="also write a gnuplot script next to --out")

    scan_p = sub.add_parser("scan", help="analytic interference scan (CSV)")
    add_common(scan_p, sampling=False)

    sample_p = sub.add_parser("sample", help="sequential-measurement Monte Carlo (CSV)")
    add_common(sample_p, sampling=True)
    sample_p.add_argument("--shots", type=int, default=100_000, help="shots per row")
    sample_p.add_argument("--seed", type=int, default=1, help="base stream seed")
    sample_p.add_argument("--order", choices=("pw", "wp", "both"), default="both",
                          help="measurement order(s) to run")
    sample_p.add_argument("--workers", type=int, default=1,
                          help="sub-streams to partition each row across")

    verify_p = sub.add_parser("verify", help="run the named invariant suite")
    verify_p.add_argument("--shots", type=int, default=None,
                          help="also run Monte Carlo checks at this shot count")
    verify_p.add_argument("--seed", type=int, default=1, help="stream seed")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse signals usage errors and --help
        return int(exc.code or 0)

    try:
        if args.command == "verify":
            code, text = cmd_verify(shots=args.shots, seed=args.seed)
            sys.stdout.write(text)
            return code

        half_turn = 180.0 if args.degrees else math.pi
        phi_from = args.phi_from if args.phi_from is not None else -half_turn
        phi_to = args.phi_to if args.phi_to is not None else half_turn
        config = RunConfig(
            phi0=_angle(args.phi0, args.degrees),
            phi_start=_angle(phi_from, args.degrees),
            phi_end=_angle(phi_to, args.degrees),
            steps=args.steps,
            shots=getattr(args, "shots", 100_000),
            seed=getattr(args, "seed", 1),
            output_path=args.out,
            order=getattr(args, "order", "both"),
            workers=getattr(args, "workers", 1),
        )
        if args.gnuplot and config.output_path is None:
            parser.error("--gnuplot requires --out")
    except InvariantViolation as exc:
        sys.stderr.write(f"twopath: {exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        if args.command == "scan":
            text = cmd_scan(config)
            template = _GNUPLOT_SCAN
        else:
            text = cmd_sample(config)
            template = _GNUPLOT_SAMPLE
        _emit(text, config.output_path)
        if args.gnuplot:
            script = template.format(path=config.output_path)
            with open(config.output_path + ".gp", "w", encoding="utf-8", newline="") as fh:
                fh.write(script)
    except InvariantViolation as exc:
        sys.stderr.write(f"twopath: {exc}\n")
        return EXIT_USAGE
    except OSError as exc:
        sys.stderr.write(f"twopath: cannot write output: {exc}\n")
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
