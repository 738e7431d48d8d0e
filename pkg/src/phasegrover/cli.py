"""Command-line front end.

    phasegrover matrix      --n 100 --theta pi/3
    phasegrover trajectory  --n 100 --theta pi/4 --jmax 100
    phasegrover sweep       --report 7 --grid 2000 --window 0 pi
    phasegrover figure      --id 5
    phasegrover verify

Data goes to stdout (or ``--output``), diagnostics to stderr. Exit codes:
0 success, 1 usage error, 2 numerical failure.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import math
import re
import sys
from dataclasses import dataclass
from typing import Sequence, TextIO

from .core import TWO_PI, ProblemConfig, ReducedState, custom_initial_state, uniform_initial_state
from .errors import DegenerateSpectrumError, PhaseGroverError, SizeGuardError, SymmetryViolationError
from .full import DEFAULT_MAX_N
from .reduced import build_iteration_matrix
from .sweeps import DEFAULT_GRID_POINTS, ENGINES, FIGURES, evolve, figure_dataset, format_cell, theta_sweep

EXIT_OK, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2

_NUM = r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_PI_FORMS = [
    (re.compile(rf"^([+-]?)pi$"), lambda m: -math.pi if m[1] == "-" else math.pi),
    (re.compile(rf"^([+-]?)pi/({_NUM})$"), lambda m: (-1 if m[1] == "-" else 1) * math.pi / float(m[2])),
    (re.compile(rf"^([+-]?)pi\*({_NUM})$"), lambda m: (-1 if m[1] == "-" else 1) * math.pi * float(m[2])),
    (re.compile(rf"^({_NUM})\*pi$"), lambda m: float(m[1]) * math.pi),
]


def parse_angle(text: str) -> float:
    """Radians as a decimal or as ``pi``, ``pi/K``, ``pi*K``, ``K*pi``."""
    s = text.strip().lower().replace(" ", "")
    for pattern, value in _PI_FORMS:
        m = pattern.match(s)
        if m:
            out = value(m)
            break
    else:
        if not re.fullmatch(_NUM, s):
            raise argparse.ArgumentTypeError(f"not an angle: {text!r} (use radians or pi, pi/K, pi*K, K*pi)")
        out = float(s)
    if not math.isfinite(out):
        raise argparse.ArgumentTypeError(f"angle must be finite: {text!r}")
    return out


def _int_at_least(lo: int):
    def conv(text: str) -> int:
        try:
            v = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
        if v < lo:
            raise argparse.ArgumentTypeError(f"must be >= {lo}, got {v}")
        return v

    return conv


def _complex(text: str) -> complex:
    try:
        return complex(text.replace(" ", ""))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a complex number: {text!r}") from None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass(frozen=True)
class RunConfig:
    command: str
    n: int = 100
    theta: float = math.pi
    marked: int = 0
    initial: tuple[complex, complex] | None = None
    j_max: int = 20
    report_index: int = 4
    grid: int = DEFAULT_GRID_POINTS
    window: tuple[float, float] = (0.0, TWO_PI)
    figure_id: int | None = None
    output_path: str | None = None
    engine: str = "spectral"
    fallback: bool = True
    max_n: int = DEFAULT_MAX_N
    variant_recurrence: bool = False

    def problem(self) -> ProblemConfig:
        return ProblemConfig(self.n, self.theta, self.marked)

    def initial_state(self) -> ReducedState:
        if self.initial is None:
            return uniform_initial_state(self.n)
        return custom_initial_state(*self.initial)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="phasegrover", description="Search with an arbitrary marked-state phase.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    common = _Parser(add_help=False)
    common.add_argument("--n", type=_int_at_least(2), default=100, help="search-space size (default 100)")
    common.add_argument("--theta", type=parse_angle, default=math.pi, help="marked-state phase (default pi)")
    common.add_argument("--marked", type=_int_at_least(0), default=0, help="marked index (full engine only)")
    common.add_argument("--initial", nargs=2, type=_complex, metavar=("B0", "A0"),
                        help="initial amplitudes, e.g. 0.6 0.8j (default uniform)")
    common.add_argument("--engine", choices=ENGINES, default="spectral")
    common.add_argument("--no-fallback", dest="fallback", action="store_false",
                        help="fail instead of iterating when the spectrum is degenerate")
    common.add_argument("--max-n", type=_int_at_least(2), default=DEFAULT_MAX_N,
                        help="size limit for the full engine")
    common.add_argument("--output", "-o", dest="output_path", help="write CSV here instead of stdout")

    sub.add_parser("matrix", parents=[common], help="print the 2x2 iteration matrix")

    p = sub.add_parser("trajectory", parents=[common], help="amplitudes for j = 0 .. jmax")
    p.add_argument("--jmax", dest="j_max", type=_int_at_least(0), default=20)

    p = sub.add_parser("sweep", parents=[common], help="|B| after a fixed number of iterations versus theta")
    p.add_argument("--report", dest="report_index", type=_int_at_least(0), default=4,
                   help="number of iterations whose amplitude is reported")
    p.add_argument("--grid", type=_int_at_least(3), default=DEFAULT_GRID_POINTS)
    p.add_argument("--window", nargs=2, type=parse_angle, default=(0.0, TWO_PI), metavar=("LO", "HI"))

    p = sub.add_parser("figure", parents=[common], help="dataset behind one of the five figures")
    p.add_argument("--id", dest="figure_id", type=int, choices=sorted(FIGURES), required=True)
    p.add_argument("--grid", type=_int_at_least(3), default=DEFAULT_GRID_POINTS)

    p = sub.add_parser("verify", parents=[common], help="run the self-check suite")
    p.add_argument("--variant-recurrence", action="store_true", help=argparse.SUPPRESS)
    return parser


def parse_args(argv: Sequence[str] | None = None) -> RunConfig:
    parser = build_parser()
    ns = parser.parse_args(argv)
    fields = {k: v for k, v in vars(ns).items() if k in RunConfig.__dataclass_fields__}
    if "window" in fields:
        lo, hi = fields["window"]
        if not 0.0 <= lo < hi <= TWO_PI:
            parser.error(f"argument --window: need 0 <= LO < HI <= 2*pi, got {lo!r} {hi!r}")
        fields["window"] = (lo, hi)
    if fields.get("initial") is not None:
        fields["initial"] = tuple(fields["initial"])
    cfg = RunConfig(**fields)
    if cfg.marked >= cfg.n:
        parser.error(f"argument --marked: must be < n={cfg.n}, got {cfg.marked}")
    if cfg.initial is not None:
        try:
            cfg.initial_state()
        except PhaseGroverError as exc:
            parser.error(f"argument --initial: {exc}")
    return cfg


def _write_rows(out: TextIO, header: Sequence[str], rows) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_cell(x) for x in row])


def _emit(cfg: RunConfig, out: TextIO) -> int:
    if cfg.command == "matrix":
        m = build_iteration_matrix(cfg.problem()).entries
        _write_rows(out, ("row", "col", "re", "im"),
                    ((r, c, m[r, c].real, m[r, c].imag) for r in range(2) for c in range(2)))
    elif cfg.command == "trajectory":
        traj = evolve(cfg.problem(), cfg.initial_state(), cfg.j_max, cfg.engine, cfg.fallback, cfg.max_n)
        defect = traj.norm_defect
        _write_rows(
            out,
            ("j", "re_B", "im_B", "abs_B", "re_A", "im_A", "abs_A", "norm_defect"),
            ((j, b.real, b.imag, abs(b), a.real, a.imag, abs(a), defect[j])
             for j, (b, a) in enumerate(zip(traj.b, traj.a))),
        )
    elif cfg.command == "sweep":
        initial = cfg.initial_state()
        sweep = theta_sweep(cfg.n, cfg.report_index, cfg.grid, cfg.window, cfg.engine, initial)
        _write_rows(out, ("theta", "abs_B"), zip(sweep.grid, sweep.values))
    elif cfg.command == "figure":
        figure_dataset(cfg.figure_id, cfg.grid, cfg.engine).write_csv(out)
    elif cfg.command == "verify":
        return _verify(cfg, out)
    return EXIT_OK


def _verify(cfg: RunConfig, out: TextIO) -> int:
    from .verify import run_checks, variant_residual

    results = run_checks()
    width = max(len(name) for name, _, _ in results)
    for name, ok, detail in results:
        out.write(f"{'PASS' if ok else 'FAIL'}  {name:<{width}}  {detail}\n")
    failed = sum(not ok for _, ok, _ in results)
    out.write(f"{len(results) - failed}/{len(results)} checks passed\n")
    if cfg.variant_recurrence:
        out.write(f"INFO  sqrt(n-2) recurrence vs full simulation: max |dB| = {variant_residual():.6e}\n")
    return EXIT_OK if failed == 0 else EXIT_NUMERIC


def run(cfg: RunConfig, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    try:
        with contextlib.ExitStack() as stack:
            out = stdout
            if cfg.output_path:
                out = stack.enter_context(open(cfg.output_path, "w", newline=""))
            return _emit(cfg, out)
    except (DegenerateSpectrumError, SymmetryViolationError, SizeGuardError) as exc:
        print(f"phasegrover: numerical failure: {exc}", file=stderr)
        return EXIT_NUMERIC
    except PhaseGroverError as exc:
        print(f"phasegrover: error: {exc}", file=stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"phasegrover: cannot write output: {exc}", file=stderr)
        return EXIT_USAGE


def main(argv: Sequence[str] | None = None) -> int:
    try:
        cfg = parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
