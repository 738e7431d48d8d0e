"""Sweeps over the phase and the iteration count, peak finding, and the
tables behind the five published plots (all at n=100, uniform start)."""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from typing import TextIO

import numpy as np

from .core import TWO_PI, ProblemConfig, ReducedState, uniform_initial_state
from .errors import DegenerateSpectrumError
from .full import DEFAULT_MAX_N, full_iterate
from .reduced import Trajectory, iterate
from .spectral import closed_form_states

ENGINES = ("spectral", "reduced", "full")

DEFAULT_GRID_POINTS = 2000

# values closer than this are treated as a tie when looking for maxima
PEAK_TIE_TOL = 1e-12


def evolve(
    config: ProblemConfig,
    initial: ReducedState,
    j_max: int,
    engine: str = "spectral",
    fallback: bool = True,
    max_n: int = DEFAULT_MAX_N,
) -> Trajectory:
    """Trajectory ``j = 0 .. j_max`` computed by the chosen engine.

    The spectral engine drops back to direct iteration on a degenerate
    spectrum unless ``fallback`` is false.
    """
    if engine == "reduced":
        return iterate(config, initial, j_max)
    if engine == "full":
        return full_iterate(config, initial, j_max, max_n=max_n)
    if engine != "spectral":
        raise ValueError(f"unknown engine {engine!r}; expected one of {ENGINES}")
    try:
        b, a = closed_form_states(config, initial, np.arange(j_max + 1))
    except DegenerateSpectrumError:
        if not fallback:
            raise
        return iterate(config, initial, j_max)
    return Trajectory(config, b, a)


@dataclass(frozen=True, eq=False)
class ThetaSweep:
    n: int
    report_index: int
    grid: np.ndarray
    values: np.ndarray


@dataclass(frozen=True)
class PeakReport:
    count: int
    locations: tuple[float, ...]
    window: tuple[float, float]


@dataclass(frozen=True, eq=False)
class TrajectoryStats:
    max_norm: float
    argmax_j: int
    min_norm_excluding_start: float
    argmin_j: int
    values: np.ndarray


def theta_sweep(
    n: int,
    report_index: int,
    grid_points: int = DEFAULT_GRID_POINTS,
    window: tuple[float, float] = (0.0, TWO_PI),
    engine: str = "spectral",
    initial: ReducedState | None = None,
) -> ThetaSweep:
    """``|B|`` after ``report_index`` iterations on a uniform theta grid.

    Both window endpoints are grid points.
    """
    if grid_points < 3:
        raise ValueError(f"grid_points must be >= 3, got {grid_points}")
    lo, hi = window
    if not (0.0 <= lo < hi <= TWO_PI):
        raise ValueError(f"window {window!r} must satisfy 0 <= lo < hi <= 2*pi")
    if report_index < 0:
        raise ValueError(f"report_index must be >= 0, got {report_index}")
    initial = uniform_initial_state(n) if initial is None else initial
    grid = np.linspace(lo, hi, grid_points)
    values = np.empty(grid_points)
    for i, theta in enumerate(grid):
        traj = _single(ProblemConfig(n, float(theta)), initial, report_index, engine)
        values[i] = abs(traj)
    return ThetaSweep(n, report_index, grid, values)


def _single(config: ProblemConfig, initial: ReducedState, j: int, engine: str) -> complex:
    if engine == "spectral":
        try:
            b, _ = closed_form_states(config, initial, [j])
            return complex(b[0])
        except DegenerateSpectrumError:
            engine = "reduced"
    return complex(evolve(config, initial, j, engine).b[-1])


def find_peaks(values, tie_tol: float = PEAK_TIE_TOL) -> list[tuple[int, int]]:
    """Interior strict local maxima as ``(first, last)`` index runs.

    A run of values equal within ``tie_tol`` that rises on the left and
    falls on the right is one peak.
    """
    v = np.asarray(values, dtype=float)
    peaks = []
    i = 1
    while i < v.size - 1:
        if v[i] - v[i - 1] > tie_tol:
            k = i
            while k + 1 < v.size and abs(v[k + 1] - v[i]) <= tie_tol:
                k += 1
            if k + 1 < v.size and v[i] - v[k + 1] > tie_tol:
                peaks.append((i, k))
            i = k + 1
        else:
            i += 1
    return peaks


def count_peaks(sweep: ThetaSweep, window: tuple[float, float] | None = None) -> PeakReport:
    """Count local maxima of a sweep lying strictly inside ``window``.

    A tied run is located at its midpoint. On a symmetric grid the maximum
    at ``theta = pi`` shows up as such a run, which puts it on the edge of
    ``(0, pi)`` rather than inside.
    """
    grid = sweep.grid
    if window is None:
        window = (float(grid[0]), float(grid[-1]))
    lo, hi = window
    if lo >= hi or lo < grid[0] or hi > grid[-1]:
        raise ValueError(f"window {window!r} outside sweep range [{grid[0]}, {grid[-1]}]")
    locations = []
    for first, last in find_peaks(sweep.values):
        loc = 0.5 * (grid[first] + grid[last])
        if lo < loc < hi:
            locations.append(float(loc))
    return PeakReport(len(locations), tuple(locations), (float(lo), float(hi)))


def trajectory_stats(
    config: ProblemConfig,
    j_max: int,
    initial: ReducedState | None = None,
    engine: str = "spectral",
) -> TrajectoryStats:
    if j_max < 1:
        raise ValueError(f"j_max must be >= 1, got {j_max}")
    initial = uniform_initial_state(config.n) if initial is None else initial
    values = evolve(config, initial, j_max, engine).abs_b
    argmax = int(np.argmax(values))
    argmin = 1 + int(np.argmin(values[1:]))
    return TrajectoryStats(
        max_norm=float(values[argmax]),
        argmax_j=argmax,
        min_norm_excluding_start=float(values[argmin]),
        argmin_j=argmin,
        values=values,
    )


@dataclass(frozen=True)
class Dataset:
    columns: tuple[str, ...]
    rows: list[tuple]

    def write_csv(self, stream: TextIO) -> None:
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(self.columns)
        for row in self.rows:
            writer.writerow([format_cell(x) for x in row])


def format_cell(x) -> str:
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return format(float(x), ".17g")


FIGURE_N = 100
FIGURE_J_MAX = 100

# id -> (description, report index or None, theta or None)
FIGURES = {
    1: ("|B_4| versus theta", 4, None),
    2: ("|B_7| versus theta", 7, None),
    3: ("|B_(j+1)| versus j, theta = pi/4", None, math.pi / 4),
    4: ("|B_(j+1)| versus j, theta = pi/3", None, math.pi / 3),
    5: ("|B_(j+1)| versus j, theta = pi/1.1", None, math.pi / 1.1),
}


def figure_dataset(
    figure_id: int,
    grid_points: int = DEFAULT_GRID_POINTS,
    engine: str = "spectral",
) -> Dataset:
    """Plot-ready table for one of the five figures.

    Figures 1-2 tabulate ``|B_k|`` against theta over ``[0, 2*pi]``.
    Figures 3-5 tabulate ``|B_(j+1)|`` for ``j = 0 .. 100``; the
    ``applications`` column holds ``j + 1``.
    """
    if figure_id not in FIGURES:
        raise ValueError(f"unknown figure id {figure_id!r}; expected one of {sorted(FIGURES)}")
    _, report, theta = FIGURES[figure_id]
    if report is not None:
        sweep = theta_sweep(FIGURE_N, report, grid_points, engine=engine)
        rows = [(float(t), float(v)) for t, v in zip(sweep.grid, sweep.values)]
        return Dataset(("theta", f"abs_B{report}"), rows)
    config = ProblemConfig(FIGURE_N, theta)
    traj = evolve(config, uniform_initial_state(FIGURE_N), FIGURE_J_MAX + 1, engine)
    values = traj.abs_b
    rows = [(j, j + 1, float(values[j + 1])) for j in range(FIGURE_J_MAX + 1)]
    return Dataset(("j", "applications", "abs_B"), rows)
