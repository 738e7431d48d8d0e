"""Self-check suite run by ``phasegrover verify``.

Each check returns ``(passed, detail)``. The suite recomputes everything
from scratch and cross-checks the three engines against each other.
"""

from __future__ import annotations

import math
from typing import Callable, Iterable

import numpy as np

from .core import ProblemConfig, ReducedState, uniform_initial_state
from .full import FullState, apply_diffusion, apply_phase_oracle, diffusion_matrix, full_iterate, lift
from .reduced import build_iteration_matrix, iterate, variant_recurrence_matrix
from .spectral import closed_form_states, diagonalize
from .sweeps import count_peaks, figure_dataset, theta_sweep, trajectory_stats

SIZES = (4, 100, 1024)
THETAS = (0.0, math.pi / 4, math.pi / 3, math.pi / 1.1, math.pi)

# regression constants, frozen from a full state-vector run at n=100
FIG5_MAX_ABS_B = 0.8145392356879056
PERIOD3_DRIFT = 0.003900453697604264
PERIOD3_BOUND = 0.004

Check = Callable[[], tuple[bool, str]]


def _random_states(rng: np.random.Generator, count: int) -> list[ReducedState]:
    z = rng.normal(size=(count, 4))
    out = []
    for row in z:
        v = row / np.linalg.norm(row)
        out.append(ReducedState(complex(v[0], v[1]), complex(v[2], v[3])))
    return out


def check_grover_reduction() -> tuple[bool, str]:
    worst = 0.0
    for n in SIZES:
        psi = ProblemConfig(n, math.pi).psi
        traj = iterate(ProblemConfig(n, math.pi), uniform_initial_state(n), 50)
        ref = np.abs(np.sin((np.arange(51) + 0.5) * psi))
        worst = max(worst, float(np.max(np.abs(traj.abs_b - ref))))
    return worst < 1e-10, f"max dev {worst:.2e} (tol 1e-10)"


def check_engines() -> tuple[bool, str]:
    worst_full = worst_spec = 0.0
    for n in SIZES:
        for theta in THETAS:
            cfg = ProblemConfig(n, theta)
            init = uniform_initial_state(n)
            red = iterate(cfg, init, 200)
            full = full_iterate(cfg, init, 200)
            b, a = closed_form_states(cfg, init, np.arange(201))
            worst_full = max(worst_full, float(np.max(np.abs(red.b - full.b))), float(np.max(np.abs(red.a - full.a))))
            worst_spec = max(worst_spec, float(np.max(np.abs(red.b - b))), float(np.max(np.abs(red.a - a))))
    ok = worst_full < 1e-11 and worst_spec < 1e-10
    return ok, f"full {worst_full:.2e} (tol 1e-11), spectral {worst_spec:.2e} (tol 1e-10)"


def check_sum_rule() -> tuple[bool, str]:
    worst = 0.0
    for n in (4, 100, 10**6):
        for theta in np.linspace(0.0, 2 * math.pi, 1000, endpoint=False):
            cfg = ProblemConfig(n, float(theta))
            spec = diagonalize(build_iteration_matrix(cfg))
            d = (spec.gamma1 + spec.gamma2 - math.pi - cfg.theta) % (2 * math.pi)
            worst = max(worst, min(d, 2 * math.pi - d))
    return worst < 1e-12, f"max dev {worst:.2e} (tol 1e-12)"


def check_fig3() -> tuple[bool, str]:
    st = trajectory_stats(ProblemConfig(100, math.pi / 4), 100)
    vals = st.values[1:]
    hi, lo = float(vals.max()), float(vals.min())
    return 0.13 <= hi <= 0.17 and 0.05 <= lo <= 0.09, f"max {hi:.4f}, min {lo:.4f}"


def check_fig4() -> tuple[bool, str]:
    vals = trajectory_stats(ProblemConfig(100, math.pi / 3), 100).values
    inside = bool(np.all((vals[1:] >= 0.05) & (vals[1:] <= 0.19)))
    v = full_iterate(ProblemConfig(100, math.pi / 3), uniform_initial_state(100), 53).abs_b
    drift3 = float(np.max(np.abs(v[4:54] - v[1:51])))
    drift1 = float(np.max(np.abs(v[2:52] - v[1:51])))
    ok = inside and drift3 < PERIOD3_BOUND <= drift1 / 3
    return ok, f"range [{vals[1:].min():.4f}, {vals[1:].max():.4f}], period-3 drift {drift3:.2e} vs step {drift1:.2e}"


def check_peaks() -> tuple[bool, str]:
    c4 = count_peaks(theta_sweep(100, 4), (0.0, math.pi)).count
    c7 = count_peaks(theta_sweep(100, 7), (0.0, math.pi)).count
    return c4 == 1 and c7 == 3, f"|B4| peaks {c4} (want 1), |B7| peaks {c7} (want 3)"


def check_robustness() -> tuple[bool, str]:
    vals = np.array([row[2] for row in figure_dataset(5).rows])
    m = float(vals.max())
    ok = m > 0.5 and abs(m - FIG5_MAX_ABS_B) < 1e-10
    return ok, f"max |B| {m:.10f} (frozen {FIG5_MAX_ABS_B:.10f})"


def check_structure() -> tuple[bool, str]:
    rng = np.random.default_rng(12345)
    unit = max(build_iteration_matrix(ProblemConfig(n, t)).unitarity_defect() for n in SIZES for t in THETAS)

    d_inv = d_norm = 0.0
    for n in (2, 5, 64, 1000):
        for _ in range(5):
            x = rng.normal(size=n) + 1j * rng.normal(size=n)
            s = FullState(x / np.linalg.norm(x))
            dd = apply_diffusion(apply_diffusion(s))
            d_inv = max(d_inv, float(np.max(np.abs(dd.amplitudes - s.amplitudes))))
            d_norm = max(d_norm, abs(apply_diffusion(s).norm_sq - 1.0))

    sym = 0.0
    for n, theta in ((7, 1.0), (100, math.pi / 3)):
        cfg = ProblemConfig(n, theta, marked=n // 2)
        state = lift(_random_states(rng, 1)[0], cfg)
        for _ in range(1000):
            state = apply_diffusion(apply_phase_oracle(state, theta))
            rest = np.delete(state.amplitudes, cfg.marked)
            sym = max(sym, float(np.max(np.abs(rest - rest[0]))))

    drift = 0.0
    for n in SIZES:
        for theta in THETAS:
            drift = max(drift, float(np.max(np.abs(iterate(ProblemConfig(n, theta), uniform_initial_state(n), 1000).norm_defect))))

    invol = 0.0
    m0 = build_iteration_matrix(ProblemConfig(100, 0.0)).entries
    for s in _random_states(rng, 20):
        v = np.array([s.b, s.a])
        invol = max(invol, float(np.max(np.abs(m0 @ (m0 @ v) - v))))

    ok = unit < 1e-13 and d_inv < 1e-13 and d_norm < 1e-13 and sym < 1e-11 and drift < 1e-12 and invol < 1e-12
    detail = (
        f"unitarity {unit:.1e}, D^2 {d_inv:.1e}, D norm {d_norm:.1e}, "
        f"symmetry {sym:.1e}, norm drift {drift:.1e}, theta=0 involution {invol:.1e}"
    )
    return ok, detail


def check_dense_diffusion() -> tuple[bool, str]:
    rng = np.random.default_rng(7)
    worst = 0.0
    for n in range(2, 65):
        x = rng.normal(size=n) + 1j * rng.normal(size=n)
        s = FullState(x / np.linalg.norm(x))
        worst = max(worst, float(np.max(np.abs(apply_diffusion(s).amplitudes - diffusion_matrix(n) @ s.amplitudes))))
    return worst < 1e-13, f"max dev {worst:.2e} (tol 1e-13)"


CHECKS: dict[str, Check] = {
    "theta=pi reduces to standard search": check_grover_reduction,
    "reduced / spectral / full agreement": check_engines,
    "eigenphase sum rule": check_sum_rule,
    "theta=pi/4 trajectory bounds": check_fig3,
    "theta=pi/3 range and period-3 branches": check_fig4,
    "peak counts on (0, pi)": check_peaks,
    "robustness at theta=pi/1.1": check_robustness,
    "structural invariants": check_structure,
    "dense diffusion cross-check": check_dense_diffusion,
}


def variant_residual(n: int = 100, theta: float = math.pi / 4, j_max: int = 100) -> float:
    """Largest ``|B|`` gap between the ``sqrt(n-2)`` recurrence and the full simulation."""
    cfg = ProblemConfig(n, theta)
    init = uniform_initial_state(n)
    variant = iterate(cfg, init, j_max, matrix=variant_recurrence_matrix(cfg))
    truth = full_iterate(cfg, init, j_max)
    return float(np.max(np.abs(variant.b - truth.b)))


def run_checks(names: Iterable[str] | None = None) -> list[tuple[str, bool, str]]:
    results = []
    for name in names or CHECKS:
        try:
            ok, detail = CHECKS[name]()
        except Exception as exc:  # a crash is a failed check, not a crashed suite
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append((name, ok, detail))
    return results
