"""Brute-force simulation on the full ``n``-dimensional state vector.

Serves as ground truth for the reduced model: no assumption about the
two-dimensional invariant subspace is made while iterating, only when
projecting back.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .core import ProblemConfig, ReducedState
from .errors import SizeGuardError, SymmetryViolationError
from .reduced import Trajectory

DEFAULT_MAX_N = 2**24

# relative spread allowed among unmarked amplitudes in project()
SYMMETRY_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class FullState:
    amplitudes: np.ndarray
    marked: int = 0

    def __post_init__(self):
        amps = np.array(self.amplitudes, dtype=np.complex128)
        if amps.ndim != 1 or amps.size < 2:
            raise ValueError("amplitudes must be a 1-d array of length >= 2")
        if not 0 <= self.marked < amps.size:
            raise ValueError(f"marked index {self.marked} outside [0, {amps.size})")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @property
    def n(self) -> int:
        return self.amplitudes.size

    @property
    def norm_sq(self) -> float:
        return float(np.vdot(self.amplitudes, self.amplitudes).real)


def lift(reduced: ReducedState, config: ProblemConfig) -> FullState:
    n = config.n
    amps = np.full(n, reduced.a / math.sqrt(n - 1), dtype=np.complex128)
    amps[config.marked] = reduced.b
    return FullState(amps, config.marked)


def apply_phase_oracle(state: FullState, theta: float) -> FullState:
    amps = state.amplitudes.copy()
    amps[state.marked] *= cmath.exp(1j * theta)
    return FullState(amps, state.marked)


def apply_diffusion(state: FullState) -> FullState:
    """Inversion about the average, ``x_i -> 2*mean(x) - x_i``, in O(n)."""
    amps = state.amplitudes
    return FullState(2.0 * amps.mean() - amps, state.marked)


def diffusion_matrix(n: int) -> np.ndarray:
    """Dense ``n x n`` inversion-about-average matrix; for cross-checks only."""
    d = np.full((n, n), 2.0 / n)
    d[np.diag_indices(n)] -= 1.0
    return d


def project(state: FullState) -> ReducedState:
    amps = state.amplitudes
    rest = np.delete(amps, state.marked)
    common = rest.mean()
    scale = float(np.max(np.abs(amps)))
    spread = float(np.max(np.abs(rest - common)))
    if spread > SYMMETRY_TOL * max(scale, 1e-300):
        raise SymmetryViolationError(
            f"unmarked amplitudes differ by {spread:.3e} (relative {spread / scale:.3e})"
        )
    return ReducedState(complex(amps[state.marked]), complex(common * math.sqrt(state.n - 1)))


def full_iterate(
    config: ProblemConfig,
    initial: ReducedState,
    j_max: int,
    max_n: int = DEFAULT_MAX_N,
) -> Trajectory:
    """Oracle-then-diffusion on the full vector, projected after every iteration."""
    if j_max < 0:
        raise ValueError(f"j_max must be >= 0, got {j_max}")
    if config.n > max_n:
        raise SizeGuardError(f"n={config.n} exceeds the full-state limit {max_n}")
    state = lift(initial, config)
    bs = np.empty(j_max + 1, dtype=np.complex128)
    as_ = np.empty(j_max + 1, dtype=np.complex128)
    bs[0], as_[0] = initial.b, initial.a
    for j in range(1, j_max + 1):
        state = apply_diffusion(apply_phase_oracle(state, config.theta))
        r = project(state)
        bs[j], as_[j] = r.b, r.a
    return Trajectory(config, bs, as_)
