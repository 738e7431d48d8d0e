"""Two-dimensional iteration matrix and direct evolution of the reduced state."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .core import ProblemConfig, ReducedState, rotation_angle


@dataclass(frozen=True, eq=False)
class IterationMatrix:
    """2x2 complex matrix acting on ``(b, a)``; rows/cols ordered (B, A)."""

    entries: np.ndarray
    config: ProblemConfig

    def __post_init__(self):
        m = np.array(self.entries, dtype=np.complex128)
        if m.shape != (2, 2):
            raise ValueError(f"iteration matrix must be 2x2, got shape {m.shape}")
        m.setflags(write=False)
        object.__setattr__(self, "entries", m)

    def unitarity_defect(self) -> float:
        m = self.entries
        return float(np.max(np.abs(m.conj().T @ m - np.eye(2))))

    def det(self) -> complex:
        m = self.entries
        return complex(m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0])


@dataclass(frozen=True, eq=False)
class Trajectory:
    """States ``j = 0 .. j_max`` stored as two parallel complex arrays."""

    config: ProblemConfig
    b: np.ndarray
    a: np.ndarray

    def __post_init__(self):
        b = np.asarray(self.b, dtype=np.complex128)
        a = np.asarray(self.a, dtype=np.complex128)
        if b.shape != a.shape or b.ndim != 1 or b.size == 0:
            raise ValueError("trajectory needs two equal-length non-empty 1-d arrays")
        b.setflags(write=False)
        a.setflags(write=False)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "a", a)

    def __len__(self) -> int:
        return self.b.size

    def __getitem__(self, j: int) -> ReducedState:
        return ReducedState(complex(self.b[j]), complex(self.a[j]))

    def __iter__(self) -> Iterator[ReducedState]:
        for j in range(len(self)):
            yield self[j]

    @property
    def states(self) -> list[ReducedState]:
        return list(self)

    @property
    def j_max(self) -> int:
        return len(self) - 1

    @property
    def abs_b(self) -> np.ndarray:
        return np.abs(self.b)

    @property
    def norm_defect(self) -> np.ndarray:
        return np.abs(self.b) ** 2 + np.abs(self.a) ** 2 - 1.0


def build_iteration_matrix(config: ProblemConfig) -> IterationMatrix:
    rot = config.rotation
    phase = cmath.exp(1j * config.theta)
    entries = [
        [-rot.cos_psi * phase, rot.sin_psi],
        [rot.sin_psi * phase, rot.cos_psi],
    ]
    return IterationMatrix(np.array(entries, dtype=np.complex128), config)


def variant_recurrence_matrix(config: ProblemConfig) -> IterationMatrix:
    """Recurrence with ``2*sqrt(n-2)/n`` coupling the marked amplitude into A.

    This is not unitary. It exists only so the verify command can show how
    far that coefficient drifts from the full state-vector simulation.
    """
    n = config.n
    rot = config.rotation
    phase = cmath.exp(1j * config.theta)
    entries = [
        [-rot.cos_psi * phase, rot.sin_psi],
        [2.0 * math.sqrt(n - 2) / n * phase, rot.cos_psi],
    ]
    return IterationMatrix(np.array(entries, dtype=np.complex128), config)


def step(state: ReducedState, m: IterationMatrix) -> ReducedState:
    e = m.entries
    b, a = state.b, state.a
    return ReducedState(complex(e[0, 0] * b + e[0, 1] * a), complex(e[1, 0] * b + e[1, 1] * a))


def iterate(
    config: ProblemConfig,
    initial: ReducedState,
    j_max: int,
    matrix: IterationMatrix | None = None,
) -> Trajectory:
    """Apply the iteration ``j_max`` times, keeping every intermediate state.

    No renormalization is done, so any unitarity defect shows up as norm drift.
    """
    if j_max < 0:
        raise ValueError(f"j_max must be >= 0, got {j_max}")
    m = build_iteration_matrix(config) if matrix is None else matrix
    t00, t01, t10, t11 = (complex(x) for x in m.entries.ravel())
    bs = np.empty(j_max + 1, dtype=np.complex128)
    as_ = np.empty(j_max + 1, dtype=np.complex128)
    b, a = complex(initial.b), complex(initial.a)
    bs[0], as_[0] = b, a
    for j in range(1, j_max + 1):
        b, a = t00 * b + t01 * a, t10 * b + t11 * a
        bs[j], as_[j] = b, a
    return Trajectory(config, bs, as_)


def grover_reference_amplitude(n: int, j: int) -> float:
    """Marked amplitude of standard search (phase pi) after ``j`` iterations
    from the uniform start: ``sin((j + 1/2) * psi)``."""
    if j < 0:
        raise ValueError(f"j must be >= 0, got {j}")
    return math.sin((j + 0.5) * rotation_angle(n).psi)
