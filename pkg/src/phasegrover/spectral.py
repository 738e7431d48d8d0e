"""Eigen-decomposition of the iteration matrix and the closed-form evolution.

The iteration matrix ``T`` is unitary with ``det T = -exp(i*theta)`` and
``tr T = cos_psi * (1 - exp(i*theta))``. Writing its eigenvalues as
``exp(i*gamma)`` with

    gamma_1 = (pi + theta)/2 + delta,   gamma_2 = (pi + theta)/2 - delta,

the trace condition reduces to ``cos(delta) = -cos_psi * sin(theta/2)``.
Powers of ``T`` are then ``U diag(exp(i*j*gamma)) U^H``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .core import TWO_PI, ProblemConfig, ReducedState
from .errors import DegenerateSpectrumError
from .reduced import IterationMatrix, build_iteration_matrix

# minimum |lambda_1 - lambda_2| for which eigenvectors are trusted
DEGENERACY_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class Spectrum:
    gamma1: float
    gamma2: float
    u: np.ndarray
    delta: float

    @property
    def eigenvalues(self) -> tuple[complex, complex]:
        return cmath.exp(1j * self.gamma1), cmath.exp(1j * self.gamma2)


def _half_separation(config: ProblemConfig) -> float:
    c = config.rotation.cos_psi
    s = config.rotation.sin_psi
    half = 0.5 * config.theta
    cos_delta = -c * math.sin(half)
    # 1 - c^2 sin^2(theta/2) rewritten to avoid cancellation when c ~ 1
    sin_delta = math.sqrt(math.cos(half) ** 2 + (s * math.sin(half)) ** 2)
    return math.atan2(sin_delta, cos_delta)


def eigenphase_separation(config: ProblemConfig) -> float:
    """Angular gap ``gamma_1 - gamma_2``, in ``[0, 2*pi]``."""
    return 2.0 * _half_separation(config)


def sin_eigenphases(config: ProblemConfig) -> tuple[float, float]:
    """``(sin gamma_1, sin gamma_2)`` from the explicit root formula.

    Independent of :func:`diagonalize`; used to cross-check its phases.
    """
    c = config.rotation.cos_psi
    th = config.theta
    root = 2.0 * math.sqrt(1.0 - (c * math.sin(th / 2)) ** 2) * math.sin(th / 2)
    base = -math.sin(th) * c
    return (base - root) / 2.0, (base + root) / 2.0


def _eigenvector(m: np.ndarray, lam: complex) -> np.ndarray:
    # both rows of (T - lam I) v = 0 give a candidate; keep the larger one
    v1 = np.array([m[0, 1], lam - m[0, 0]], dtype=np.complex128)
    v2 = np.array([lam - m[1, 1], m[1, 0]], dtype=np.complex128)
    n1, n2 = np.linalg.norm(v1), np.linalg.norm(v2)
    v, nv = (v1, n1) if n1 >= n2 else (v2, n2)
    return v / nv


def diagonalize(m: IterationMatrix, config: ProblemConfig | None = None) -> Spectrum:
    """Eigenphases and unitary eigenvector matrix of ``m``.

    The phases come from the analytic trace/determinant relations of
    ``config`` (defaults to ``m.config``), so ``m`` must be that config's
    iteration matrix. Raises :class:`DegenerateSpectrumError` when the two
    eigenvalues are closer than ``DEGENERACY_TOL``.
    """
    config = m.config if config is None else config
    delta = _half_separation(config)
    gap = 2.0 * math.sin(delta)
    if gap <= DEGENERACY_TOL:
        raise DegenerateSpectrumError(
            f"eigenvalues coincide to {gap:.3e} (n={config.n}, theta={config.theta!r})"
        )
    mid = 0.5 * (math.pi + config.theta)
    g1 = (mid + delta) % TWO_PI
    g2 = (mid - delta) % TWO_PI

    e = m.entries
    u1 = _eigenvector(e, cmath.exp(1j * g1))
    u2 = _eigenvector(e, cmath.exp(1j * g2))
    # T is normal, so u2 is already orthogonal to u1 up to rounding; remove the residue
    u2 = u2 - np.vdot(u1, u2) * u1
    u2 /= np.linalg.norm(u2)
    u = np.column_stack([u1, u2])
    u.setflags(write=False)
    return Spectrum(gamma1=g1, gamma2=g2, u=u, delta=delta)


def _propagate(spec: Spectrum, initial: ReducedState, js: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    u = spec.u
    coeffs = u.conj().T @ np.array([initial.b, initial.a], dtype=np.complex128)
    ph1 = np.exp(1j * (js * spec.gamma1 % TWO_PI))
    ph2 = np.exp(1j * (js * spec.gamma2 % TWO_PI))
    c1 = coeffs[0] * ph1
    c2 = coeffs[1] * ph2
    b = u[0, 0] * c1 + u[0, 1] * c2
    a = u[1, 0] * c1 + u[1, 1] * c2
    return b, a


def closed_form_state(
    config: ProblemConfig,
    initial: ReducedState,
    j: int,
    spectrum: Spectrum | None = None,
) -> ReducedState:
    """State after ``j`` iterations without stepping through the intermediates."""
    if j < 0:
        raise ValueError(f"j must be >= 0, got {j}")
    if j == 0:
        return ReducedState(complex(initial.b), complex(initial.a))
    spec = diagonalize(build_iteration_matrix(config), config) if spectrum is None else spectrum
    b, a = _propagate(spec, initial, np.array([float(j)]))
    return ReducedState(complex(b[0]), complex(a[0]))


def closed_form_states(
    config: ProblemConfig,
    initial: ReducedState,
    js: Sequence[int],
    spectrum: Spectrum | None = None,
) -> tuple[np.ndarray, np.ndarray]:
    """Vectorised :func:`closed_form_state`; returns the ``b`` and ``a`` arrays."""
    js = np.asarray(js, dtype=np.int64)
    if np.any(js < 0):
        raise ValueError("iteration counts must be >= 0")
    spec = diagonalize(build_iteration_matrix(config), config) if spectrum is None else spectrum
    b, a = _propagate(spec, initial, js.astype(np.float64))
    zero = js == 0
    b[zero] = initial.b
    a[zero] = initial.a
    return b, a
