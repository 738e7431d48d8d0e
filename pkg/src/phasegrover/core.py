"""Problem configuration and the two-amplitude reduced state.

A single iteration of the search acts on the plane spanned by the marked
basis state and the uniform superposition of the ``n - 1`` unmarked ones, so
a state is fully described by the pair ``(b, a)`` of complex amplitudes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DomainError, NormalizationError

TWO_PI = 2.0 * math.pi

# tolerance for accepting a user supplied initial state
NORM_GATE = 1e-9


def canonical_theta(theta: float) -> float:
    """Reduce ``theta`` into ``[0, 2*pi)``."""
    theta = float(theta)
    if not math.isfinite(theta):
        raise DomainError(f"theta must be finite, got {theta!r}")
    t = math.fmod(theta, TWO_PI)
    if t < 0.0:
        t += TWO_PI
    # fmod of a tiny negative number can round up to exactly 2*pi
    if t >= TWO_PI:
        t = 0.0
    return t


def _check_n(n) -> int:
    if isinstance(n, bool) or int(n) != n:
        raise DomainError(f"n must be an integer, got {n!r}")
    n = int(n)
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n}")
    return n


@dataclass(frozen=True)
class RotationAngle:
    psi: float
    cos_psi: float
    sin_psi: float


@dataclass(frozen=True)
class ProblemConfig:
    """Search-space size, marked-state phase and marked index.

    ``theta`` is stored reduced modulo 2*pi. ``marked`` only matters to the
    full state-vector simulation.
    """

    n: int
    theta: float
    marked: int = 0
    rotation: RotationAngle = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = _check_n(self.n)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "theta", canonical_theta(self.theta))
        if not 0 <= self.marked < n:
            raise DomainError(f"marked index {self.marked} outside [0, {n})")
        object.__setattr__(self, "marked", int(self.marked))
        object.__setattr__(self, "rotation", rotation_angle(n))

    @property
    def psi(self) -> float:
        return self.rotation.psi


@dataclass(frozen=True)
class ReducedState:
    b: complex
    a: complex

    @property
    def norm_sq(self) -> float:
        return abs(self.b) ** 2 + abs(self.a) ** 2

    @property
    def norm_defect(self) -> float:
        return self.norm_sq - 1.0


def rotation_angle(n: int) -> RotationAngle:
    n = _check_n(n)
    cos_psi = (n - 2) / n
    sin_psi = 2.0 * math.sqrt(n - 1) / n
    psi = 2.0 * math.asin(1.0 / math.sqrt(n))
    return RotationAngle(psi=psi, cos_psi=cos_psi, sin_psi=sin_psi)


def uniform_initial_state(n: int) -> ReducedState:
    """Equal superposition over all ``n`` basis states."""
    n = _check_n(n)
    return ReducedState(complex(math.sqrt(1.0 / n)), complex(math.sqrt((n - 1) / n)))


def custom_initial_state(b: complex, a: complex) -> ReducedState:
    state = ReducedState(complex(b), complex(a))
    if not math.isfinite(state.norm_sq) or abs(state.norm_defect) > NORM_GATE:
        raise NormalizationError(state.norm_sq)
    return state
