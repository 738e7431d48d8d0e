"""Amplitude evolution for search with an arbitrary phase on the marked state.

Three independent engines compute the marked amplitude: direct iteration
of the 2x2 reduced matrix, its eigen-decomposition, and brute-force
simulation of the full state vector.
"""

from .core import (
    ProblemConfig,
    ReducedState,
    RotationAngle,
    custom_initial_state,
    rotation_angle,
    uniform_initial_state,
)
from .errors import (
    DegenerateSpectrumError,
    DomainError,
    NormalizationError,
    PhaseGroverError,
    SizeGuardError,
    SymmetryViolationError,
)
from .full import FullState, apply_diffusion, apply_phase_oracle, full_iterate, lift, project
from .reduced import IterationMatrix, Trajectory, build_iteration_matrix, grover_reference_amplitude, iterate, step
from .spectral import Spectrum, closed_form_state, diagonalize, eigenphase_separation
from .sweeps import (
    PeakReport,
    ThetaSweep,
    TrajectoryStats,
    count_peaks,
    figure_dataset,
    theta_sweep,
    trajectory_stats,
)

__version__ = "0.1.0"
