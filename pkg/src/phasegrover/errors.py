"""Exception hierarchy shared by every module of the package."""


class PhaseGroverError(Exception):
    """Base class for all errors raised by phasegrover."""


class DomainError(PhaseGroverError, ValueError):
    """A parameter lies outside the range where the model is defined."""


class NormalizationError(PhaseGroverError, ValueError):
    def __init__(self, norm_sq: float):
        self.norm_sq = norm_sq
        self.defect = norm_sq - 1.0
        super().__init__(f"state is not normalized: norm^2 = {norm_sq!r} (defect {self.defect:+.3e})")


class DegenerateSpectrumError(PhaseGroverError, ArithmeticError):
    """The two eigenvalues of the iteration matrix are too close to separate."""


class SymmetryViolationError(PhaseGroverError, ArithmeticError):
    """Unmarked amplitudes of a full state vector are no longer all equal."""


class SizeGuardError(PhaseGroverError, MemoryError):
    """Full state vector would exceed the configured size limit."""
