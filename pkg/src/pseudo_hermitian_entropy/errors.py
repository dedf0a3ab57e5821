"""
Exceptions raised by the simulation library.

Every error derives from PseudoHermitianError so callers (and the CLI) can
catch the whole family at once.
"""
from __future__ import annotations


class PseudoHermitianError(Exception):
    """Base class for all library errors."""


class ConfigurationError(PseudoHermitianError, ValueError):
    """Invalid configuration value.

    Attributes:
        field: Name of the offending field, if known
    """

    def __init__(self, message: str, field: str | None = None):
        super().__init__(message)
        self.field = field


class DegenerateEnsembleError(PseudoHermitianError):
    """Rank-deficient or tied Wishart spectrum; resampling is advised."""


class RankError(PseudoHermitianError):
    """Singular Û where an inverse power of it is required."""


class AxisError(PseudoHermitianError, ValueError):
    """Invalid Pauli axis selection."""


class UnsupportedParameterError(PseudoHermitianError):
    """Coupling parameters outside the domain of the closed-form flow."""


class OracleError(PseudoHermitianError):
    """Numerical oracle failed to converge."""


class ConditioningError(PseudoHermitianError):
    """Metric operator too ill-conditioned to invert."""


class NumericalValidityError(PseudoHermitianError):
    """Density matrix eigenvalue outside the physical range."""


class ModeIndexError(PseudoHermitianError, IndexError):
    """Bell pair mode index out of range."""
