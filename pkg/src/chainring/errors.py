"""
Exception hierarchy for chainring.
"""

from typing import Optional


class ChainRingError(Exception):
    """Base class for every error raised by chainring."""


class RingConstructionError(ChainRingError):
    """Invalid ring parameters (p, n, r, family or field polynomial)."""


class MixedRingError(ChainRingError):
    """Operands belong to different rings."""


class NotAUnit(ChainRingError):
    """An operation needed a unit and received a non-unit."""


class NoUnitCoordinate(ChainRingError):
    """A vector lies in (R^0)^d where a unit coordinate is required."""


class DimensionMismatch(ChainRingError):
    """Vectors or matrices of incompatible dimensions."""


class MatrixSizeError(ChainRingError):
    """Matrix is larger than the exact expansion supports."""


class GuardExceeded(ChainRingError):
    """An enumeration or materialization guard was exceeded."""

    def __init__(self, what: str, size: int, limit: int):
        self.what = what
        self.size = size
        self.limit = limit
        super().__init__(f"{what}: size {size} exceeds limit {limit}")


class PreconditionViolation(ChainRingError):
    """Input violates the hypothesis of the statement being checked."""


class VertexOutOfRange(ChainRingError):
    """A vertex id does not belong to the requested graph part."""


class NotBiregular(ChainRingError):
    """Biadjacency rows or columns do not share a common degree."""


class ConfigError(ChainRingError):
    """Invalid experiment configuration; names the offending field."""

    def __init__(self, field: str, message: Optional[str] = None):
        self.field = field
        super().__init__(f"invalid field '{field}': {message}" if message else f"invalid field '{field}'")


class UnknownExperiment(ConfigError):
    """No experiment plugin is registered under the requested name."""

    def __init__(self, name: str):
        super().__init__("experiment", f"unknown experiment '{name}'")
        self.name = name
