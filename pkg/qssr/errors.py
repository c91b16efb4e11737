"""
Exceptions raised by the qssr package.

Every error derives from QssrError. Errors caused by bad caller input also
derive from ValueError so that existing ``except ValueError`` handlers keep
working.
"""

from typing import Optional


class QssrError(Exception):
    """Base class for all errors raised by qssr."""


class DimensionError(QssrError, ValueError):
    """Shapes or dimensions do not match, or a dimension is too large."""


class ArgumentError(QssrError, ValueError):
    """An index or parameter is outside its allowed range."""


class InvariantError(QssrError, ValueError):
    """A value violates a physical invariant (trace, hermiticity, positivity)."""


class CompletenessError(InvariantError):
    """Kraus operators do not resolve the identity."""

    def __init__(self, deviation: float, tolerance: float, source: Optional[str] = None):
        self.deviation = deviation
        self.tolerance = tolerance
        location = f"{source}: " if source else ""
        super().__init__(
            f"{location}Kraus completeness violated: max |sum K^dag K - I| = "
            f"{deviation:.3e} exceeds {tolerance:.1e}"
        )


class OrthonormalityError(InvariantError):
    """Column vectors are not orthonormal."""

    def __init__(self, deviation: float, tolerance: float, what: str = "columns"):
        self.deviation = deviation
        self.tolerance = tolerance
        super().__init__(
            f"{what} are not orthonormal: max |G - I| = {deviation:.3e} "
            f"exceeds {tolerance:.1e}"
        )


class CapacityError(QssrError, ValueError):
    """The requested (shape, mode) cannot host N^n orthonormal columns."""


class SynchronizationError(QssrError):
    """A constructed channel is not a quantum-state synchronizer."""


class ChannelFormatError(QssrError, ValueError):
    """A channel, matrix or state file is malformed."""


class UnsupportedMeasureError(QssrError, ValueError):
    """The asynchronicity measure is only defined for qubit subsystems."""
