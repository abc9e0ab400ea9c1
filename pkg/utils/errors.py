"""
Exception hierarchy shared by all computation packages.
"""

from typing import Optional


class WedgeworksError(Exception):
    """Base class for all domain errors raised by this repository."""


class GenusMismatch(WedgeworksError):
    """Operands live on surfaces of different genus."""


class InvalidSymplecticMatrix(WedgeworksError):
    """A matrix fails to preserve the skew intersection form."""


class NotSymmetrizable(WedgeworksError):
    """No monomial shift makes a Laurent polynomial palindromic."""


class InvalidWord(WedgeworksError):
    """A cobordism word has inconsistent genus bookkeeping."""


class NonIntegralTrace(WedgeworksError):
    """A compressed trace came out non-integral."""


class NegativeRank(WedgeworksError):
    """Component counts give a negative connecting-map rank."""


class NonIntegralWeight(WedgeworksError):
    """A Laurent polynomial does not lie in the span of the quantum integers."""


class InvalidCurveSpec(WedgeworksError):
    """Bounding-curve data is not a symplectic basis of a subsurface."""


class NoWitnessFound(WedgeworksError):
    """An exhaustive search finished without a witness."""


class EmptyComponent(WedgeworksError):
    """A Lefschetz component needed by an operation is zero-dimensional."""


class ShapeError(WedgeworksError):
    """Block matrices have inconsistent dimensions."""


class ContainmentViolation(WedgeworksError):
    """An integral containment that must hold does not."""


class PreconditionError(WedgeworksError):
    """Arguments violate an operation's stated precondition."""


class DimensionMismatch(WedgeworksError):
    """A dimension identity failed."""


class InconsistentInput(WedgeworksError):
    """Topological input data contradicts itself."""


class _LocatedError(WedgeworksError):
    def __init__(self, message: str, location: Optional[str] = None):
        super().__init__(message if location is None else f"{message} (at {location})")
        self.location = location


class ExactnessFailure(_LocatedError):
    """A sequence of maps that must be exact is not."""


class MismatchError(_LocatedError):
    """Two independent routes to the same quantity disagree."""


class SchemaViolation(WedgeworksError):
    """A job or its payload does not match its schema."""

    def __init__(self, message: str, pointers=()):
        super().__init__(message)
        self.pointers = list(pointers)
