"""Error hierarchy for the series, oracle and verification services.

Every error is a ``ValueError`` so routers and the CLI can treat them as
invalid input uniformly.
"""

from typing import Optional, Tuple


class HilbertSeriesError(ValueError):
    """Base class for all domain errors."""


class InvalidInput(HilbertSeriesError):
    """An argument violates an operation's precondition."""


class NotAnEulerTransform(HilbertSeriesError):
    """Möbius inversion of a series produced a non-integer coefficient."""


class UnsupportedParity(HilbertSeriesError):
    """The operation is only defined for purely even alphabets."""


class InvalidCharacteristic(HilbertSeriesError):
    """The prime is too small for a nontrivially graded restricted algebra."""


class InvalidBicharacter(HilbertSeriesError):
    """A bicharacter table fails bimultiplicativity or skew-symmetry."""

    def __init__(self, message: str, witness: Optional[Tuple] = None):
        super().__init__(message)
        self.witness = witness


class TooLarge(HilbertSeriesError):
    """The oracle would have to enumerate more words than the configured cap."""
