"""Exception hierarchy for monocurve."""

from typing import Optional


class MonocurveError(Exception):
    """Base class for every error raised on purpose by this package."""


class ParseError(MonocurveError):
    """Text that does not follow the binomial, ideal or graph grammar.

    Args:
        message: What went wrong
        position: 0-based column inside the offending line
        line: 1-based line number when parsing a file
    """

    def __init__(self, message: str, position: int = 0, line: Optional[int] = None):
        self.message = message
        self.position = position
        self.line = line
        where = f"line {line}, column {position + 1}" if line is not None else f"column {position + 1}"
        super().__init__(f"{message} ({where})")


class ComputationRejected(MonocurveError):
    """Input outside the domain of a computation (gcd != 1, n != 4, non-positive grading, ...)."""


class NotInIdealError(ComputationRejected):
    """A binomial or monomial was required to belong to the ideal (or to M_J) and does not."""


class InvariantViolation(MonocurveError):
    """Two independent computations of the same mathematical fact disagree."""
