"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class RComplexityError(Exception):
    """Base class for all errors raised by rcomplexity."""


class InvalidTerm(RComplexityError, ValueError):
    pass


class EmptyFunction(RComplexityError, ValueError):
    pass


class DomainError(RComplexityError, ValueError):
    pass


class GrowthOverflow(RComplexityError, OverflowError):
    pass


class NonPositiveScalar(RComplexityError, ValueError):
    pass


class NotApplicable(RComplexityError, ValueError):
    pass


class KindMismatch(RComplexityError, ValueError):
    pass


class PreconditionFailed(RComplexityError, ValueError):
    pass


class DegenerateDesign(RComplexityError, ValueError):
    pass


class NoViableModel(RComplexityError, ValueError):
    pass


class CsvError(RComplexityError, ValueError):
    pass


class ParseError(RComplexityError, ValueError):
    """Syntax error in an expression, carrying the offending offset.

    ``offset`` is a 0-based index into ``source``; it is clamped so that it
    always addresses a character of a non-empty source.
    """

    def __init__(self, message: str, source: str, offset: int, expected: str | None = None):
        self.source = source
        self.offset = max(0, min(offset, len(source) - 1))
        self.expected = expected
        self.reason = message
        detail = f"{message} at offset {self.offset}"
        if expected:
            detail += f" (expected {expected})"
        super().__init__(detail)

    def caret(self) -> str:
        return f"{self.source}\n{' ' * self.offset}^"


class RateNotAllowed(ParseError):
    pass


class ParseInvalidTerm(ParseError, InvalidTerm):
    """A syntactically valid term that violates the growth-term invariants."""
