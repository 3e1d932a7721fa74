"""Exception types shared across the library."""


class SupercongError(Exception):
    """Base class for all library errors."""


class DomainError(SupercongError, ValueError):
    """Input outside the mathematical domain of an operation."""


class ContextMismatchError(SupercongError, ValueError):
    """Two p-adic values from different contexts were combined."""


class PrecisionError(SupercongError, ValueError):
    """A congruence was requested beyond the known precision."""


class CapExceededError(SupercongError, ValueError):
    """A desk-scale cap (p^r or truncation length) was exceeded."""


class ParseError(SupercongError, ValueError):
    """Syntax error in the term DSL, with source position."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.message = message
        self.line = line
        self.column = column


class NonSimilarTermsError(SupercongError, ValueError):
    """Ratio of two hypergeometric terms is not a rational function."""
