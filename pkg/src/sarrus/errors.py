"""Exception types shared across the library."""

from __future__ import annotations


class SarrusError(Exception):
    """Base class for all library errors."""


class SizeMismatch(SarrusError):
    """Two objects that must share a size n do not."""


class IndexOutOfRange(SarrusError):
    """A 1-based index fell outside {1..n}."""


class ChainMismatch(SarrusError):
    """Consecutive blocks cannot share a column.

    Carries the 0-based index of the junction that failed.
    """

    def __init__(self, junction: int, message: str | None = None):
        self.junction = junction
        super().__init__(message or f"blocks {junction} and {junction + 1} do not share a column")


class InvalidWindow(SarrusError):
    """A window repeats a column index and is not a permutation.

    Carries the 1-based start position of the offending window.
    """

    def __init__(self, start: int, message: str | None = None):
        self.start = start
        super().__init__(message or f"window at start {start} is not a permutation")


class InvalidScheme(SarrusError):
    """A scheme failed validation where a valid one is required."""


class SizeLimitExceeded(SarrusError):
    """A factorial-time operation was asked for an n beyond its guard."""


class UnsupportedSize(SarrusError):
    """A built-in constructor does not exist for this n."""


class SizeTooSmall(SarrusError):
    """n is below the smallest size the operation is defined for."""


class NotFound(SarrusError):
    """The scheme search exhausted its options or ran out of time."""


class VerificationFailed(SarrusError):
    """A generated scheme failed validation or an oracle comparison."""


class ParseError(SarrusError):
    """A matrix file could not be parsed.

    ``line`` and ``column`` are 1-based; column is the field index within
    the line (0 when the error is not tied to a single field).
    """

    def __init__(self, line: int, column: int, message: str):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class NonSquare(SarrusError):
    """The parsed matrix is not square."""
