"""Exception types shared across the package."""


class BoolRingError(Exception):
    """Base class for all errors raised by boolring."""


class WidthMismatch(BoolRingError, ValueError):
    pass


class ShapeMismatch(BoolRingError, ValueError):
    pass


class EmptyInput(BoolRingError, ValueError):
    pass


class IndexOutOfRange(BoolRingError, IndexError):
    pass


class NotFound(BoolRingError, LookupError):
    pass


class NotAZeroDivisorPair(BoolRingError, ValueError):
    pass


class InfeasibleText(BoolRingError, ValueError):
    """A text meets neither (or both) of the witness membership conditions."""

    def __init__(self, index: int, message: str = "") -> None:
        self.index = index
        super().__init__(message or f"text {index} satisfies neither LEFT nor RIGHT conditions")


class EmptySide(BoolRingError, ValueError):
    pass


class DisconnectedPairGraph(BoolRingError, ValueError):
    pass


class EmptyLeft(BoolRingError, ValueError):
    pass


class InvalidAssignment(BoolRingError, ValueError):
    pass


class TooManyTexts(BoolRingError, ValueError):
    pass


class ContradictoryMasks(BoolRingError, ValueError):
    pass


class NotAnEigenpair(BoolRingError, ValueError):
    pass


class MalformedCatalog(BoolRingError, ValueError):
    pass


class DuplicateStatement(MalformedCatalog):
    pass


class EmptyCatalog(MalformedCatalog):
    pass


class PatternError(BoolRingError, ValueError):
    def __init__(self, statement_id: int, pattern: str, reason: str) -> None:
        self.statement_id = statement_id
        self.pattern = pattern
        super().__init__(f"statement {statement_id}: invalid pattern {pattern!r}: {reason}")
