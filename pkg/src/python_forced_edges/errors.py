"""
Exception hierarchy for forced/forbidden edge analysis.

Every library error derives from ValueError so callers (and the CLI) can
catch the whole family at once, while still distinguishing the kinds.
"""
from __future__ import annotations


class ForcedEdgesError(ValueError):
    """Base class for all library errors."""


class LengthMismatchError(ForcedEdgesError):
    pass


class IndexOutOfRangeError(ForcedEdgesError):
    pass


class InsufficientEntriesError(ForcedEdgesError):
    pass


class NotGraphicError(ForcedEdgesError):
    pass


class MinDegreeZeroError(ForcedEdgesError):
    pass


class NotComparableError(ForcedEdgesError):
    pass


class PreconditionViolatedError(ForcedEdgesError):
    pass


class InvalidSwitchError(ForcedEdgesError):
    pass


class EmptySubsetError(ForcedEdgesError):
    pass


class TooLargeError(ForcedEdgesError):
    pass


class InvalidEdgeError(ForcedEdgesError):
    """Self-loop or out-of-order endpoints."""


class SequenceParseError(ForcedEdgesError):
    """
    Raised when a sequence string contains a token that is not an integer.

    Attributes:
        position: 1-based index of the offending token.
        token: The token text.
    """

    def __init__(self, position: int, token: str, text: str = ""):
        self.position = position
        self.token = token
        self.text = text
        super().__init__(f"invalid integer '{token}' at position {position}")


class SamplerDeadEndError(RuntimeError):
    """The sequential construction found no admissible neighbor."""
