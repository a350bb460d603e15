"""Exception hierarchy.

Every error raised on bad input derives from :class:`IIPMError`, which is a
``ValueError`` so callers that only care about "invalid input" can catch that.
"""

from __future__ import annotations


class IIPMError(ValueError):
    """Base class for all library errors.

    ``line`` is set when the error was raised while parsing a document.
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class RingMismatch(IIPMError):
    pass


class ReducibleModulus(IIPMError):
    pass


class InvalidInvolution(IIPMError):
    pass


class InvalidRingSpec(IIPMError):
    pass


class NotAUnit(IIPMError, ZeroDivisionError):
    pass


class ElementOutOfRange(IIPMError):
    """A coefficient mask has bits at or above the ring degree."""


class GramNotHermitian(IIPMError):
    pass


class GramSingular(IIPMError):
    pass


class SpaceMismatch(IIPMError):
    pass


class ShapeError(IIPMError):
    pass


class NotSelfAdjoint(IIPMError):
    pass


class LateralityMismatch(IIPMError):
    pass


class SearchTooLarge(IIPMError):
    """Enumeration or search would exceed its configured budget."""


class ParseError(IIPMError):
    """Syntax error in a document."""
