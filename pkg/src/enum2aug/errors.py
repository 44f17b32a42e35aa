"""Exception types shared across the package."""
from __future__ import annotations


class Enum2AugError(Exception):
    """Base class for all library errors."""


class NotMonocyclic(Enum2AugError):
    pass


class NotMonoBlock2Aug(Enum2AugError):
    pass


class MultiplicityOverflow(Enum2AugError):
    pass


class SelfLoop(Enum2AugError):
    pass


class NotAdjacent(Enum2AugError):
    pass


class NotAJunction(Enum2AugError):
    pass


class InvalidPair(Enum2AugError):
    pass


class TypeMismatch(Enum2AugError):
    pass


class TooLarge(Enum2AugError):
    pass


class ParseError(Enum2AugError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DuplicateEdge(ParseError):
    pass


class IndexOutOfRange(ParseError):
    pass


class BoundsViolation(Enum2AugError):
    pass
