"""Exception types raised across the package."""
from __future__ import annotations


class ConfpartError(Exception):
    """Base class for all package errors."""


class ResourceCeilingError(ConfpartError):
    """An enumeration visited more tuples than the configured ceiling allows."""

    def __init__(self, visited: int, ceiling: int):
        super().__init__(f"enumeration exceeded ceiling: visited > {ceiling} tuples")
        self.visited = visited
        self.ceiling = ceiling


class InternalInconsistencyError(ConfpartError):
    """Two computations that must agree did not. Always an implementation bug."""


class RangeViolationError(ConfpartError, ValueError):
    """Arguments fall outside the validity range of a closed formula."""


class BracketError(ConfpartError):
    """No sign change could be captured while bracketing a positive root."""


class ToleranceError(ConfpartError):
    """A numeric identity failed at the requested tolerance."""

    def __init__(self, message: str, left: float, right: float):
        super().__init__(f"{message}: left={left!r} right={right!r}")
        self.left = left
        self.right = right


class UnknownGroupError(ConfpartError, KeyError):
    pass


class RankMismatchError(ConfpartError, ValueError):
    pass
