"""Shared exception types."""


class AcyclickError(Exception):
    """Base class for all library errors."""


class GraphError(AcyclickError):
    """Invalid graph structure, reference, or precondition."""


class GraphParseError(GraphError):
    """Malformed graph file text."""


class OrientationError(AcyclickError):
    """Invalid orientation or orientation operation."""


class ClickError(OrientationError):
    """Illegal click. ``position`` is the 0-based offending index when the
    error arose while applying a click sequence."""

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


class CapExceededError(AcyclickError):
    """An enumeration-backed operation was asked to exceed its edge cap."""
