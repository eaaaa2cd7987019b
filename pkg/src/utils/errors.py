"""
Exception hierarchy for the MaxwIST toolkit

Validation errors double as ValueError so callers that only know the
standard library still catch them; invariant failures double as
AssertionError because they signal a bug, never bad input.
"""

from typing import Optional


class MaxwistError(Exception):
    """Base class for every error raised by this package"""


# ---- Graph validation ----

class GraphValidationError(MaxwistError, ValueError):
    """Input does not describe a valid simple connected graph"""


class SelfLoop(GraphValidationError):
    pass


class DuplicateEdge(GraphValidationError):
    pass


class Disconnected(GraphValidationError):
    pass


class NegativeWeight(GraphValidationError):
    pass


class IndexOutOfRange(GraphValidationError):
    pass


class GraphFormatError(GraphValidationError):
    """Malformed graph or tree text"""


# ---- Graph class preconditions ----

class GraphClassError(MaxwistError, ValueError):
    """Graph is valid but outside the class an algorithm accepts"""


class NotCubic(GraphClassError):
    pass


class NotClawFree(GraphClassError):
    pass


class HasDegreeTwoVertex(GraphClassError):
    pass


class ResultHasDegreeTwo(GraphClassError):
    pass


# ---- Parameters ----

class InvalidEpsilon(MaxwistError, ValueError):
    pass


class InvalidN(MaxwistError, ValueError):
    pass


class UnknownFamily(MaxwistError, ValueError):
    pass


class ExactSolveTooLarge(MaxwistError):
    """Instance exceeds the exact oracle's vertex cap"""


# ---- Internal checks ----

class InvariantViolation(MaxwistError, AssertionError):
    """A proven property failed to hold; always an implementation bug"""

    def __init__(self, label: str, message: str, vertex: Optional[int] = None):
        self.label = label
        self.vertex = vertex
        suffix = f" (vertex {vertex})" if vertex is not None else ""
        super().__init__(f"[{label}] {message}{suffix}")


class InsufficientCharge(InvariantViolation):
    def __init__(self, message: str, vertex: Optional[int] = None):
        super().__init__("insufficient-charge", message, vertex)
