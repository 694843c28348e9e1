"""Exception types raised across the package."""


class GraphFormatError(ValueError):
    """Malformed graph file text. ``line`` is 1-based, or None when not tied to a line."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class GraphError(ValueError):
    """A graph violates the admissibility rules or an operation's precondition."""


class DisconnectedGraphError(GraphError):
    pass


class ReductionError(ValueError):
    """The congruence reduction did not reach the expected normal form."""


class NotSymmetricError(ValueError):
    pass


class SingularBlockError(ValueError):
    pass


class ConvergenceError(RuntimeError):
    pass


class LiftTooLargeError(ValueError):
    pass


class TheoremViolation(RuntimeError):
    """Exact inertia disagrees with a proven statement: either the theorem or this code is wrong."""
