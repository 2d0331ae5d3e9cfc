class InvalidArgument(ValueError):
    """Raised when an input violates an operation's preconditions."""


class SolverFailure(RuntimeError):
    """Raised when the boundary-value iteration does not converge.

    The ``diagnostics`` dict carries the iteration history so callers can
    see how far the solve got.
    """

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


class PersistenceError(OSError):
    """Raised when campaign output cannot be written.

    ``records`` holds everything computed before the failure and
    ``manifest_path`` points at the partial-results manifest, if one could
    be written at all.
    """

    def __init__(self, message, records=None, manifest_path=None):
        super().__init__(message)
        self.records = records or []
        self.manifest_path = manifest_path
