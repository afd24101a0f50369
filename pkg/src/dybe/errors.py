"""Exceptions shared across the computation modules."""


class NonGenericLambda(ValueError):
    """A rational dynamical parameter hits a pole of the requested formula."""

    def __init__(self, message="non-generic λ"):
        super().__init__(message)


class TruncationError(ValueError):
    """A truncated universal series is too short for the module it acts on."""
