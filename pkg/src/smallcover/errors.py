"""Exception hierarchy shared by the engine and the CLI."""


class SmallCoverError(Exception):
    """Base class for all package errors."""


class InvalidArgumentError(SmallCoverError, ValueError):
    """Raised for malformed inputs (bad m, inconsistent partial colorings, ...)."""


class ResourceLimitError(SmallCoverError):
    """Raised when a brute-force computation would exceed its configured bound."""

    def __init__(self, message: str, bound: int | None = None):
        super().__init__(message)
        self.bound = bound


class ConsistencyError(SmallCoverError):
    """An exact identity that must hold did not (non-integral Burnside average,
    disagreeing cross-check). Always indicates a bug."""
