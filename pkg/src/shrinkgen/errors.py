"""Exception types shared across the toolkit."""


class UnsupportedSizeError(ValueError):
    """A size or budget cap was exceeded (factorization degree, key space)."""


class InterceptedDataError(Exception):
    """Base class for failures caused by the intercepted keystream bits."""


class InconsistentDataError(InterceptedDataError):
    """The known bits contradict every possible generator state."""


class InsufficientInputError(InterceptedDataError):
    """The known bits do not cover the cells an operation needs."""
