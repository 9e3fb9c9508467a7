"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class SplitFuseError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(SplitFuseError, ValueError):
    """An argument lies outside the domain of the operation (bad vertex id, bad sizes, ...)."""


class PreconditionError(SplitFuseError, ValueError):
    """An operation was applied where its structural precondition does not hold."""


class ResourceLimitError(SplitFuseError, RuntimeError):
    """A search or sampling loop exceeded its configured budget.

    ``partial`` carries whatever was computed before the limit was hit.
    """

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial
