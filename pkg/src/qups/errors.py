"""Exception types shared across the package."""


class QupsError(Exception):
    """Base class for all package errors."""


class DomainError(QupsError, ValueError):
    """An input violates a mathematical precondition."""


class ResourceError(QupsError, RuntimeError):
    """A computation would exceed its enumeration or memory budget."""
