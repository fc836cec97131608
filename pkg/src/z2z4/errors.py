"""Error types shared across the package."""


class Z2Z4Error(Exception):
    """Base class for every error raised by this package."""


class DomainError(Z2Z4Error, ValueError):
    """Input is outside an operation's domain (bad parity, non-divisor, ...)."""


class CapacityError(Z2Z4Error, RuntimeError):
    """A requested enumeration exceeds the configured capacity bound."""


class PreconditionError(Z2Z4Error, RuntimeError):
    """A documented precondition of the operation does not hold."""


class InternalError(Z2Z4Error, RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""
