"""Exception and warning types shared across the package."""


class ImcharError(Exception):
    """Base class for every error raised by this package."""


class DomainMismatchError(ImcharError, ValueError):
    """Operands live on different group domains."""


class ParameterError(ImcharError, ValueError):
    """A distribution or operation parameter is out of range or unknown."""


class PreconditionError(ImcharError, ValueError):
    """A documented precondition of an operation does not hold.

    The message states which quantity violated the precondition and by
    how much, so callers can tell a modelling mistake from a tolerance
    issue.
    """


class FormatError(ImcharError, ValueError):
    """Malformed measure JSON. The message names the failing path."""


class UnsupportedDomainError(ImcharError, ValueError):
    """The requested operation is not defined on this group domain."""


class IntegrationError(ImcharError, ArithmeticError):
    """A density integral could not be brought within tolerance."""


class InternalCheckError(ImcharError, RuntimeError):
    """A redundant internal cross-check failed.

    This signals a bug in the package itself, never bad user input.
    """


class QuadratureWarning(UserWarning):
    """Raised when a quadrature error estimate exceeds the target."""
