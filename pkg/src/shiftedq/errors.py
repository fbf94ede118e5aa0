"""Exception types shared across the package."""


class ShiftedQError(Exception):
    """Base class for all package errors."""


class InvalidPartition(ShiftedQError, ValueError):
    pass


class InvalidShape(ShiftedQError, ValueError):
    """Raised when the inner partition does not fit inside the outer one."""


class NotRealizable(ShiftedQError):
    """A cell arrangement is not of the form D(alpha) minus D(beta)."""


class NotSubset(ShiftedQError, ValueError):
    pass


class ParseError(ShiftedQError, ValueError):
    pass


class InvalidTableau(ShiftedQError, ValueError):
    pass


class SizeMismatch(ShiftedQError, ValueError):
    pass


class OutOfRange(ShiftedQError, ValueError):
    pass


class EmptyShape(ShiftedQError, ValueError):
    pass


class PreconditionViolated(ShiftedQError, ValueError):
    pass


class WitnessError(ShiftedQError, AssertionError):
    """A witness construction produced a tableau that failed re-verification."""
