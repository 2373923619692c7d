"""Exception types shared across the library."""


class BohradError(Exception):
    """Base class for all library-specific errors."""


class DomainError(BohradError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class InvalidTolerance(BohradError, ValueError):
    """A tolerance argument is non-positive."""


class ConvergenceError(BohradError, ArithmeticError):
    """A certified truncation could not reach the requested tolerance."""


class NoRootFound(BohradError, ArithmeticError):
    """No sign change was detected on the scan grid."""


class WitnessNotFound(BohradError, ArithmeticError):
    """No parameter in the scan satisfied the required strict inequality."""
