"""
Custom exceptions for the numeric core.
"""


class NumericError(Exception):
    """Base exception for numeric-core errors."""
    pass


class NotExpandableError(NumericError):
    """Raised when a rational function has no power series at t=0."""
    pass


class ExpUndefinedError(NumericError):
    """Raised when exponentiating a truncated series with a constant term."""
    pass


class MinorSizeError(NumericError):
    """Raised when a requested minor size does not fit the matrix."""
    pass


class DomainMismatchError(NumericError):
    """Raised when an operation receives a matrix of the wrong entry domain."""
    pass


class PrimeDisagreementError(NumericError):
    """Raised when eliminations over different primes give different pivots."""
    pass
