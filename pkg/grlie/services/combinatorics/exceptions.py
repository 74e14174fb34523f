"""
Custom exceptions for the combinatorics service.
"""


class CombinatoricsError(Exception):
    """Base exception for combinatorics errors."""
    pass


class InvalidArgumentError(CombinatoricsError):
    """Raised when an argument is outside the domain of a combinatorial function."""
    pass


class NotPBWSeriesError(CombinatoricsError):
    """Raised when a series is not a product of (1 - t^k)^(-phi_k) with phi_k >= 0."""
    pass
