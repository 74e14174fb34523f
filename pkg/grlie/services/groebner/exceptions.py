"""
Custom exceptions for the Gröbner service.
"""


class GroebnerError(Exception):
    """Base exception for Gröbner basis errors."""
    pass


class RingMismatchError(GroebnerError):
    """Raised when a polynomial does not live in the ambient ring of an ideal."""
    pass
