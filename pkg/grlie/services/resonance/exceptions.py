"""
Custom exceptions for the resonance service.
"""


class ResonanceError(Exception):
    """Base exception for resonance errors."""
    pass


class DepthError(ResonanceError):
    """Raised when a resonance depth is outside 1..b1."""
    pass
