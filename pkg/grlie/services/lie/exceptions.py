"""
Custom exceptions for the Lie algebra service.
"""

from grlie.services.exceptions import BudgetExceededError


class LieError(Exception):
    """Base exception for Lie algebra errors."""
    pass


class ResourceBudgetError(LieError, BudgetExceededError):
    """Raised when a free Lie algebra layer exceeds the Hall-basis budget."""
    pass


class WeightOneRelatorError(LieError):
    """Raised when a relator is not a commutator (nonzero exponent sum)."""
    pass


class NonHomogeneousRelatorError(LieError):
    """Raised when a Lie relator mixes degrees or is not a Lie element."""
    pass
