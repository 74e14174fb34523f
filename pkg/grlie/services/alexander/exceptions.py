"""
Custom exceptions for the Alexander invariant service.
"""

from grlie.services.exceptions import BudgetExceededError


class AlexanderError(Exception):
    """Base exception for Alexander invariant errors."""
    pass


class NotACycleError(AlexanderError):
    """Raised when a vector to be lifted is not in the kernel of the Koszul differential."""
    pass


class ProvenanceError(AlexanderError):
    """Raised when a module presentation has the wrong provenance for an operation."""
    pass


class NonHomogeneousColumnError(AlexanderError):
    """Raised when a graded computation meets a non-homogeneous relation column."""
    pass


class ModuleBudgetError(AlexanderError, BudgetExceededError):
    """Raised when a truncated module exceeds the configured ambient dimension."""
    pass
