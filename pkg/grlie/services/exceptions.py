"""
Exceptions shared across engine services.
"""


class BudgetExceededError(Exception):
    """Raised when a computation would exceed a configured size budget."""
    pass
