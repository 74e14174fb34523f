"""
Custom exceptions for the groups service.
"""


class GroupError(Exception):
    """Base exception for group presentation errors."""
    pass


class UnknownFamilyError(GroupError):
    """Raised when a family name is not one of the built-in families."""
    pass


class InvalidWordError(GroupError):
    """Raised when a word has a bad letter or a relator reduces to the identity."""
    pass


class NotCommutatorRelatorsError(GroupError):
    """Raised when an operation needs relators with zero exponent sums."""
    pass


class PresentationParseError(GroupError):
    """Raised when a presentation document cannot be parsed."""
    pass
