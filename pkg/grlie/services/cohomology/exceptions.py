"""
Custom exceptions for the cohomology service.
"""


class CohomologyError(Exception):
    """Base exception for cohomology algebra errors."""
    pass


class UnknownAlgebraError(CohomologyError):
    """Raised when an algebra or Poincaré family name is not recognized."""
    pass


class RelationShapeError(CohomologyError):
    """Raised when a relation vector does not have length C(b1, 2)."""
    pass


class TopDegreeError(CohomologyError):
    """Raised when an operation needs an algebra with top degree at most 2."""
    pass
