"""
Report models for the command-line interface.

This module defines the structures every subcommand emits, so that table,
JSON and CSV renderings are produced from a single typed value. Errors use
ErrorResponse, and the remaining models carry computed series, rank tables,
resonance data and verdicts.
"""

from typing import Dict, Generic, List, Optional, TypeVar

from pydantic import BaseModel, Field

# Generic type variable for response data
T = TypeVar('T')

class ErrorResponse(BaseModel):
    """
    Standard error format written to stderr.

    Attributes:
        detail: A human-readable error message
        code: Error code for programmatic handling (PARSE_ERROR, RESOURCE_BUDGET, ...)
    """
    detail: str = Field(..., description="Error message")
    code: Optional[str] = Field(None, description="Error code for programmatic handling")

class SuccessResponse(BaseModel, Generic[T]):
    """
    Envelope for JSON output of a successful command.

    Attributes:
        data: The report
        message: Optional short summary
    """
    data: T = Field(..., description="Report data")
    message: Optional[str] = Field(None, description="Optional summary message")

class SeriesReport(BaseModel):
    """
    Integer coefficients indexed from ``start``.

    Used for Poincaré polynomials (start 0), Chen ranks (start 2) and graded
    dimensions (start 1).
    """
    label: str = Field(..., description="Group, algebra or family name")
    variable: str = Field("c", description="Column name used in tables and CSV")
    start: int = Field(0, description="Index of the first coefficient")
    coefficients: List[int] = Field(default_factory=list)
    rendered: Optional[str] = Field(None, description="Closed rendering, e.g. '1 + 6t + 6t^2'")

    def pairs(self) -> List[List[int]]:
        return [[k, c] for k, c in enumerate(self.coefficients, start=self.start)]

class RankTableReport(BaseModel):
    """LCS ranks phi_1..phi_K from several independent methods."""
    label: str
    methods: Dict[str, List[int]] = Field(..., description="Method name to phi_1..phi_K")

    @property
    def agree(self) -> bool:
        values = list(self.methods.values())
        return all(v == values[0] for v in values[1:])

class ResonanceReport(BaseModel):
    """Resonance ideal, its dimension and the published components that verify."""
    label: str = ""
    depth: int
    ideal_generators: List[str] = Field(default_factory=list)
    dimension: Optional[int] = None
    verified_components: List[str] = Field(default_factory=list)

class VerdictReport(BaseModel):
    """Outcome of a yes/no test with the numbers behind it."""
    label: str
    holds: bool
    description: str
    details: Dict[str, List[int]] = Field(default_factory=dict)

class VerifyItem(BaseModel):
    name: str
    passed: bool
    seconds: float
    detail: str = ""

class VerifyReport(BaseModel):
    """One line per acceptance item."""
    items: List[VerifyItem] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(item.passed for item in self.items)
