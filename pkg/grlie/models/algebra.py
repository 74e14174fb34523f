from fractions import Fraction
from typing import List, Optional

from pydantic import BaseModel, Field, field_validator, model_validator


class AlgebraDocument(BaseModel):
    name: str = Field(default="", description="Human-readable algebra name")
    basis1: List[str] = Field(..., description="Labels of the degree-1 basis")
    basis2: List[str] = Field(..., description="Labels of the degree-2 basis")
    cup: List[List[str]] = Field(
        ..., description="b2 x C(b1,2) cup matrix, entries as rational strings, columns over pairs i<j"
    )
    top_degree: Optional[int] = Field(default=None, description="Highest nonzero degree when known")

    @field_validator("cup")
    @classmethod
    def validate_entries(cls, v: List[List[str]]) -> List[List[str]]:
        for row in v:
            for entry in row:
                try:
                    Fraction(entry)
                except (ValueError, ZeroDivisionError) as exc:
                    raise ValueError(f"bad rational entry {entry!r}") from exc
        return v

    @model_validator(mode="after")
    def validate_shape(self) -> "AlgebraDocument":
        b1 = len(self.basis1)
        width = b1 * (b1 - 1) // 2
        if len(self.cup) != len(self.basis2):
            raise ValueError("cup matrix needs one row per degree-2 basis element")
        if any(len(row) != width for row in self.cup):
            raise ValueError(f"cup matrix rows must have length {width}")
        return self
