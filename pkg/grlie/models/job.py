from typing import Dict, Literal, Optional

from pydantic import BaseModel, Field, field_validator

from grlie.config import settings

COMMANDS = (
    "poincare",
    "lcs-ranks",
    "chen-ranks",
    "holonomy-chen",
    "resonance",
    "mildness",
    "egf-check",
    "chen-formula",
    "verify",
)


class JobConfig(BaseModel):
    command: Literal[COMMANDS] = Field(..., description="Subcommand name")
    family: Optional[str] = Field(default=None, description="Built-in family or group name")
    n: Optional[int] = Field(default=None, description="Family parameter")
    presentation: Optional[str] = Field(default=None, description="Path of a presentation JSON file")
    max_degree: Optional[int] = Field(default=None, description="Truncation degree D")
    hall_budget: Optional[int] = Field(default=None, description="Max free Lie dimension per degree")
    module_budget: Optional[int] = Field(default=None, description="Max ambient truncated module dimension")
    primes: Optional[int] = Field(default=None, description="Primes per certified rank")
    seed: int = Field(default_factory=lambda: settings.GRLIE_SEED, description="64-bit seed")
    format: Literal["table", "json", "csv"] = Field(default="table", description="Output format")
    depth: Optional[int] = Field(default=None, description="Resonance depth d")
    components: Dict[int, int] = Field(default_factory=dict, description="Chen ranks formula h_m by m")
    k_min: int = Field(default=3, description="First degree tested by chen-formula")
    quick: bool = Field(default=False, description="Reduced truncation degrees for verify")

    @field_validator("max_degree")
    @classmethod
    def validate_max_degree(cls, v: Optional[int]) -> Optional[int]:
        if v is not None and v < 0:
            raise ValueError("max degree must be >= 0")
        return v

    @field_validator("seed")
    @classmethod
    def validate_seed(cls, v: int) -> int:
        if not 0 <= v < 2 ** 64:
            raise ValueError("seed must be a 64-bit unsigned value")
        return v

    @field_validator("hall_budget", "module_budget", "primes")
    @classmethod
    def validate_positive(cls, v: Optional[int]) -> Optional[int]:
        if v is not None and v < 1:
            raise ValueError("value must be >= 1")
        return v

    def elimination_options(self) -> Dict[str, int]:
        """Keyword overrides for certified elimination."""
        options = {"seed": self.seed}
        if self.primes is not None:
            options["primes"] = self.primes
        return options
