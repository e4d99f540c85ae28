from typing import Literal, Optional, List

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.core.errors import ProblemFileError
from src.exact.rational import parse_rational


class TargetSchema(BaseModel):
    """
    The target B Z_m together with the line bundle rho.

    m is the order of the cyclic group and s picks the character
    exp(2 pi i s / m). s must already be reduced mod m.
    """

    model_config = ConfigDict(extra="forbid")

    # Order of the cyclic group, m = 1 is the trivial target
    m: int = Field(..., ge=1, description="Order of the cyclic group Z_m")

    # Character of the line bundle, reduced mod m
    s: int = Field(..., ge=0, description="Character index s with 0 <= s < m")

    @model_validator(mode="after")
    def check_reduced(self) -> "TargetSchema":
        if self.s >= self.m:
            raise ValueError(f"s={self.s} must be smaller than m={self.m}")
        return self


class AbsoluteMarking(BaseModel):
    """
    A marking with no contact condition.

    Its sector has to act trivially on rho (age 0); this is checked when the
    problem is validated, not here, so the failure shows up in the report.
    """

    model_config = ConfigDict(extra="forbid")

    sector: int = Field(..., ge=0, description="Twisted sector g in Z_m")


class RelativeMarking(BaseModel):
    """
    A marking with a positive contact order against zero or infinity.

    The contact order is written as an integer or "p/q" string so that no
    float ever touches it.
    """

    model_config = ConfigDict(extra="forbid")

    sector: int = Field(..., ge=0, description="Twisted sector g in Z_m")

    # Stored as text; parse_rational turns it into a Fraction
    contact: str = Field(..., description="Contact order as an integer or 'p/q'")

    @field_validator("contact", mode="before")
    @classmethod
    def check_contact(cls, value):
        text = str(value)
        try:
            parse_rational(text)
        except ProblemFileError as exc:
            raise ValueError(str(exc)) from exc
        return text


class ProblemOptions(BaseModel):
    """Optional knobs for a run."""

    model_config = ConfigDict(extra="forbid")

    branch: Literal["zero", "infinity", "both"] = Field(
        "both", description="Which branch to compute"
    )
    r_samples: Optional[List[int]] = Field(
        None, description="Explicit r values; defaults to values above the working bound"
    )
    degree: Optional[int] = Field(
        None, ge=0, description="Degree for the poly command; defaults to the genus"
    )

    @field_validator("r_samples")
    @classmethod
    def check_samples(cls, value):
        if value is not None and len(set(value)) != len(value):
            raise ValueError("r_samples must be distinct")
        if value is not None and any(r < 1 for r in value):
            raise ValueError("r_samples must be positive")
        return value


class ProblemFile(BaseModel):
    """
    Schema of a problem file.

    Unknown keys anywhere in the file are rejected.
    """

    model_config = ConfigDict(extra="forbid")

    target: TargetSchema
    genus: int = Field(..., ge=0, description="Genus g of the source curves")
    absolute: List[AbsoluteMarking] = Field(default_factory=list)
    relative_zero: List[RelativeMarking] = Field(default_factory=list)
    relative_infinity: List[RelativeMarking] = Field(default_factory=list)
    options: ProblemOptions = Field(default_factory=ProblemOptions)
