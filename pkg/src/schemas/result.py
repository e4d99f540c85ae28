from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field

from src.schemas.problem import ProblemFile


class TermSchema(BaseModel):
    """One decorated stratum class with its coefficient."""

    model_config = ConfigDict(extra="forbid")

    graph: str = Field(..., description="Canonical graph encoding")
    chi: List[int] = Field(..., description="Sector on each half-edge")
    psi: Dict[str, int] = Field(default_factory=dict, description="Nonzero psi exponents by half-edge")
    kappa: Dict[str, List[int]] = Field(default_factory=dict, description="kappa indices by vertex")
    coeff: Optional[str] = Field(None, description="Exact rational coefficient")
    rpoly: Optional[List[str]] = Field(None, description="Coefficients in r, lowest degree first")


class BranchSchema(BaseModel):
    model_config = ConfigDict(extra="forbid")

    normalization: int
    terms: List[TermSchema]
    rpoly: Optional[List[TermSchema]] = None


class ProvenanceSchema(BaseModel):
    """Kept apart from the mathematical payload."""

    model_config = ConfigDict(extra="forbid")

    version: str
    r_samples: Dict[str, List[int]]
    rbound_factor: int


class ResultFile(BaseModel):
    model_config = ConfigDict(extra="forbid")

    problem: ProblemFile
    branches: Dict[str, BranchSchema]
    agreement: Optional[bool] = None
    provenance: ProvenanceSchema
