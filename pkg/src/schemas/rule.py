from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..utils.common import round_real


# Rule Schemas
class RuleRecord(BaseModel):
    """One mined rule as written to a JSON-lines rule file"""
    model_config = ConfigDict(frozen=True, extra="forbid")

    antecedent_text: str = Field(..., min_length=2, description="Canonical text of p_X")
    consequent_text: str = Field(..., min_length=2, description="Canonical text of p_Y")
    asupp: int = Field(..., ge=0, description="Absolute support |V(p_X) ∩ V(p_Y)|")
    rsupp: float = Field(..., ge=0, description="Relative support asupp/|V|")
    conf: float = Field(..., ge=0, le=1, description="Confidence asupp/|V(p_X)|")
    lift: float = Field(..., ge=0, description="Lift asupp·|V|/(|V(p_X)|·|V(p_Y)|)")
    estimated: bool = Field(False, description="Metrics come from a vertex sample")
    ci: Optional[Tuple[float, float]] = Field(None, description="Confidence interval of the support estimate")

    @field_validator("rsupp", "conf", "lift")
    @classmethod
    def round_metric(cls, v: float) -> float:
        return round_real(v)

    @field_validator("ci")
    @classmethod
    def round_interval(cls, v: Optional[Tuple[float, float]]) -> Optional[Tuple[float, float]]:
        if v is None:
            return v
        return (round_real(v[0]), round_real(v[1]))

    @model_validator(mode="after")
    def check_interval(self) -> "RuleRecord":
        if self.ci is not None and self.ci[0] > self.ci[1]:
            raise ValueError("ci lower bound exceeds upper bound")
        return self
