import enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from ..core.configs import settings
from ..core.exceptions import ConfigError
from ..utils.common import parse_min_support, relative_threshold


class ReachabilityBound(str, enum.Enum):
    BOUNDED = "bounded"
    UNBOUNDED = "unbounded"


class MinerConfig(BaseModel):
    """Run-level mining options"""
    model_config = ConfigDict(frozen=True)

    min_support: float = Field(..., ge=0, description="Minimum support θ, absolute count or relative fraction")
    relative_support: bool = Field(False, description="Interpret min_support as a fraction of |V|")
    max_length: int = Field(..., ge=1, description="Maximum path length k")
    candidate_reduction: Optional[float] = Field(None, gt=0, le=1, description="Candidate reduction factor ψ")
    sampling_rate: Optional[float] = Field(None, gt=0, le=1, description="Stratified sampling rate ρ")
    threads: int = Field(default_factory=lambda: settings.DEFAULT_THREADS, ge=1, description="Worker threads N")
    rng_seed: int = Field(default_factory=lambda: settings.DEFAULT_SEED, description="Seed for the sampling generator")
    reachability_bound: ReachabilityBound = Field(ReachabilityBound.BOUNDED, description="Bound reachability BFS by k or not")
    z: float = Field(default_factory=lambda: settings.DEFAULT_Z, gt=0, description="z-value for sampling intervals")
    baseline: bool = Field(False, description="Disable suffix pruning and enhanced candidate generation")

    @model_validator(mode="after")
    def check_combination(self) -> "MinerConfig":
        if self.relative_support and not 0 < self.min_support <= 1:
            raise ValueError("relative min_support must lie in (0, 1]")
        if self.baseline and self.psi < 1:
            raise ValueError("candidate reduction scales suffix pruning, which baseline mode disables")
        return self

    @property
    def psi(self) -> float:
        return 1.0 if self.candidate_reduction is None else self.candidate_reduction

    @property
    def rho(self) -> float:
        return 1.0 if self.sampling_rate is None else self.sampling_rate

    @property
    def sampling_active(self) -> bool:
        return self.rho < 1

    @property
    def is_exact(self) -> bool:
        return self.psi == 1 and self.rho == 1

    @property
    def reach_depth(self) -> Optional[int]:
        return self.max_length if self.reachability_bound is ReachabilityBound.BOUNDED else None

    def threshold(self, num_vertices: int) -> float:
        """Absolute θ; relative supports convert without float error."""
        if self.relative_support:
            return relative_threshold(self.min_support, num_vertices)
        return float(self.min_support)

    @classmethod
    def build(cls, min_support: str | float, max_length: int, **options) -> "MinerConfig":
        """Validate options, accepting `X` or `X%` thresholds; raises ConfigError."""
        try:
            if isinstance(min_support, str):
                value, relative = parse_min_support(min_support)
                options.setdefault("relative_support", relative)
            else:
                value = min_support
            return cls(min_support=value, max_length=max_length, **options)
        except ValidationError as e:
            details = "; ".join(
                f"{'.'.join(str(p) for p in err['loc']) or 'config'}: {err['msg']}" for err in e.errors()
            )
            raise ConfigError(f"Invalid mining configuration: {details}") from e
        except ValueError as e:
            raise ConfigError(f"Invalid mining configuration: {e}") from e
