from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field


class MiningSummary(BaseModel):
    """Per-phase pattern counts and runtimes of one mining run"""
    mode: str = Field(..., description="exact, approximate or baseline")
    theta: float = Field(..., description="Absolute minimum support the run used")
    max_length: int
    threads: int
    attribute_sets: int = Field(0, description="Frequent attribute sets")
    simple_paths: int = Field(0, description="Frequent simple path patterns of length 1..k")
    reachability_paths: int = Field(0, description="Frequent reachability path patterns")
    rules: int = Field(0, description="Frequent rules")
    phase_seconds: Dict[str, float] = Field(default_factory=dict, description="Wall-clock seconds per mining phase, in run order")

    def render(self) -> str:
        lines = [
            f"mode                {self.mode}",
            f"theta               {self.theta:g}",
            f"max length          {self.max_length}",
            f"threads             {self.threads}",
            f"attribute sets      {self.attribute_sets}",
            f"simple paths        {self.simple_paths}",
            f"reachability paths  {self.reachability_paths}",
            f"rules               {self.rules}",
        ]
        if self.phase_seconds:
            for phase, seconds in self.phase_seconds.items():
                label = "time " + phase.replace("_", " ")
                lines.append(f"{label:<23} {seconds:.3f}s")
            lines.append(f"{'time total':<23} {sum(self.phase_seconds.values()):.3f}s")
        return "\n".join(lines)


class GraphSummary(BaseModel):
    """Graph statistics printed by `stats`"""
    vertices: int
    edges: int
    labels: int
    attributes: int
    avg_attributes_per_vertex: float
    max_in_degree: int
    implicit_vertices: int = 0
    thread_loads: Optional[List[int]] = Field(None, description="Estimated cost per thread")
    thread_sizes: Optional[List[int]] = Field(None, description="Vertices per thread")
    eliminated_vertices: Optional[int] = Field(None, description="Zero-cost vertices dropped from matching")


class AccuracyReport(BaseModel):
    """Comparison of a candidate rule set against a reference rule set"""
    reference_size: int
    candidate_size: int
    matched: int
    precision: float = Field(..., ge=0, le=1)
    recall: float = Field(..., ge=0, le=1)
    missing: List[Tuple[str, str]] = Field(default_factory=list, description="Reference rules absent from the candidate")
    extra: List[Tuple[str, str]] = Field(default_factory=list, description="Candidate rules absent from the reference")
    metric_mismatches: List[Tuple[str, str]] = Field(default_factory=list, description="Shared rules whose metrics differ")

    @property
    def identical(self) -> bool:
        return not (self.missing or self.extra or self.metric_mismatches)

    def render(self) -> str:
        lines = [
            f"reference rules  {self.reference_size}",
            f"candidate rules  {self.candidate_size}",
            f"precision        {self.precision:.6f}",
            f"recall           {self.recall:.6f}",
        ]
        for a, c in self.missing:
            lines.append(f"- {a} => {c}")
        for a, c in self.extra:
            lines.append(f"+ {a} => {c}")
        for a, c in self.metric_mismatches:
            lines.append(f"~ {a} => {c}")
        return "\n".join(lines)