"""
Approximate mining: candidate reduction and stratified vertex sampling.

Candidate reduction scales the exponent of the suffix bound by ψ, so it only
ever removes candidates and never reports a pattern exact mining would not.
Sampling matches patterns on a seeded stratified subset of the vertices and
scales the matched counts back up by 1/ρ.
"""
import math
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from ..core.configs import settings
from ..core.exceptions import ConfigError
from ..core.logger import logger
from ..models.graph import PropertyGraph

Signature = Tuple[int, ...]


@dataclass(frozen=True)
class StratumTally:
    """Population, sample size and matched count of one stratum."""
    population: int
    sampled: int
    matched: int


@dataclass
class SamplePlan:
    """
    Stratified sample of the vertices that carry at least one frequent attribute.

    Attributes:
        strata: signature (sorted frequent attributes of a vertex) -> member vertex ids
        sampled: signature -> chosen vertex ids, ⌈ρ·|stratum|⌉ per stratum
        rate: sampling rate ρ
        seed: seed of the generator that drew the sample
    """
    strata: Dict[Signature, Tuple[int, ...]]
    sampled: Dict[Signature, Tuple[int, ...]]
    rate: float
    seed: int
    _stratum_of: Dict[int, Signature] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if not self._stratum_of:
            self._stratum_of = {v: sig for sig, members in self.sampled.items() for v in members}

    @property
    def vertices(self) -> FrozenSet[int]:
        return frozenset(self._stratum_of)

    @property
    def sample_size(self) -> int:
        return len(self._stratum_of)

    @property
    def population_size(self) -> int:
        return sum(len(members) for members in self.strata.values())

    def stratum_of(self, v: int) -> Optional[Signature]:
        return self._stratum_of.get(v)

    def tallies(self, matched: Iterable[int]) -> List[StratumTally]:
        """Per-stratum counts of `matched` (restricted to the sample), in signature order."""
        hits: Dict[Signature, int] = defaultdict(int)
        for v in matched:
            sig = self._stratum_of.get(v)
            if sig is not None:
                hits[sig] += 1
        return [
            StratumTally(len(self.strata[sig]), len(self.sampled[sig]), hits.get(sig, 0))
            for sig in sorted(self.strata)
        ]


@dataclass(frozen=True)
class FrequencyEstimate:
    """Point estimate of |V(p)| with its variance and confidence interval."""
    point: float
    variance: Optional[float]
    ci_low: float
    ci_high: float
    z: float

    @property
    def ci(self) -> Tuple[float, float]:
        return (self.ci_low, self.ci_high)


def build_sample(
    graph: PropertyGraph,
    frequent_attributes: Iterable[int],
    rate: float,
    seed: int,
) -> SamplePlan:
    """
    Group vertices by their full set of frequent attributes and draw
    ⌈ρ·|stratum|⌉ members from each stratum without replacement.

    Vertices with no frequent attribute belong to no stratum. Strata are
    visited in sorted signature order so a fixed seed gives a fixed plan.
    """
    if not 0 < rate <= 1:
        raise ConfigError(f"sampling rate must lie in (0, 1], got {rate}")
    frequent = frozenset(frequent_attributes)
    members: Dict[Signature, List[int]] = defaultdict(list)
    for v, attrs in enumerate(graph.attribute_sets):
        sig = tuple(a for a in attrs if a in frequent)
        if sig:
            members[sig].append(v)

    rng = np.random.default_rng(seed)
    strata: Dict[Signature, Tuple[int, ...]] = {}
    sampled: Dict[Signature, Tuple[int, ...]] = {}
    for sig in sorted(members):
        population = np.asarray(members[sig], dtype=np.int64)
        size = math.ceil(rate * len(population))
        drawn = rng.choice(population, size=size, replace=False) if size < len(population) else population
        strata[sig] = tuple(int(v) for v in population)
        sampled[sig] = tuple(sorted(int(v) for v in drawn))

    plan = SamplePlan(strata=strata, sampled=sampled, rate=rate, seed=seed)
    logger.info(
        f"Sample plan: {len(strata)} strata, {plan.sample_size} of {plan.population_size} "
        f"eligible vertices at rate {rate}"
    )
    return plan


def estimate_frequency(
    matched: int,
    rate: float,
    *,
    sample_size: Optional[int] = None,
    strata: Optional[Sequence[StratumTally]] = None,
    z: Optional[float] = None,
) -> FrequencyEstimate:
    """
    Estimate |V(p)| from the number of sampled vertices that match p.

    With per-stratum tallies the variance is the stratified sum
    Σ N_h²·(1 − n_h/N_h)·s_h²/n_h, where s_h² is the sample variance of the
    0/1 match indicators inside stratum h. Without tallies the whole sample
    is treated as one stratum of size sample_size/ρ. A sample of fewer than
    two vertices has no variance; its interval collapses onto the point.
    """
    if not 0 < rate <= 1:
        raise ConfigError(f"sampling rate must lie in (0, 1], got {rate}")
    z = settings.DEFAULT_Z if z is None else z
    point = matched / rate

    if strata is None:
        if sample_size is None or sample_size < 2:
            return FrequencyEstimate(point, None, point, point, z)
        strata = [StratumTally(population=round(sample_size / rate), sampled=sample_size, matched=matched)]
    elif sum(t.sampled for t in strata) < 2:
        return FrequencyEstimate(point, None, point, point, z)

    variance = 0.0
    for tally in strata:
        n, big_n = tally.sampled, tally.population
        if n < 2 or big_n == 0:
            continue
        p = tally.matched / n
        s2 = n * p * (1 - p) / (n - 1)
        variance += big_n * big_n * (1 - n / big_n) * s2 / n
    variance = max(variance, 0.0)
    half_width = z * math.sqrt(variance)
    return FrequencyEstimate(point, variance, max(point - half_width, 0.0), point + half_width, z)


def suffix_admissible(
    graph: PropertyGraph,
    attrs: Iterable[int],
    label: int,
    length: int,
    theta: float,
    psi: float = 1.0,
) -> bool:
    """
    Upper bound on the sources of a length-n path ending in (label, attrs):
    |E(A, l)|·d_m^(ψ(n−1)) > θ. ψ = 1 is the exact bound and stays in integers.
    """
    if length < 1:
        raise ValueError("suffix length must be at least 1")
    if not 0 < psi <= 1:
        raise ConfigError(f"candidate reduction factor must lie in (0, 1], got {psi}")
    edges = graph.count_target_edges(attrs, label)
    d_m = graph.max_in_degree()
    if psi == 1:
        return edges * d_m ** (length - 1) > theta
    return edges * float(d_m) ** (psi * (length - 1)) > theta


def apply_candidate_reduction(
    graph: PropertyGraph,
    targets: Mapping[int, Sequence[int]],
    psi: float,
    theta: float,
    length: int,
) -> Dict[int, Tuple[int, ...]]:
    """Keep the (label, attribute) suffixes that pass the ψ-scaled bound at this length."""
    reduced: Dict[int, Tuple[int, ...]] = {}
    dropped = 0
    for label in sorted(targets):
        kept = tuple(b for b in targets[label] if suffix_admissible(graph, (b,), label, length, theta, psi))
        dropped += len(targets[label]) - len(kept)
        if kept:
            reduced[label] = kept
    if dropped:
        logger.debug(f"Suffix bound at length {length} (psi={psi}) dropped {dropped} candidates")
    return reduced
