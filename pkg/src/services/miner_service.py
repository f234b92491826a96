"""
Path association rule mining.

The pipeline runs in four phases: frequent attribute sets, frequent simple
path patterns, frequent reachability patterns, and frequent rules over the
patterns found. Every candidate wave is evaluated partition by partition and
merged before any frequency decision is taken.
"""
import math
import time
from collections import defaultdict, deque
from contextlib import contextmanager
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from ..core.logger import logger
from ..models.graph import PropertyGraph
from ..models.pattern import AttributeSet, PathPattern, RuleCandidate, format_pattern
from ..schemas.miner_config import MinerConfig, ReachabilityBound
from .approx_service import SamplePlan, apply_candidate_reduction, build_sample, estimate_frequency, suffix_admissible
from .matcher_service import MatchTable, PathMatcher, ReachSet
from .scheduler_service import Partition, WaveExecutor, plan_partition

PHASES = ("attribute_sets", "frontier", "simple_paths", "reachability_paths", "rules")

__all__ = [
    "Frontier",
    "FrequentSets",
    "Rule",
    "MiningResult",
    "PathRuleMiner",
    "mine",
    "evaluate_rule",
    "compute_metrics",
    "PHASES",
    "estimated_support",
    "suffix_admissible",
    "sort_rules",
]


@dataclass(frozen=True)
class Frontier:
    """
    Labels and target attributes that can still take part in a frequent pattern.

    Attributes:
        frequent_labels: labels allowed on the first hop and in reachability patterns
        targets: per label the single attributes an edge with that label may lead into
    """
    frequent_labels: Tuple[int, ...]
    targets: Dict[int, Tuple[int, ...]]

    @property
    def extension_labels(self) -> Tuple[int, ...]:
        """Labels usable on hops after the first."""
        return tuple(sorted(self.targets))

    def admits(self, label: int, attr: int) -> bool:
        return attr in self.targets.get(label, ())


@dataclass
class FrequentSets:
    """
    Output of the pattern phases.

    Attributes:
        levels: per length 0..k, a map from frequent simple pattern to its MatchTable
        reachability: frequent reachability patterns with their MatchTables
        support: |V(p)| (or its estimate) for every stored pattern
        frontier: labels and targets the run was pruned with
        links: per pattern, the frequent patterns one vertical or horizontal step below it
    """
    levels: List[Dict[PathPattern, MatchTable]] = field(default_factory=list)
    reachability: Dict[PathPattern, MatchTable] = field(default_factory=dict)
    support: Dict[PathPattern, int] = field(default_factory=dict)
    frontier: Frontier = field(default_factory=lambda: Frontier((), {}))
    links: Dict[PathPattern, List[PathPattern]] = field(default_factory=dict)

    def simple_patterns(self, min_length: int = 1) -> List[PathPattern]:
        return [p for level in self.levels[min_length:] for p in level]

    def rule_patterns(self) -> List[PathPattern]:
        """Patterns rules are drawn from: simple ones of length ≥ 1 and reachability ones."""
        return self.simple_patterns(1) + list(self.reachability)

    def table(self, pattern: PathPattern) -> Optional[MatchTable]:
        if pattern.is_reachability:
            return self.reachability.get(pattern)
        if pattern.length < len(self.levels):
            return self.levels[pattern.length].get(pattern)
        return None

    def sources(self, pattern: PathPattern) -> FrozenSet[int]:
        table = self.table(pattern)
        return table.sources if table is not None else frozenset()

    def counts(self) -> Dict[str, int]:
        return {
            "attribute_sets": len(self.levels[0]) if self.levels else 0,
            "simple_paths": len(self.simple_patterns(1)),
            "reachability_paths": len(self.reachability),
        }


@dataclass(frozen=True)
class Rule:
    antecedent: PathPattern
    consequent: PathPattern
    asupp: int
    rsupp: float
    conf: float
    lift: float
    estimated: bool = False
    ci: Optional[Tuple[float, float]] = None


@dataclass
class MiningResult:
    frequent: FrequentSets
    rules: List[Rule]
    theta: float
    partition: Optional[Partition] = None
    timings: Dict[str, float] = field(default_factory=dict)

    def counts(self) -> Dict[str, int]:
        return {**self.frequent.counts(), "rules": len(self.rules)}


def estimated_support(matched: int, rate: float = 1.0) -> int:
    """Matched sample vertices scaled by 1/ρ and rounded half up; the count itself at ρ = 1."""
    if rate == 1:
        return matched
    return math.floor(matched / rate + 0.5)


def compute_metrics(
    sources_x: FrozenSet[int],
    sources_y: FrozenSet[int],
    num_vertices: int,
    rate: float = 1.0,
) -> Tuple[int, float, float, float]:
    """
    (asupp, rsupp, conf, lift) of p_X => p_Y from the two matched-vertex sets.

    With a sampling rate below 1 the sets come from the sample. asupp is
    then the estimated_support of the shared sources, the value the miner
    compares with θ, and rsupp is asupp/|V|. Conf and lift are ratios of
    the unrounded estimates. Empty sides give conf and lift of 0.
    """
    inter = len(sources_x & sources_y)
    nx, ny = len(sources_x), len(sources_y)
    asupp = estimated_support(inter, rate)
    rsupp = asupp / num_vertices if num_vertices else 0.0
    conf = inter / nx if nx else 0.0
    lift = (inter * num_vertices) / (nx * ny) * rate if nx and ny else 0.0
    return asupp, float(rsupp), float(conf), float(lift)


def rule_sort_key(rule: Rule, graph: PropertyGraph) -> tuple:
    """Canonical output order: longer side first by length, then the two pattern texts."""
    return (
        max(rule.antecedent.length, rule.consequent.length),
        format_pattern(rule.antecedent, graph.label_dict, graph.attribute_dict),
        format_pattern(rule.consequent, graph.label_dict, graph.attribute_dict),
    )


def sort_rules(rules: Iterable[Rule], graph: PropertyGraph) -> List[Rule]:
    return sorted(rules, key=lambda r: rule_sort_key(r, graph))


# A pending horizontal join: (first parent, second parent, differing position)
Join = Tuple[PathPattern, PathPattern, int]


class PathRuleMiner:
    """Mines one graph under one configuration."""

    def __init__(self, graph: PropertyGraph, config: MinerConfig):
        self.graph = graph
        self.config = config
        self.theta = config.threshold(graph.num_vertices)
        self.matcher = PathMatcher(graph)
        self.depth = config.reach_depth
        self.plan: Optional[SamplePlan] = None
        self.partition: Optional[Partition] = None
        self.executor: Optional[WaveExecutor] = None
        self.working: FrozenSet[int] = frozenset()
        self._first_hop: Dict[Tuple[AttributeSet, int], int] = {}
        self.timings: Dict[str, float] = {}

    # -------------------------------------------------------------- frequency

    @property
    def rate(self) -> float:
        return self.config.rho if self.config.sampling_active else 1.0

    def _is_frequent(self, matched: int) -> bool:
        return estimated_support(matched, self.rate) > self.theta

    def _support(self, matched: int) -> int:
        return estimated_support(matched, self.rate)

    @contextmanager
    def _phase(self, name: str) -> Iterator[None]:
        """Add the wall-clock time of the block to timings[name]."""
        start = time.perf_counter()
        try:
            yield
        finally:
            elapsed = time.perf_counter() - start
            self.timings[name] = self.timings.get(name, 0.0) + elapsed
            logger.debug(f"Phase {name} took {elapsed:.3f}s")

    # ------------------------------------------------------------------ entry

    def mine(self) -> MiningResult:
        graph, config = self.graph, self.config
        logger.info(
            f"Mining {graph!r} with theta={self.theta}, k={config.max_length}, psi={config.psi}, "
            f"rho={config.rho}, threads={config.threads}, baseline={config.baseline}"
        )
        if graph.num_vertices == 0:
            logger.warning("Graph has no vertices; nothing to mine")
            return MiningResult(FrequentSets(levels=[{} for _ in range(config.max_length + 1)]), [], self.theta)
        if self.theta >= graph.num_vertices:
            logger.warning(f"Minimum support {self.theta} is not below |V|={graph.num_vertices}; no pattern can be frequent")
            return MiningResult(FrequentSets(levels=[{} for _ in range(config.max_length + 1)]), [], self.theta)

        attribute_sets, frontier, self.partition = self._prepare()
        singletons = sorted(a[0] for a in attribute_sets if len(a) == 1)
        self.executor = WaveExecutor(self.partition)
        self.working = self.partition.vertices
        if config.sampling_active:
            with self._phase("frontier"):
                self.plan = build_sample(graph, singletons, config.rho, config.rng_seed)
            self.working = self.working & self.plan.vertices
            logger.info(f"Sampling restricts matching to {len(self.working)} vertices")

        frequent = FrequentSets(frontier=frontier)
        level0: Dict[PathPattern, MatchTable] = {}
        for attrs in sorted(attribute_sets):
            pattern = PathPattern.simple([attrs])
            tids = attribute_sets[attrs]
            level0[pattern] = MatchTable(pattern, {v: frozenset((v,)) for v in tids & self.working})
            frequent.support[pattern] = len(tids)
        frequent.levels.append(level0)

        with self._phase("simple_paths"):
            self.discover_simple(frequent)
        with self._phase("reachability_paths"):
            self.discover_reachability(frequent)
        with self._phase("rules"):
            frequent.links = self.build_links(frequent)
            rules = sort_rules(self.discover_rules(frequent), graph)

        result = MiningResult(frequent, rules, self.theta, self.partition, dict(self.timings))
        logger.info(f"Mining finished: {result.counts()}")
        return result

    def _prepare(self) -> Tuple[Dict[AttributeSet, FrozenSet[int]], Frontier, Partition]:
        with self._phase("attribute_sets"):
            attribute_sets = self.discover_attribute_sets()
        singletons = sorted(a[0] for a in attribute_sets if len(a) == 1)
        with self._phase("frontier"):
            frontier = self.compute_frontier(singletons)
            partition = plan_partition(self.graph, frontier.frequent_labels, singletons, self.config.threads)
        return attribute_sets, frontier, partition

    def estimate_partition(self) -> Partition:
        """The thread partition a run would use, without matching anything."""
        return self._prepare()[2]

    # --------------------------------------------------------- attribute sets

    def discover_attribute_sets(self) -> Dict[AttributeSet, FrozenSet[int]]:
        """Level-wise Apriori over vertex attribute sets with tidset intersection."""
        graph, theta = self.graph, self.theta
        logger.info("Discovering frequent attribute sets")
        current: Dict[AttributeSet, FrozenSet[int]] = {}
        for a in graph.attributes:
            tids = graph.vertices_with((a,))
            if len(tids) > theta:
                current[(a,)] = tids
        found = dict(current)
        size = 1
        while current:
            ordered = sorted(current)
            following: Dict[AttributeSet, FrozenSet[int]] = {}
            for i, left in enumerate(ordered):
                for right in ordered[i + 1:]:
                    if left[:-1] != right[:-1]:
                        break
                    candidate = left + (right[-1],)
                    # downward closure: every subset one smaller must be frequent
                    if any(candidate[:j] + candidate[j + 1:] not in current for j in range(size + 1)):
                        continue
                    tids = current[left] & current[right]
                    if len(tids) > theta:
                        following[candidate] = tids
            logger.debug(f"Attribute sets of size {size + 1}: {len(following)} frequent")
            found.update(following)
            current = following
            size += 1
        logger.info(f"Found {len(found)} frequent attribute sets")
        return found

    # --------------------------------------------------------------- frontier

    def compute_frontier(self, frequent_singletons: Sequence[int]) -> Frontier:
        """
        The targets of label l are the attributes b whose in-edges could
        still feed more than θ sources: |E({b}, l)|·Σ_{j<k} d_m^j > θ, or any
        in-edge at all when reachability is unbounded. The frequent labels
        have targets and are left by more than θ vertices of some frequent
        attribute.
        """
        graph, theta, k = self.graph, self.theta, self.config.max_length
        if self.config.baseline:
            everything = tuple(graph.attributes)
            targets = {label: everything for label in graph.labels} if everything else {}
            return Frontier(tuple(graph.labels), targets)

        d_m = graph.max_in_degree()
        reach = sum(d_m ** j for j in range(k))
        unbounded = self.config.reachability_bound is ReachabilityBound.UNBOUNDED
        targets: Dict[int, Tuple[int, ...]] = {}
        for label in graph.labels:
            kept = []
            for b in graph.attributes:
                edges = graph.count_target_edges((b,), label)
                if edges * reach > theta or (unbounded and edges > 0):
                    kept.append(b)
            if kept:
                targets[label] = tuple(kept)
        frequent_labels = tuple(
            label for label in sorted(targets)
            if any(graph.count_sources((a,), label) > theta for a in frequent_singletons)
        )
        logger.info(
            f"Frontier: {len(frequent_labels)} of {graph.num_labels} labels frequent, "
            f"{sum(len(t) for t in targets.values())} admissible (label, attribute) targets"
        )
        return Frontier(frequent_labels, targets)

    def _first_hop_ok(self, attrs: AttributeSet, label: int) -> bool:
        key = (attrs, label)
        count = self._first_hop.get(key)
        if count is None:
            count = self.graph.count_sources(attrs, label)
            self._first_hop[key] = count
        return count > self.theta

    # ---------------------------------------------------------------- waves

    def _run(
        self,
        candidates: Sequence,
        evaluate: Callable[[object, Optional[FrozenSet[int]]], MatchTable],
    ) -> List[MatchTable]:
        return self.executor.run_wave(
            candidates,
            evaluate,
            lambda _, parts: MatchTable.merge(parts[0].pattern, parts),
        )

    # ---------------------------------------------------------- simple paths

    def discover_simple(self, frequent: FrequentSets) -> None:
        """Grow lengths 1..k: a vertical wave per length, then horizontal joins to a fixpoint."""
        config, frontier = self.config, frequent.frontier
        for n in range(1, config.max_length + 1):
            parents = frequent.levels[n - 1]
            level: Dict[PathPattern, MatchTable] = {}
            frequent.levels.append(level)
            if not parents:
                continue
            if config.baseline:
                suffixes = frontier.targets
            else:
                suffixes = apply_candidate_reduction(self.graph, frontier.targets, config.psi, self.theta, n)
            labels = frontier.frequent_labels if n == 1 else frontier.extension_labels

            candidates: List[Tuple[PathPattern, int, int]] = []
            for parent in sorted(parents, key=PathPattern.sort_key):
                for label in labels:
                    if label not in suffixes:
                        continue
                    if n == 1 and not config.baseline and not self._first_hop_ok(parent.attribute_sets[0], label):
                        continue
                    candidates.extend((parent, label, b) for b in suffixes[label])

            def vertical(candidate, sources):
                parent, label, b = candidate
                return self.matcher.extend_matches(parents[parent], label, (b,), sources=sources)

            logger.info(f"Length {n}: evaluating {len(candidates)} vertical candidates")
            evaluated: Set[PathPattern] = set()
            for table in self._run(candidates, vertical):
                evaluated.add(table.pattern)
                if self._is_frequent(len(table)):
                    level[table.pattern] = table
            logger.debug(f"Length {n}: {len(level)} frequent after the vertical wave")

            self._close_horizontally(level, evaluated, lambda join, sources: self._evaluate_simple_join(frequent, join, sources))
            for pattern, table in level.items():
                frequent.support[pattern] = self._support(len(table))
            logger.info(f"Length {n}: {len(level)} frequent simple patterns")

    def _evaluate_simple_join(
        self,
        frequent: FrequentSets,
        join: Join,
        sources: Optional[FrozenSet[int]],
    ) -> MatchTable:
        left, right, j = join
        level = frequent.levels[left.length]
        joined = left.horizontal_extend(right)
        extra = set(joined.attribute_sets[j]) - set(left.attribute_sets[j])
        if j == 0:
            return self.matcher.restrict_sources(level[left], extra, sources=sources)
        if j == left.length:
            return self.matcher.restrict_targets(level[left], extra, sources=sources)

        # interior position: regrow from the stored prefix ending just before j
        allowed = level[left].sources & level[right].sources
        if sources is not None:
            allowed &= sources
        prefix = joined.prefix(j - 1)
        base = frequent.levels[j - 1].get(prefix)
        if base is None:
            base = self.matcher.match_pattern(prefix, None, sources=allowed)
        table = MatchTable(prefix, {s: t for s, t in base.entries.items() if s in allowed})
        for pos in range(j, joined.length + 1):
            if not table.entries:
                return MatchTable(joined, {})
            table = self.matcher.extend_matches(table, joined.labels[pos - 1], joined.attribute_sets[pos])
        return table

    def _close_horizontally(
        self,
        level: Dict[PathPattern, MatchTable],
        evaluated: Set[PathPattern],
        evaluate: Callable[[Join, Optional[FrozenSet[int]]], MatchTable],
    ) -> None:
        """
        Join frequent siblings size by size until no new pattern appears.
        All sub-patterns of a join are one attribute smaller, so they are
        settled before the join is generated.
        """
        if not level:
            return
        size = min(p.size for p in level)
        while size <= max(p.size for p in level):
            current = sorted((p for p in level if p.size == size), key=PathPattern.sort_key)
            joins = self._join_candidates(current, level, evaluated)
            if joins:
                logger.debug(f"Horizontal wave at size {size + 1}: {len(joins)} candidates")
                for table in self._run(joins, evaluate):
                    evaluated.add(table.pattern)
                    if self._is_frequent(len(table)):
                        level[table.pattern] = table
            size += 1

    def _join_candidates(
        self,
        current: Sequence[PathPattern],
        level: Dict[PathPattern, MatchTable],
        evaluated: Set[PathPattern],
    ) -> List[Join]:
        # siblings share the pattern left after dropping their differing attribute
        groups: Dict[Tuple[PathPattern, int], List[PathPattern]] = defaultdict(list)
        for p in current:
            for j, attrs in enumerate(p.attribute_sets):
                for z in attrs:
                    groups[(p.with_position(j, (x for x in attrs if x != z)), j)].append(p)

        chosen: Dict[PathPattern, Join] = {}
        for (_, j), members in groups.items():
            for left, right in combinations(members, 2):
                joined = left.horizontal_extend(right)
                if joined is None or joined in evaluated:
                    continue
                last = len(joined.attribute_sets) - 1
                previous = chosen.get(joined)
                if previous is not None and previous[2] in (0, last):
                    continue
                if previous is None and not self.config.baseline:
                    if any(sub not in level for sub in joined.sub_patterns()):
                        continue
                chosen[joined] = (left, right, j)
        return [chosen[p] for p in sorted(chosen, key=PathPattern.sort_key)]

    # ------------------------------------------------------- reachability

    def discover_reachability(self, frequent: FrequentSets) -> None:
        """Unit reachability candidates from frequent attributes, then horizontal joins."""
        graph, config, frontier = self.graph, self.config, frequent.frontier
        labels = frontier.frequent_labels
        if not labels or not frequent.levels[0]:
            return
        logger.info(f"Building reach sets for {len(labels)} labels (depth {self.depth or 'unbounded'})")

        def build(sources):
            start = self.working if sources is None else self.working & sources
            return self.matcher.build_reach_sets(labels, self.depth, sources=start)

        reach: Dict[int, ReachSet] = {}
        for part in self.executor.map_partitions(build):
            for label, rs in part.items():
                merged = reach.setdefault(label, ReachSet(label, {}, self.depth))
                merged.reach.update(rs.reach)

        singletons = sorted(p.attribute_sets[0][0] for p in frequent.levels[0] if p.size == 1)
        candidates: List[PathPattern] = []
        for a in singletons:
            for label in labels:
                if not config.baseline and not self._first_hop_ok((a,), label):
                    continue
                candidates.extend(PathPattern.reachability((a,), label, (b,)) for b in frontier.targets.get(label, ()))

        def unit(pattern, sources):
            return self.matcher.match_reachability(pattern, reach[pattern.labels[0]], sources=sources)

        logger.info(f"Evaluating {len(candidates)} unit reachability candidates")
        level = frequent.reachability
        evaluated: Set[PathPattern] = set()
        for table in self._run(candidates, unit):
            evaluated.add(table.pattern)
            if self._is_frequent(len(table)):
                level[table.pattern] = table

        def join(candidate: Join, sources):
            left, right, j = candidate
            extra = set(left.horizontal_extend(right).attribute_sets[j]) - set(left.attribute_sets[j])
            if j == 0:
                return self.matcher.restrict_sources(level[left], extra, sources=sources)
            return self.matcher.restrict_targets(level[left], extra, sources=sources)

        self._close_horizontally(level, evaluated, join)
        for pattern, table in level.items():
            frequent.support[pattern] = self._support(len(table))
        logger.info(f"Found {len(level)} frequent reachability patterns")

    # ---------------------------------------------------------------- rules

    def build_links(self, frequent: FrequentSets) -> Dict[PathPattern, List[PathPattern]]:
        """Map each frequent pattern to the frequent patterns one extension step below it."""
        links: Dict[PathPattern, List[PathPattern]] = defaultdict(list)
        for n, level in enumerate(frequent.levels):
            if n == 0:
                continue
            for child in level:
                for parent in child.sub_patterns():
                    if parent in level:
                        links[parent].append(child)
                if n >= 2 and len(child.attribute_sets[-1]) == 1:
                    parent = child.prefix(n - 1)
                    if parent in frequent.levels[n - 1]:
                        links[parent].append(child)
        for child in frequent.reachability:
            for parent in child.sub_patterns():
                if parent in frequent.reachability:
                    links[parent].append(child)
        return {p: sorted(children, key=PathPattern.sort_key) for p, children in links.items()}

    def discover_rules(self, frequent: FrequentSets) -> List[Rule]:
        """
        Start from every ordered pair of length-1 unit patterns with enough
        shared sources and walk both sides down the extension links. A
        pair's shared sources only shrink along the walk, so a pair at or
        below θ is not expanded.
        """
        patterns = frequent.rule_patterns()
        sources = {p: frequent.sources(p) for p in patterns}
        rules: List[Rule] = []
        logger.info(f"Discovering rules over {len(patterns)} frequent patterns")

        if self.config.baseline:
            ordered = sorted(patterns, key=PathPattern.sort_key)
            for x in ordered:
                for y in ordered:
                    if x == y:
                        continue
                    inter = sources[x] & sources[y]
                    if self._is_frequent(len(inter)) and RuleCandidate(x, y).is_admissible():
                        rules.append(self._make_rule(x, y, sources))
            logger.info(f"Found {len(rules)} rules")
            return rules

        units = sorted(
            [p for p in patterns if p.length == 1 and p.is_unit()],
            key=PathPattern.sort_key,
        )
        visited: Set[Tuple[PathPattern, PathPattern]] = set()
        queue: deque = deque()
        for x in units:
            for y in units:
                visited.add((x, y))
                inter = sources[x] & sources[y]
                if self._is_frequent(len(inter)):
                    queue.append((x, y, inter))

        links = frequent.links
        while queue:
            x, y, inter = queue.popleft()
            if RuleCandidate(x, y).is_admissible():
                rules.append(self._make_rule(x, y, sources))
            for child in links.get(x, ()):
                if (child, y) not in visited:
                    visited.add((child, y))
                    narrowed = inter & sources[child]
                    if self._is_frequent(len(narrowed)):
                        queue.append((child, y, narrowed))
            for child in links.get(y, ()):
                if (x, child) not in visited:
                    visited.add((x, child))
                    narrowed = inter & sources[child]
                    if self._is_frequent(len(narrowed)):
                        queue.append((x, child, narrowed))
        logger.info(f"Found {len(rules)} rules from {len(visited)} candidate pairs")
        return rules

    def _make_rule(self, x: PathPattern, y: PathPattern, sources: Dict[PathPattern, FrozenSet[int]]) -> Rule:
        asupp, rsupp, conf, lift = compute_metrics(sources[x], sources[y], self.graph.num_vertices, self.rate)
        if self.plan is None:
            return Rule(x, y, asupp, rsupp, conf, lift)
        inter = sources[x] & sources[y]
        estimate = estimate_frequency(
            len(inter), self.rate, strata=self.plan.tallies(inter), z=self.config.z
        )
        return Rule(x, y, asupp, rsupp, conf, lift, estimated=True, ci=estimate.ci)


def mine(graph: PropertyGraph, config: MinerConfig) -> MiningResult:
    return PathRuleMiner(graph, config).mine()


def evaluate_rule(
    graph: PropertyGraph,
    antecedent: PathPattern,
    consequent: PathPattern,
    max_length: int,
    bound: ReachabilityBound = ReachabilityBound.BOUNDED,
) -> Rule:
    """Exact metrics for one given rule; wildcard positions and length-0 sides are allowed."""
    matcher = PathMatcher(graph)
    depth = max_length if bound is ReachabilityBound.BOUNDED else None
    sources_x = matcher.match_pattern(antecedent, depth).sources
    sources_y = matcher.match_pattern(consequent, depth).sources
    asupp, rsupp, conf, lift = compute_metrics(sources_x, sources_y, graph.num_vertices)
    logger.info(f"Evaluated rule: |V(X)|={len(sources_x)}, |V(Y)|={len(sources_y)}, asupp={asupp}")
    return Rule(antecedent, consequent, asupp, rsupp, conf, lift)
