"""
Exhaustive reference miner for small graphs.

Everything here is re-derived from the matching definitions: walks are
enumerated directly (depth-first per source, or as an iterated hash join of
the per-label edge relation) and every attribute-subset combination a walk
satisfies is credited to its source. No pruning and no matcher code is used.
"""
import enum
from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from ..core.configs import settings
from ..core.exceptions import OracleGuardError
from ..core.logger import logger
from ..models.graph import PropertyGraph
from ..models.pattern import PathPattern, PatternKind
from ..schemas.rule import RuleRecord
from ..schemas.summary import AccuracyReport
from .miner_service import Rule, sort_rules

Walk = Tuple[Tuple[int, ...], Tuple[int, ...]]  # (vertices v_0..v_n, labels l_0..l_{n-1})


class OracleStrategy(str, enum.Enum):
    DFS = "dfs"
    JOIN = "join"


@dataclass
class OracleResult:
    frequent_patterns: Dict[PathPattern, FrozenSet[int]] = field(default_factory=dict)
    rules: List[Rule] = field(default_factory=list)
    theta: float = 0.0

    def simple(self, length: int) -> Dict[PathPattern, FrozenSet[int]]:
        return {
            p: s for p, s in self.frequent_patterns.items()
            if p.kind is PatternKind.SIMPLE and len(p.labels) == length
        }

    @property
    def reachability(self) -> Dict[PathPattern, FrozenSet[int]]:
        return {p: s for p, s in self.frequent_patterns.items() if p.kind is PatternKind.REACHABILITY}


def guard_report(graph: PropertyGraph, max_length: int) -> Dict[str, Dict[str, int]]:
    largest = max((len(a) for a in graph.attribute_sets), default=0)
    return {
        "vertices": {"actual": graph.num_vertices, "limit": settings.ORACLE_MAX_VERTICES},
        "attributes": {"actual": graph.num_attributes, "limit": settings.ORACLE_MAX_ATTRIBUTES},
        "max_length": {"actual": max_length, "limit": settings.ORACLE_MAX_LENGTH},
        "attribute_set_size": {"actual": largest, "limit": settings.ORACLE_MAX_SET_SIZE},
    }


def _check_guard(graph: PropertyGraph, max_length: int) -> None:
    report = guard_report(graph, max_length)
    exceeded = [name for name, size in report.items() if size["actual"] > size["limit"]]
    if exceeded:
        details = ", ".join(f"{n} {report[n]['actual']} > {report[n]['limit']}" for n in exceeded)
        logger.warning(f"Oracle refused the instance: {details}")
        raise OracleGuardError(f"instance too large for exhaustive enumeration: {details}", report)


def _nonempty_subsets(attrs: Sequence[int]) -> List[Tuple[int, ...]]:
    return [c for r in range(1, len(attrs) + 1) for c in combinations(attrs, r)]


# ------------------------------------------------------------------ walks

def _walks_dfs(graph: PropertyGraph, max_length: int) -> Iterator[Walk]:
    """Every walk of 1..k edges, source by source."""
    adjacency: List[Dict[int, List[int]]] = [defaultdict(list) for _ in range(graph.num_vertices)]
    for src, label, dst in sorted(set(graph.edges)):
        adjacency[src][label].append(dst)

    def extend(vertices: Tuple[int, ...], labels: Tuple[int, ...]) -> Iterator[Walk]:
        if labels:
            yield vertices, labels
        if len(labels) == max_length:
            return
        for label, dsts in sorted(adjacency[vertices[-1]].items()):
            for dst in dsts:
                yield from extend(vertices + (dst,), labels + (label,))

    for source in range(graph.num_vertices):
        yield from extend((source,), ())


def _walks_join(graph: PropertyGraph, max_length: int) -> Iterator[Walk]:
    """The same walks, built label sequence by label sequence with hash joins."""
    relation: Dict[int, Dict[int, List[int]]] = defaultdict(lambda: defaultdict(list))
    for src, label, dst in sorted(set(graph.edges)):
        relation[label][src].append(dst)
    labels = sorted(relation)

    frontier: Dict[Tuple[int, ...], List[Tuple[int, ...]]] = {(): [(v,) for v in range(graph.num_vertices)]}
    for _ in range(max_length):
        following: Dict[Tuple[int, ...], List[Tuple[int, ...]]] = {}
        for sequence, rows in frontier.items():
            for label in labels:
                index = relation[label]
                joined = [row + (dst,) for row in rows for dst in index.get(row[-1], ())]
                if joined:
                    following[sequence + (label,)] = joined
                    for row in joined:
                        yield row, sequence + (label,)
        frontier = following


def _closure_bfs(graph: PropertyGraph, depth: int) -> Dict[int, Dict[int, Set[int]]]:
    """label -> source -> vertices reached over 1..depth edges of that label."""
    out: Dict[int, Dict[int, Set[int]]] = defaultdict(lambda: defaultdict(set))
    for src, label, dst in graph.edges:
        out[label][src].add(dst)
    closure: Dict[int, Dict[int, Set[int]]] = {}
    for label, step in out.items():
        per_source: Dict[int, Set[int]] = {}
        for source in step:
            reached: Set[int] = set()
            layer = set(step[source])
            for _ in range(depth):
                layer -= reached
                if not layer:
                    break
                reached |= layer
                layer = {w for u in layer for w in step.get(u, ())}
            per_source[source] = reached
        closure[label] = per_source
    return closure


def _closure_join(graph: PropertyGraph, depth: int) -> Dict[int, Dict[int, Set[int]]]:
    """Same relation as _closure_bfs via repeated composition R^(i+1) = R^i ⋈ R."""
    base: Dict[int, Set[Tuple[int, int]]] = defaultdict(set)
    for src, label, dst in graph.edges:
        base[label].add((src, dst))
    closure: Dict[int, Dict[int, Set[int]]] = {}
    for label, pairs in base.items():
        by_source: Dict[int, Set[int]] = defaultdict(set)
        for u, v in pairs:
            by_source[u].add(v)
        total = set(pairs)
        power = set(pairs)
        for _ in range(depth - 1):
            power = {(u, w) for u, v in power for w in by_source.get(v, ())}
            if power <= total:
                break
            total |= power
        per_source: Dict[int, Set[int]] = defaultdict(set)
        for u, v in total:
            per_source[u].add(v)
        closure[label] = dict(per_source)
    return closure


# ------------------------------------------------------------------ mining

def oracle_mine(
    graph: PropertyGraph,
    theta: float,
    max_length: int,
    strategy: OracleStrategy = OracleStrategy.DFS,
    unbounded_reachability: bool = False,
) -> OracleResult:
    """
    Enumerate every pattern with nonempty attribute sets up to length k,
    keep those with more than θ sources, and pair them into every mutually
    non-dominating rule with more than θ shared sources.
    """
    if max_length < 1:
        raise OracleGuardError("maximum path length must be at least 1", guard_report(graph, max_length))
    _check_guard(graph, max_length)
    strategy = OracleStrategy(strategy)
    logger.info(f"Oracle ({strategy.value}) on {graph!r} with theta={theta}, k={max_length}")

    matched: Dict[PathPattern, Set[int]] = defaultdict(set)
    subsets = [_nonempty_subsets(attrs) for attrs in graph.attribute_sets]

    for v in range(graph.num_vertices):
        for s in subsets[v]:
            matched[PathPattern(PatternKind.SIMPLE, (s,), ())].add(v)

    walks = _walks_dfs(graph, max_length) if strategy is OracleStrategy.DFS else _walks_join(graph, max_length)
    seen: Set[Tuple[Tuple[Tuple[int, ...], ...], Tuple[int, ...], int]] = set()
    for vertices, labels in walks:
        signature = (tuple(graph.attribute_sets[v] for v in vertices), labels, vertices[0])
        if signature in seen or not all(signature[0]):
            continue
        seen.add(signature)
        for sets in product(*(subsets[v] for v in vertices)):
            matched[PathPattern(PatternKind.SIMPLE, sets, labels)].add(vertices[0])

    depth = graph.num_vertices if unbounded_reachability else max_length
    closure = _closure_bfs(graph, depth) if strategy is OracleStrategy.DFS else _closure_join(graph, depth)
    for label, per_source in closure.items():
        for source, reached in per_source.items():
            for target in reached:
                for s0, s1 in product(subsets[source], subsets[target]):
                    matched[PathPattern(PatternKind.REACHABILITY, (s0, s1), (label,))].add(source)

    frequent = {p: frozenset(s) for p, s in matched.items() if len(s) > theta}
    rules = _pair_rules(frequent, theta, graph.num_vertices)
    logger.info(f"Oracle found {len(frequent)} frequent patterns and {len(rules)} rules")
    return OracleResult(frequent, sort_rules(rules, graph), theta)


def _covers(p: PathPattern, q: PathPattern) -> bool:
    """p dominates q, restated from the positional definition."""
    if p.kind != q.kind or len(q.labels) > len(p.labels):
        return False
    for i, label in enumerate(q.labels):
        if p.labels[i] != label:
            return False
    for i, attrs in enumerate(q.attribute_sets):
        if not set(attrs) <= set(p.attribute_sets[i]):
            return False
    return True


def _pair_rules(frequent: Dict[PathPattern, FrozenSet[int]], theta: float, num_vertices: int) -> List[Rule]:
    candidates = [p for p in frequent if p.labels]
    rules: List[Rule] = []
    for x in candidates:
        for y in candidates:
            if _covers(x, y) or _covers(y, x):
                continue
            sx, sy = frequent[x], frequent[y]
            shared = len(sx & sy)
            if shared <= theta:
                continue
            rules.append(Rule(
                antecedent=x,
                consequent=y,
                asupp=shared,
                rsupp=shared / num_vertices,
                conf=shared / len(sx),
                lift=(shared * num_vertices) / (len(sx) * len(sy)),
            ))
    return rules


# -------------------------------------------------------------- comparison

def compare_rule_sets(
    reference: Iterable[RuleRecord],
    candidate: Iterable[RuleRecord],
    tolerance: float = 1e-12,
) -> AccuracyReport:
    """Precision and recall of `candidate` against `reference`, keyed by pattern text."""
    ref = {(r.antecedent_text, r.consequent_text): r for r in reference}
    cand = {(r.antecedent_text, r.consequent_text): r for r in candidate}
    shared = sorted(ref.keys() & cand.keys())
    mismatches = []
    for key in shared:
        a, b = ref[key], cand[key]
        if a.asupp != b.asupp or any(
            abs(getattr(a, m) - getattr(b, m)) > tolerance * max(1.0, abs(getattr(a, m)))
            for m in ("rsupp", "conf", "lift")
        ):
            mismatches.append(key)
    report = AccuracyReport(
        reference_size=len(ref),
        candidate_size=len(cand),
        matched=len(shared),
        precision=len(shared) / len(cand) if cand else 1.0,
        recall=len(shared) / len(ref) if ref else 1.0,
        missing=sorted(ref.keys() - cand.keys()),
        extra=sorted(cand.keys() - ref.keys()),
        metric_mismatches=mismatches,
    )
    logger.info(f"Rule comparison: precision={report.precision:.6f}, recall={report.recall:.6f}")
    return report
