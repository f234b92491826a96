"""
Matched-vertex computation for path patterns.

A MatchTable keeps, for every source vertex of a pattern, the endpoints of
the paths that match it. Longer patterns grow from a stored table instead of
searching paths from scratch. Paths follow homomorphism semantics: a path
may revisit vertices.
"""
from collections import deque
from dataclasses import dataclass, field
from typing import Collection, Dict, FrozenSet, Iterable, Mapping, Optional, Sequence

from ..core.logger import logger
from ..models.graph import PropertyGraph
from ..models.pattern import PathPattern, PatternKind

SourceFilter = Optional[Collection[int]]


@dataclass
class MatchTable:
    """Per-pattern map from matched source vertex to its nonempty target set."""
    pattern: PathPattern
    entries: Dict[int, FrozenSet[int]] = field(default_factory=dict)

    @property
    def sources(self) -> FrozenSet[int]:
        return frozenset(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    @classmethod
    def merge(cls, pattern: PathPattern, parts: Sequence["MatchTable"]) -> "MatchTable":
        """Concatenate partial tables produced over disjoint source ranges."""
        entries: Dict[int, FrozenSet[int]] = {}
        for part in parts:
            entries.update(part.entries)
        return cls(pattern, entries)


@dataclass
class ReachSet:
    """Per-source vertices reachable over 1..k edges all labeled `label`."""
    label: int
    reach: Dict[int, FrozenSet[int]] = field(default_factory=dict)
    depth: Optional[int] = None

    def of(self, v: int) -> FrozenSet[int]:
        return self.reach.get(v, frozenset())


def _selected(entries: Mapping[int, FrozenSet[int]], sources: SourceFilter):
    if sources is None:
        return entries.items()
    return ((s, t) for s, t in entries.items() if s in sources)


class PathMatcher:
    """Matching operations over one read-only graph."""

    def __init__(self, graph: PropertyGraph):
        self.graph = graph

    def match_zero(self, attrs: Iterable[int], sources: SourceFilter = None) -> MatchTable:
        """Length-0 table: every v with A ⊆ A(v) maps to {v}."""
        pattern = PathPattern.simple([tuple(attrs)])
        vertices = self.graph.vertices_with(pattern.attribute_sets[0])
        if sources is not None:
            vertices = vertices & frozenset(sources)
        return MatchTable(pattern, {v: frozenset((v,)) for v in vertices})

    def extend_matches(
        self,
        table: MatchTable,
        label: int,
        attrs: Iterable[int],
        sources: SourceFilter = None,
    ) -> MatchTable:
        """Grow every stored path by one `label` edge into a vertex carrying attrs."""
        attrs = tuple(sorted(set(attrs)))
        pattern = table.pattern.vertical_extend(label, attrs)
        graph = self.graph
        # targets reachable in one hop, memoised across sources sharing them
        step: Dict[int, FrozenSet[int]] = {}
        entries: Dict[int, FrozenSet[int]] = {}
        for source, targets in _selected(table.entries, sources):
            reached = set()
            for t in targets:
                nxt = step.get(t)
                if nxt is None:
                    nxt = frozenset(
                        w for w in graph.out_neighbors(t, label) if graph.has_attributes(w, attrs)
                    )
                    step[t] = nxt
                reached |= nxt
            if reached:
                entries[source] = frozenset(reached)
        return MatchTable(pattern, entries)

    def restrict_sources(
        self,
        table: MatchTable,
        extra: Iterable[int],
        position: int = 0,
        sources: SourceFilter = None,
    ) -> MatchTable:
        """Horizontal extension at position 0: keep sources that also carry `extra`."""
        if position != 0:
            raise ValueError("restrict_sources only handles position 0; interior positions are re-matched")
        extra = tuple(sorted(set(extra)))
        merged = set(table.pattern.attribute_sets[0]) | set(extra)
        pattern = table.pattern.with_position(0, merged)
        entries = {
            s: t for s, t in _selected(table.entries, sources) if self.graph.has_attributes(s, extra)
        }
        return MatchTable(pattern, entries)

    def restrict_targets(
        self,
        table: MatchTable,
        extra: Iterable[int],
        sources: SourceFilter = None,
    ) -> MatchTable:
        """Horizontal extension at the last position: keep targets that also carry `extra`."""
        extra = tuple(sorted(set(extra)))
        last = len(table.pattern.attribute_sets) - 1
        pattern = table.pattern.with_position(last, set(table.pattern.attribute_sets[last]) | set(extra))
        entries: Dict[int, FrozenSet[int]] = {}
        for s, targets in _selected(table.entries, sources):
            kept = frozenset(t for t in targets if self.graph.has_attributes(t, extra))
            if kept:
                entries[s] = kept
        return MatchTable(pattern, entries)

    def build_reach_sets(
        self,
        labels: Iterable[int],
        depth: Optional[int],
        sources: SourceFilter = None,
    ) -> Dict[int, ReachSet]:
        """
        Bounded BFS over each label's subgraph. `depth=None` lifts the bound
        and computes the full per-label transitive closure.
        """
        if depth is not None and depth < 1:
            raise ValueError("reachability depth must be at least 1")
        graph = self.graph
        starts = range(graph.num_vertices) if sources is None else sorted(sources)
        result: Dict[int, ReachSet] = {}
        for label in labels:
            reach: Dict[int, FrozenSet[int]] = {}
            label_sources = graph.label_sources(label)
            for v in starts:
                if v not in label_sources:
                    continue
                seen = set(graph.out_neighbors(v, label))
                queue = deque((w, 1) for w in seen)
                while queue:
                    u, d = queue.popleft()
                    if depth is not None and d >= depth:
                        continue
                    for w in graph.out_neighbors(u, label):
                        if w not in seen:
                            seen.add(w)
                            queue.append((w, d + 1))
                if seen:
                    reach[v] = frozenset(seen)
            result[label] = ReachSet(label, reach, depth)
            logger.debug(f"Reach set for label {label}: {len(reach)} sources")
        return result

    def match_reachability(
        self,
        pattern: PathPattern,
        reach: ReachSet,
        sources: SourceFilter = None,
    ) -> MatchTable:
        """Sources carrying A_0 with at least one reachable vertex carrying A_1."""
        if not pattern.is_reachability:
            raise ValueError("match_reachability expects a reachability pattern")
        if reach.label != pattern.labels[0]:
            raise ValueError("reach set was built for a different label")
        source_attrs, target_attrs = pattern.attribute_sets
        candidates = self.graph.vertices_with(source_attrs)
        if len(candidates) < len(reach.reach):
            # walk the smaller side
            pairs = {v: reach.reach[v] for v in sorted(candidates) if v in reach.reach}
        else:
            pairs = {v: t for v, t in reach.reach.items() if v in candidates}
        entries: Dict[int, FrozenSet[int]] = {}
        for v, reached in _selected(pairs, sources):
            kept = frozenset(t for t in reached if self.graph.has_attributes(t, target_attrs))
            if kept:
                entries[v] = kept
        return MatchTable(pattern, entries)

    def match_pattern(
        self,
        pattern: PathPattern,
        depth: Optional[int],
        sources: SourceFilter = None,
    ) -> MatchTable:
        """Match any pattern from scratch, wildcard positions included."""
        if pattern.kind is PatternKind.REACHABILITY:
            label = pattern.labels[0]
            start = self.graph.vertices_with(pattern.attribute_sets[0])
            if sources is not None:
                start = start & frozenset(sources)
            reach = self.build_reach_sets((label,), depth, sources=start)[label]
            return self.match_reachability(pattern, reach)
        table = self.match_zero(pattern.attribute_sets[0], sources=sources)
        for label, attrs in zip(pattern.labels, pattern.attribute_sets[1:]):
            if not table.entries:
                return MatchTable(pattern, {})
            table = self.extend_matches(table, label, attrs)
        return table
