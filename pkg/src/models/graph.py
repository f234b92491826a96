"""
In-memory property graph G = (V, E, L, A).

Vertices, labels and attributes are interned to dense integer ids when the
graph is built. The count indexes needed by suffix pruning are computed once
here; the graph is never mutated afterwards, so any number of workers may
read it concurrently.
"""
from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np

Edge = Tuple[int, int, int]


class Interner:
    """Bidirectional string <-> dense id map."""

    def __init__(self, names: Iterable[str] = ()):
        self._names: List[str] = []
        self._ids: Dict[str, int] = {}
        for name in names:
            self.intern(name)

    def intern(self, name: str) -> int:
        """Return the id of `name`, assigning the next free id on first sight."""
        ident = self._ids.get(name)
        if ident is None:
            ident = len(self._names)
            self._names.append(name)
            self._ids[name] = ident
        return ident

    def id_of(self, name: str) -> Optional[int]:
        return self._ids.get(name)

    def name_of(self, ident: int) -> str:
        return self._names[ident]

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(self._names)

    def __len__(self) -> int:
        return len(self._names)

    def __contains__(self, name: str) -> bool:
        return name in self._ids


@dataclass(frozen=True)
class SourceCount:
    """|V(A, l)|: vertices carrying A with at least one out-edge labeled l."""
    attribute_set: Tuple[int, ...]
    label: int
    count: int


@dataclass(frozen=True)
class TargetEdgeCount:
    """|E(A, l)|: edges labeled l whose target carries A."""
    attribute_set: Tuple[int, ...]
    label: int
    count: int


class PropertyGraph:
    """
    Immutable vertex/edge store with interned labels and attributes.

    Attributes:
        vertex_names: external vertex ids, indexed by dense id
        attribute_sets: per-vertex sorted tuple of attribute ids, A(v)
        edges: (src, label, dst) triples in load order, multi-edges kept
        out_adjacency: per-vertex map label -> sorted distinct destinations
        in_degree / out_degree: per-vertex edge counts over all labels
        label_dict / attribute_dict: name <-> id interners
    """

    def __init__(
        self,
        vertex_names: Sequence[str],
        attribute_sets: Sequence[Iterable[int]],
        edges: Sequence[Edge],
        label_dict: Interner,
        attribute_dict: Interner,
        implicit_vertices: int = 0,
    ):
        if len(vertex_names) != len(attribute_sets):
            raise ValueError("vertex_names and attribute_sets differ in length")
        n = len(vertex_names)
        self.vertex_names: Tuple[str, ...] = tuple(vertex_names)
        self.attribute_sets: Tuple[Tuple[int, ...], ...] = tuple(
            tuple(sorted(set(attrs))) for attrs in attribute_sets
        )
        self.label_dict = label_dict
        self.attribute_dict = attribute_dict
        self.implicit_vertices = implicit_vertices

        for attrs in self.attribute_sets:
            for a in attrs:
                if not 0 <= a < len(attribute_dict):
                    raise ValueError(f"attribute id {a} is not in the attribute dictionary")
        for src, label, dst in edges:
            if not (0 <= src < n and 0 <= dst < n):
                raise ValueError(f"edge ({src}, {label}, {dst}) has an endpoint outside 0..{n - 1}")
            if not 0 <= label < len(label_dict):
                raise ValueError(f"label id {label} is not in the label dictionary")
        self.edges: Tuple[Edge, ...] = tuple(edges)

        self.in_degree = np.zeros(n, dtype=np.int64)
        self.out_degree = np.zeros(n, dtype=np.int64)
        if self.edges:
            arr = np.asarray(self.edges, dtype=np.int64)
            np.add.at(self.out_degree, arr[:, 0], 1)
            np.add.at(self.in_degree, arr[:, 2], 1)

        adjacency: List[Dict[int, set]] = [defaultdict(set) for _ in range(n)]
        out_counts: List[Dict[int, int]] = [defaultdict(int) for _ in range(n)]
        label_sources: Dict[int, set] = defaultdict(set)
        # per label: target vertex -> number of edges into it (multi-edges counted)
        label_in_counts: Dict[int, Dict[int, int]] = defaultdict(lambda: defaultdict(int))
        for src, label, dst in self.edges:
            adjacency[src][label].add(dst)
            out_counts[src][label] += 1
            label_sources[label].add(src)
            label_in_counts[label][dst] += 1
        self.out_adjacency: Tuple[Dict[int, Tuple[int, ...]], ...] = tuple(
            {label: tuple(sorted(dsts)) for label, dsts in sorted(adj.items())} for adj in adjacency
        )
        self._out_edge_counts: Tuple[Dict[int, int], ...] = tuple(dict(c) for c in out_counts)
        self._label_sources: Dict[int, FrozenSet[int]] = {
            label: frozenset(srcs) for label, srcs in label_sources.items()
        }
        self._label_in_counts: Dict[int, Dict[int, int]] = {
            label: dict(counts) for label, counts in label_in_counts.items()
        }

        tidsets: Dict[int, set] = defaultdict(set)
        for v, attrs in enumerate(self.attribute_sets):
            for a in attrs:
                tidsets[a].add(v)
        self._tidsets: Dict[int, FrozenSet[int]] = {a: frozenset(vs) for a, vs in tidsets.items()}
        self._all_vertices: FrozenSet[int] = frozenset(range(n))

        # singleton indexes, the only sizes candidate generation asks for repeatedly
        self._source_counts: Dict[Tuple[int, int], int] = {}
        self._target_edge_counts: Dict[Tuple[int, int], int] = {}
        for label, sources in self._label_sources.items():
            for src in sources:
                for a in self.attribute_sets[src]:
                    key = (a, label)
                    self._source_counts[key] = self._source_counts.get(key, 0) + 1
            for dst, count in self._label_in_counts[label].items():
                for a in self.attribute_sets[dst]:
                    key = (a, label)
                    self._target_edge_counts[key] = self._target_edge_counts.get(key, 0) + count

    # ------------------------------------------------------------------ sizes

    @property
    def num_vertices(self) -> int:
        return len(self.vertex_names)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def num_labels(self) -> int:
        return len(self.label_dict)

    @property
    def num_attributes(self) -> int:
        return len(self.attribute_dict)

    @property
    def labels(self) -> range:
        return range(len(self.label_dict))

    @property
    def attributes(self) -> range:
        return range(len(self.attribute_dict))

    # ---------------------------------------------------------------- lookups

    def has_attributes(self, v: int, attrs: Iterable[int]) -> bool:
        """True iff attrs ⊆ A(v)."""
        own = self.attribute_sets[v]
        return all(a in own for a in attrs)

    def out_neighbors(self, v: int, label: int) -> Tuple[int, ...]:
        return self.out_adjacency[v].get(label, ())

    def out_edge_count(self, v: int, labels: Optional[Iterable[int]] = None) -> int:
        """Out-edges of v, multi-edges counted, optionally only those with the given labels."""
        counts = self._out_edge_counts[v]
        if labels is None:
            return sum(counts.values())
        return sum(counts.get(label, 0) for label in labels)

    def vertices_with(self, attrs: Iterable[int]) -> FrozenSet[int]:
        """Vertices v with attrs ⊆ A(v); the empty set matches every vertex."""
        result: Optional[FrozenSet[int]] = None
        for a in sorted(set(attrs), key=lambda x: len(self._tidsets.get(x, ()))):
            tids = self._tidsets.get(a)
            if not tids:
                return frozenset()
            result = tids if result is None else result & tids
            if not result:
                return frozenset()
        return self._all_vertices if result is None else result

    def label_sources(self, label: int) -> FrozenSet[int]:
        """Vertices with at least one out-edge labeled `label`."""
        return self._label_sources.get(label, frozenset())

    # ----------------------------------------------------------- count indexes

    def count_sources(self, attrs: Iterable[int], label: int) -> int:
        """|V(A, l)|; unknown ids count zero."""
        attrs = tuple(sorted(set(attrs)))
        if len(attrs) == 1:
            return self._source_counts.get((attrs[0], label), 0)
        sources = self._label_sources.get(label)
        if not sources:
            return 0
        if not attrs:
            return len(sources)
        return len(sources & self.vertices_with(attrs))

    def count_target_edges(self, attrs: Iterable[int], label: int) -> int:
        """|E(A, l)|, multi-edges counted."""
        attrs = tuple(sorted(set(attrs)))
        if len(attrs) == 1:
            return self._target_edge_counts.get((attrs[0], label), 0)
        in_counts = self._label_in_counts.get(label)
        if not in_counts:
            return 0
        return sum(count for dst, count in in_counts.items() if self.has_attributes(dst, attrs))

    def source_count(self, attrs: Iterable[int], label: int) -> SourceCount:
        attrs = tuple(sorted(set(attrs)))
        return SourceCount(attrs, label, self.count_sources(attrs, label))

    def target_edge_count(self, attrs: Iterable[int], label: int) -> TargetEdgeCount:
        attrs = tuple(sorted(set(attrs)))
        return TargetEdgeCount(attrs, label, self.count_target_edges(attrs, label))

    def max_in_degree(self) -> int:
        """d_m: maximum in-degree over all vertices and labels."""
        return int(self.in_degree.max()) if self.num_vertices else 0

    def describe(self) -> Dict[str, float]:
        n = self.num_vertices
        return {
            "vertices": n,
            "edges": self.num_edges,
            "labels": self.num_labels,
            "attributes": self.num_attributes,
            "avg_attributes_per_vertex": (sum(len(a) for a in self.attribute_sets) / n) if n else 0.0,
            "max_in_degree": self.max_in_degree(),
            "implicit_vertices": self.implicit_vertices,
        }

    def __repr__(self) -> str:
        return (
            f"PropertyGraph(|V|={self.num_vertices}, |E|={self.num_edges}, "
            f"|L|={self.num_labels}, |A|={self.num_attributes})"
        )
