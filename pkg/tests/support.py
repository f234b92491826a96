"""Shared builders and comparisons for the test modules."""
from pathlib import Path
from typing import Dict, FrozenSet, List, NamedTuple

from src.crud.graph_files import crud_graph_files
from src.crud.rule_files import crud_rule_files
from src.models.graph import Interner, PropertyGraph
from src.models.pattern import PathPattern, parse_pattern
from src.services.generator_service import graph_generator_service
from src.services.miner_service import MiningResult, Rule

CAMPUS = Path(__file__).resolve().parent.parent / "data" / "campus"


class SuiteCase(NamedTuple):
    seed: int
    vertices: int
    edges: int
    labels: int
    attributes: int
    theta: int
    max_length: int


def random_suite(count: int = 100) -> List[SuiteCase]:
    """
    Seeded small instances: |V| ≤ 30, |E| ≤ 60, |L| ≤ 5, |A| ≤ 6, θ ∈ {1,2,3}, k ∈ {1,2,3}.

    Edges are capped at |V| and vertices carry at most two attributes,
    which keeps every case small enough for the exhaustive oracle.
    """
    cases = []
    for seed in range(count):
        vertices = 5 + (seed * 7) % 26
        cases.append(SuiteCase(
            seed=seed,
            vertices=vertices,
            edges=min((seed * 13) % 61, vertices),
            labels=1 + seed % 5,
            attributes=1 + (seed * 5) % 6,
            theta=1 + seed % 3,
            max_length=1 + (seed // 3) % 3,
        ))
    return cases


def suite_graph(case: SuiteCase) -> PropertyGraph:
    return graph_generator_service.generate(
        num_vertices=case.vertices,
        num_edges=case.edges,
        num_labels=case.labels,
        num_attributes=case.attributes,
        attrs_per_vertex=1.0,
        seed=case.seed,
        max_attrs_per_vertex=2,
    )


def load_campus() -> PropertyGraph:
    return crud_graph_files.load_graph_files(CAMPUS / "vertices.tsv", CAMPUS / "edges.tsv")


def build_graph(vertices: Dict[str, List[str]], edges: List[tuple]) -> PropertyGraph:
    """Small in-memory graph from names: {vertex: [attrs]}, [(src, label, dst)]."""
    attributes, labels = Interner(), Interner()
    names = list(vertices)
    index = {name: i for i, name in enumerate(names)}
    attribute_sets = [[attributes.intern(a) for a in vertices[name]] for name in names]
    triples = [(index[s], labels.intern(l), index[d]) for s, l, d in edges]
    return PropertyGraph(names, attribute_sets, triples, labels, attributes)


def pattern(graph: PropertyGraph, text: str) -> PathPattern:
    return parse_pattern(text, graph.label_dict, graph.attribute_dict)


def vertex_ids(graph: PropertyGraph, *names: str) -> FrozenSet[int]:
    lookup = {name: i for i, name in enumerate(graph.vertex_names)}
    return frozenset(lookup[n] for n in names)


def mined_patterns(result: MiningResult) -> Dict[PathPattern, FrozenSet[int]]:
    """Every frequent pattern with its sources; length-0 ones by tidset size only."""
    found: Dict[PathPattern, FrozenSet[int]] = {}
    for level in result.frequent.levels[1:]:
        for p, table in level.items():
            found[p] = table.sources
    for p, table in result.frequent.reachability.items():
        found[p] = table.sources
    return found


def rule_lines(rules: List[Rule], graph: PropertyGraph) -> List[str]:
    return [crud_rule_files.serialize_rule(rule, graph) for rule in rules]


def rule_keys(rules: List[Rule]) -> List[tuple]:
    return [(r.antecedent, r.consequent, r.asupp) for r in rules]
