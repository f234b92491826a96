import io
from itertools import combinations

import pytest

from src.core.exceptions import GraphFormatError
from src.crud.graph_files import crud_graph_files

from src.services.generator_service import graph_generator_service

from .support import build_graph, vertex_ids


def test_campus_sizes(campus):
    assert campus.num_vertices == 12
    assert campus.num_edges == 15
    assert campus.label_dict.names == ("Follows", "LocatedIn", "BelongTo", "Likes")
    assert campus.num_attributes == 8
    assert campus.implicit_vertices == 0
    assert campus.max_in_degree() == 2


def test_count_indexes(campus):
    follows = campus.label_dict.id_of("Follows")
    belong = campus.label_dict.id_of("BelongTo")
    cs = campus.attribute_dict.id_of("CS")
    male = campus.attribute_dict.id_of("Male")
    art = campus.attribute_dict.id_of("Art")
    uni = campus.attribute_dict.id_of("Uni")

    assert campus.count_sources((cs,), follows) == 3
    assert campus.count_sources((cs, male), follows) == 2
    assert campus.count_target_edges((art,), follows) == 3
    assert campus.count_target_edges((uni,), belong) == 3
    assert campus.source_count((cs,), belong).count == 2
    assert campus.target_edge_count((male, art), follows).count == 1


def test_vertices_with(campus):
    cs = campus.attribute_dict.id_of("CS")
    male = campus.attribute_dict.id_of("Male")
    assert campus.vertices_with((cs, male)) == vertex_ids(campus, "v8", "v9")
    assert campus.vertices_with(()) == frozenset(range(12))


def test_multi_edges_count_in_indexes_but_not_adjacency():
    graph = build_graph(
        {"x": ["a"], "y": ["b"]},
        [("x", "l", "y"), ("x", "l", "y")],
    )
    assert graph.num_edges == 2
    assert graph.out_neighbors(0, 0) == (1,)
    assert graph.out_edge_count(0) == 2
    assert graph.count_target_edges((graph.attribute_dict.id_of("b"),), 0) == 2
    assert graph.count_sources((graph.attribute_dict.id_of("a"),), 0) == 1


def test_loader_skips_comments_and_creates_implicit_vertices():
    vertices = io.StringIO("# header\nv1\tA,B\n\nv2\n")
    edges = io.StringIO("v1\tknows\tv3\n# trailing comment\n")
    graph = crud_graph_files.load_graph(vertices, edges)

    assert graph.vertex_names == ("v1", "v2", "v3")
    assert graph.implicit_vertices == 1
    assert graph.attribute_sets[2] == ()
    assert graph.describe()["implicit_vertices"] == 1


@pytest.mark.parametrize(
    "vertex_text, edge_text, line",
    [
        ("v1\tA\nv1\tB\n", "", 2),
        ("v1\tA,,B\n", "", 1),
        ("v1\tA\n", "v1\tknows\n", 1),
        ("v1\tA\n", "v1\t\tv1\n", 1),
        ("v1\tA{x}\n", "", 1),
        ("v1\tA\n", "v1\tgoes>to\tv1\n", 1),
        ("v1\tA\n", "v1\tnext*\tv1\n", 1),
    ],
)
def test_loader_rejects_malformed_lines(vertex_text, edge_text, line):
    with pytest.raises(GraphFormatError) as exc:
        crud_graph_files.load_graph(io.StringIO(vertex_text), io.StringIO(edge_text))
    assert exc.value.line_number == line
    assert exc.value.exit_code == 2


def test_missing_file_is_a_format_error(tmp_path):
    with pytest.raises(GraphFormatError):
        crud_graph_files.load_graph_files(tmp_path / "nope.tsv", tmp_path / "nope_edges.tsv")


def test_save_and_reload_keeps_the_graph(campus, tmp_path):
    vertex_path, edge_path = tmp_path / "g.vertices.tsv", tmp_path / "g.edges.tsv"
    crud_graph_files.save_graph_files(campus, vertex_path, edge_path)
    again = crud_graph_files.load_graph_files(vertex_path, edge_path)

    assert again.vertex_names == campus.vertex_names
    assert again.attribute_sets == campus.attribute_sets
    assert again.edges == campus.edges


def test_count_indexes_agree_with_a_scan(random_graph):
    for seed in range(5):
        graph = random_graph(seed=seed, vertices=25, edges=60, labels=3, attributes=4)
        singles = [(a,) for a in graph.attributes]
        for label in graph.labels:
            for attrs in singles + list(combinations(graph.attributes, 2)):
                wanted = set(attrs)
                sources = {s for s, l, _ in graph.edges if l == label and wanted <= set(graph.attribute_sets[s])}
                targets = sum(1 for _, l, d in graph.edges if l == label and wanted <= set(graph.attribute_sets[d]))
                assert graph.count_sources(attrs, label) == len(sources)
                assert graph.count_target_edges(attrs, label) == targets
                # more attributes can only narrow the counts
                for a in attrs:
                    assert graph.count_sources(attrs, label) <= graph.count_sources((a,), label)
                    assert graph.count_target_edges(attrs, label) <= graph.count_target_edges((a,), label)


def test_degree_sums_match_edge_count(random_graph):
    for seed in range(5):
        graph = random_graph(seed=seed, vertices=30, edges=45)
        assert int(graph.out_degree.sum()) == int(graph.in_degree.sum()) == graph.num_edges
        assert sum(graph.out_edge_count(v) for v in range(graph.num_vertices)) == graph.num_edges


def test_max_in_degree_on_star_and_edgeless_graphs():
    leaves = {f"x{i}": ["leaf"] for i in range(5)}
    inward = build_graph({"hub": ["hub"], **leaves}, [(leaf, "l", "hub") for leaf in leaves])
    outward = build_graph({"hub": ["hub"], **leaves}, [("hub", "l", leaf) for leaf in leaves])
    assert inward.max_in_degree() == 5
    assert outward.max_in_degree() == 1
    assert build_graph({"x": ["a"], "y": []}, []).max_in_degree() == 0
    assert build_graph({}, []).max_in_degree() == 0


def test_generated_graph_survives_save_and_load():
    graph = graph_generator_service.generate(
        num_vertices=50, num_edges=100, num_labels=4, num_attributes=6, attrs_per_vertex=2, seed=21,
    )
    vertex_sink, edge_sink = io.StringIO(), io.StringIO()
    crud_graph_files.save_graph(graph, vertex_sink, edge_sink)
    again = crud_graph_files.load_graph(io.StringIO(vertex_sink.getvalue()), io.StringIO(edge_sink.getvalue()))

    assert again.num_vertices == 50 and again.num_edges == 100
    assert again.vertex_names == graph.vertex_names
    assert again.attribute_dict.names == graph.attribute_dict.names
    assert again.label_dict.names == graph.label_dict.names
    assert again.attribute_sets == graph.attribute_sets
    assert again.edges == graph.edges
