import argparse

from ..core.configs import settings
from ..crud.graph_files import crud_graph_files
from ..services.generator_service import graph_generator_service


def register(subparsers) -> None:
    parser = subparsers.add_parser("gen", help="generate a seeded synthetic property graph")
    parser.add_argument("--vertices", type=int, required=True, help="number of vertices n")
    parser.add_argument("--edges", type=int, required=True, help="number of edges m")
    parser.add_argument("--labels", type=int, required=True, help="size of the label vocabulary")
    parser.add_argument("--attributes", type=int, required=True, help="size of the attribute vocabulary")
    parser.add_argument("--attrs-per-vertex", type=float, required=True, help="mean attributes per vertex λ")
    parser.add_argument("--attribute-skew", type=float, default=0.0, help="Zipf exponent for attribute popularity (0 = uniform)")
    parser.add_argument("--label-skew", type=float, default=0.0, help="Zipf exponent for label popularity (0 = uniform)")
    parser.add_argument("--seed", type=int, default=settings.DEFAULT_SEED)
    parser.add_argument("--out-prefix", required=True, help="writes PREFIX.vertices.tsv and PREFIX.edges.tsv")
    parser.set_defaults(func=run_gen)


def run_gen(args: argparse.Namespace) -> int:
    graph = graph_generator_service.generate(
        num_vertices=args.vertices,
        num_edges=args.edges,
        num_labels=args.labels,
        num_attributes=args.attributes,
        attrs_per_vertex=args.attrs_per_vertex,
        seed=args.seed,
        attribute_skew=args.attribute_skew,
        label_skew=args.label_skew,
    )
    crud_graph_files.save_graph_files(
        graph,
        f"{args.out_prefix}.vertices.tsv",
        f"{args.out_prefix}.edges.tsv",
    )
    return 0
