import argparse

from ..core.exceptions import UsageError
from ..schemas.summary import GraphSummary
from ..services.miner_service import PathRuleMiner
from .common import add_graph_arguments, add_threshold_arguments, config_from, load_graph


def register(subparsers) -> None:
    parser = subparsers.add_parser("stats", help="print graph statistics and per-thread load estimates")
    add_graph_arguments(parser)
    add_threshold_arguments(parser, required=False)
    parser.add_argument("--threads", type=int, default=1, help="threads to estimate loads for")
    parser.set_defaults(func=run_stats)


def run_stats(args: argparse.Namespace) -> int:
    """Graph description; with --min-support and --max-length also the partition loads."""
    if (args.min_support is None) != (args.max_length is None):
        raise UsageError("stats: --min-support and --max-length must be given together")
    config = config_from(args) if args.min_support is not None else None
    graph = load_graph(args)
    summary = GraphSummary(**graph.describe())

    if config is not None:
        plan = PathRuleMiner(graph, config).estimate_partition()
        summary.thread_loads = list(plan.costs)
        summary.thread_sizes = [len(part) for part in plan.assignments]
        summary.eliminated_vertices = graph.num_vertices - len(plan.vertices)

    print(summary.model_dump_json(indent=2, exclude_none=True))
    return 0
