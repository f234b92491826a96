import argparse
import sys

from ..crud.rule_files import crud_rule_files
from ..services.oracle_service import OracleStrategy, compare_rule_sets, oracle_mine
from .common import add_graph_arguments, add_threshold_arguments, config_from, load_graph, open_output


def register(subparsers) -> None:
    parser = subparsers.add_parser("oracle", help="exhaustive reference mining for small graphs")
    add_graph_arguments(parser)
    add_threshold_arguments(parser)
    parser.add_argument(
        "--strategy",
        choices=[s.value for s in OracleStrategy],
        default=OracleStrategy.DFS.value,
        help="walk enumeration: per-source DFS or iterated hash join",
    )
    parser.add_argument("--output", default=None, help="write the oracle's rules as JSON lines")
    parser.add_argument("--diff", default=None, help="rule file to compare against the oracle's rules")
    parser.set_defaults(func=run_oracle)


def run_oracle(args: argparse.Namespace) -> int:
    config = config_from(args)
    graph = load_graph(args)
    result = oracle_mine(
        graph,
        config.threshold(graph.num_vertices),
        config.max_length,
        strategy=OracleStrategy(args.strategy),
        unbounded_reachability=args.unbounded_reachability,
    )

    if args.output is not None or args.diff is None:
        with open_output(args.output) as sink:
            crud_rule_files.write_rules(result.rules, graph, sink)

    if args.diff is not None:
        reference = [crud_rule_files.record_from_rule(rule, graph) for rule in result.rules]
        candidate = crud_rule_files.read_rule_file(args.diff)
        report = compare_rule_sets(reference, candidate)
        # rules already on stdout keep the report off it
        print(report.render(), file=sys.stderr if args.output == "-" else sys.stdout)
    return 0
