import argparse
import sys

from ..core.logger import logger
from ..crud.rule_files import crud_rule_files
from ..schemas.summary import MiningSummary
from ..services.miner_service import mine
from .common import add_graph_arguments, add_mining_arguments, config_from, load_graph, open_output


def register(subparsers) -> None:
    parser = subparsers.add_parser("mine", help="mine path association rules")
    add_graph_arguments(parser)
    add_mining_arguments(parser)
    parser.add_argument("--output", default="-", help="JSON-lines rule file (default: stdout)")
    parser.set_defaults(func=run_mine)


def run_mine(args: argparse.Namespace) -> int:
    """
    Mine the given graph and write one RuleRecord per line, canonically
    sorted. The per-phase summary goes to standard error.
    """
    config = config_from(args)
    graph = load_graph(args)
    result = mine(graph, config)

    with open_output(args.output) as sink:
        written = crud_rule_files.write_rules(result.rules, graph, sink)
    logger.info(f"Wrote {written} rules to {args.output}")

    mode = "baseline" if config.baseline else ("exact" if config.is_exact else "approximate")
    summary = MiningSummary(
        mode=mode,
        theta=result.theta,
        max_length=config.max_length,
        threads=config.threads,
        **result.counts(),
        phase_seconds=result.timings,
    )
    print(summary.render(), file=sys.stderr)
    return 0
