import argparse

from ..core.exceptions import UsageError
from ..crud.rule_files import crud_rule_files
from ..models.pattern import parse_pattern
from ..services.miner_service import evaluate_rule
from .common import add_graph_arguments, bound_from, load_graph


def register(subparsers) -> None:
    parser = subparsers.add_parser("evaluate", help="exact metrics for one rule, wildcards allowed")
    add_graph_arguments(parser)
    parser.add_argument("--rule", required=True, help='rule text, e.g. "<{a}> => <{} -l-> {b}>"')
    parser.add_argument("--max-length", type=int, required=True, help="depth bound for reachability patterns")
    parser.add_argument("--unbounded-reachability", action="store_true")
    parser.set_defaults(func=run_evaluate)


def run_evaluate(args: argparse.Namespace) -> int:
    if args.max_length < 1:
        raise UsageError("evaluate: --max-length must be at least 1")
    sides = args.rule.split("=>")
    if len(sides) != 2:
        raise UsageError("evaluate: --rule must contain exactly one '=>'")
    graph = load_graph(args)
    antecedent = parse_pattern(sides[0], graph.label_dict, graph.attribute_dict)
    consequent = parse_pattern(sides[1], graph.label_dict, graph.attribute_dict)
    rule = evaluate_rule(graph, antecedent, consequent, args.max_length, bound_from(args))
    print(crud_rule_files.serialize_rule(rule, graph))
    return 0
