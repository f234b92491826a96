from ..core.configs import settings
from . import evaluate, gen, mine, oracle, stats
from .common import CliArgumentParser


def build_parser() -> CliArgumentParser:
    parser = CliArgumentParser(prog="path-rule-miner", description=settings.APP_DESC)
    parser.add_argument("--version", action="version", version=f"%(prog)s {settings.APP_VERSION}")
    parser.add_argument("--log-level", default=None, help=f"logging level (default {settings.LOG_LEVEL})")
    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=CliArgumentParser)

    mine.register(subparsers)
    oracle.register(subparsers)
    gen.register(subparsers)
    stats.register(subparsers)
    evaluate.register(subparsers)
    return parser
