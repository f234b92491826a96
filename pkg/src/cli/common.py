import argparse
import sys
from contextlib import contextmanager
from typing import Iterator, TextIO

from ..core.configs import settings
from ..core.exceptions import UsageError
from ..crud.graph_files import crud_graph_files
from ..models.graph import PropertyGraph
from ..schemas.miner_config import MinerConfig, ReachabilityBound


class CliArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that reports bad command lines as UsageError instead of exiting with 2."""

    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def add_graph_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--vertices", required=True, help="vertex TSV file: id<TAB>attr1,attr2,...")
    parser.add_argument("--edges", required=True, help="edge TSV file: src<TAB>label<TAB>dst")


def add_threshold_arguments(parser: argparse.ArgumentParser, required: bool = True) -> None:
    parser.add_argument(
        "--min-support",
        required=required,
        help="minimum support: an absolute count X or a fraction of |V| written X%%",
    )
    parser.add_argument("--max-length", type=int, required=required, help="maximum path length k")
    parser.add_argument(
        "--unbounded-reachability",
        action="store_true",
        help="match reachability patterns over paths of any length instead of at most k",
    )


def add_mining_arguments(parser: argparse.ArgumentParser) -> None:
    add_threshold_arguments(parser)
    parser.add_argument("--threads", type=int, default=settings.DEFAULT_THREADS, help="worker threads N")
    parser.add_argument("--candidate-reduction", type=float, default=None, help="candidate reduction factor ψ in (0, 1]")
    parser.add_argument("--sampling-rate", type=float, default=None, help="stratified sampling rate ρ in (0, 1]")
    parser.add_argument("--seed", type=int, default=settings.DEFAULT_SEED, help="seed for the sampling generator")
    parser.add_argument("--z", type=float, default=settings.DEFAULT_Z, help="z-value of the support confidence interval")
    parser.add_argument(
        "--baseline",
        action="store_true",
        help="disable suffix pruning and enhanced candidate generation",
    )


def load_graph(args: argparse.Namespace) -> PropertyGraph:
    return crud_graph_files.load_graph_files(args.vertices, args.edges)


def bound_from(args: argparse.Namespace) -> ReachabilityBound:
    return ReachabilityBound.UNBOUNDED if args.unbounded_reachability else ReachabilityBound.BOUNDED


def config_from(args: argparse.Namespace) -> MinerConfig:
    """Validated MinerConfig from the mining flags; raises ConfigError."""
    return MinerConfig.build(
        args.min_support,
        args.max_length,
        candidate_reduction=getattr(args, "candidate_reduction", None),
        sampling_rate=getattr(args, "sampling_rate", None),
        threads=getattr(args, "threads", settings.DEFAULT_THREADS),
        rng_seed=getattr(args, "seed", settings.DEFAULT_SEED),
        z=getattr(args, "z", settings.DEFAULT_Z),
        baseline=getattr(args, "baseline", False),
        reachability_bound=bound_from(args),
    )


@contextmanager
def open_output(path: str | None) -> Iterator[TextIO]:
    """The named file, or stdout for `-` or no path."""
    if path is None or path == "-":
        yield sys.stdout
        sys.stdout.flush()
        return
    with open(path, "w", encoding="utf-8", newline="\n") as sink:
        yield sink
