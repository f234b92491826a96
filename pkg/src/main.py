import logging
import sys
from typing import Optional, Sequence

from .cli import build_parser
from .core.exceptions import PathRuleError, UsageError
from .core.logger import logger

# _level_names() is 3.11+; it returns a copy of _nameToLevel.
_level_names = getattr(logging, "getLevelNamesMapping", lambda: dict(logging._nameToLevel))


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run one subcommand; returns 0 on success, 1 for usage or config errors, 2 for bad input files."""
    try:
        args = build_parser().parse_args(argv)
        if args.log_level:
            level = args.log_level.upper()
            if level not in _level_names():
                raise UsageError(f"unknown log level {args.log_level!r}")
            logger.setLevel(level)
        logger.debug(f"Running {args.command}")
        return args.func(args)
    except PathRuleError as e:
        logger.debug(f"{type(e).__name__} raised", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
