import argparse
import logging
import sys
from typing import Optional, Sequence

from app.cli.commands import isotherms, simulate, sweep, verify
from app.core.errors import QWalkError
from app.core.logging import setup_logging

logger = logging.getLogger(__name__)

EXIT_ERROR = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qwalk-thermo",
        description="Quantum-walk coin thermalization: simulate, sweep, isotherms, verify",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in (simulate, sweep, isotherms, verify):
        command.register(subparsers)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging(args.log_level)
    try:
        return args.handler(args)
    except (QWalkError, ValueError, OSError) as exc:
        # pydantic.ValidationError is a ValueError
        logger.error("%s", exc)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
