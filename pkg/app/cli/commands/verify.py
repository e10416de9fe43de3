import argparse

from app.cli.deps import add_config_arguments, get_config
from app.core.acceptance import verify


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("verify", help="run the acceptance suite; exit 0 iff every check passes")
    add_config_arguments(parser)
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    status, report = verify(get_config(args))
    print(report.render())
    return status
