import argparse
from pathlib import Path

from app.cli.deps import get_config
from app.core.sweep import isotherm_table, write_isotherms

DEFAULT_OUT = Path("isotherms.csv")


def parse_kappa(value: str) -> complex:
    """Accepts Python complex literals and an ``i`` suffix, e.g. ``1-0.5i``."""
    return complex(value.replace(" ", "").replace("i", "j"))


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("isotherms", help="analytic isotherm planes for a given kappa")
    parser.add_argument("--config", help="dotenv-style KEY=value file")
    parser.add_argument("--kappa", type=parse_kappa, default=1.0)
    parser.add_argument("--alpha-steps", type=int, default=19)
    parser.add_argument("--out", help="output CSV path")
    parser.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    config = get_config(argparse.Namespace(config=args.config, log_level=args.log_level))
    rows = isotherm_table(args.kappa, args.alpha_steps, epsilon=config.EPSILON)
    path = write_isotherms(rows, Path(args.out) if args.out else DEFAULT_OUT)
    print(f"Wrote {len(rows)} isotherms for kappa={args.kappa} -> {path}")
    return 0
