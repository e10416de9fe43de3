import argparse
import logging
from pathlib import Path

from app.cli.deps import add_config_arguments, get_config
from app.core.config import parse_angle
from app.core.sweep import trajectory_table, write_trajectory
from app.models.walk import CoinSpec, InitialSpec

logger = logging.getLogger(__name__)

DEFAULT_OUT = Path("trajectory.csv")


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("simulate", help="time series a(t), b(t), S_vN(t) of a single walk")
    add_config_arguments(parser)
    parser.add_argument("--gamma", type=parse_angle, default=0.0, help="initial polar angle")
    parser.add_argument("--phi", type=parse_angle, default=0.0, help="initial azimuth")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    config = get_config(args)
    theta = config.THETAS[0]
    if len(config.THETAS) > 1:
        logger.warning("simulate runs a single walk; using theta=%.6g", theta)

    spec = InitialSpec(kind=config.INIT_KIND, gamma=args.gamma, phi=args.phi, xi=config.XI)
    rows = trajectory_table(spec, CoinSpec(theta), config.T_MAX)
    path = write_trajectory(rows, Path(args.out) if args.out else DEFAULT_OUT)

    last = rows[-1]
    print(f"t={last.t} a={last.a:.6f} b={last.b_re:.6f}{last.b_im:+.6f}i S_vN={last.S_vN:.6f} -> {path}")
    return 0
