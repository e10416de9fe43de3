import argparse
import logging

from app.cli.deps import add_config_arguments, get_config
from app.core.sweep import run_sweep
from app.utils.export import summary_path_for

logger = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("sweep", help="(gamma, phi) grid per coin bias with thermality verdicts")
    add_config_arguments(parser)
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    config = get_config(args)
    result = run_sweep(config)

    for theta, verdict in result.verdicts.items():
        records = [r for r in result.records if r.theta == theta]
        negative = sum(r.T_ent < 0 for r in records)
        if verdict is None:
            line = f"theta={theta:.6g}: no verdict (too few off-equator samples)"
        else:
            line = (
                f"theta={theta:.6g}: kappa_hat={verdict.kappa_hat.real:.4f}{verdict.kappa_hat.imag:+.4f}i "
                f"residual={verdict.residual:.3e} n_used={verdict.n_used} "
                f"{'thermal' if verdict.is_thermal else 'NOT thermal'}"
            )
        if negative:
            line += f"; {negative} negative-temperature samples (alpha > pi/2)"
        print(line)

    unconverged = sum(not r.converged for r in result.records)
    if unconverged:
        print(f"{unconverged} of {len(result.records)} samples unconverged; consider a larger --t-max")
    print(f"Wrote {config.OUTPUT_PATH} and {summary_path_for(config.OUTPUT_PATH)}")
    return 0
