import argparse
import logging
from typing import Any, Dict

from app.core.config import SweepConfig, get_settings

# flag dest -> SweepConfig field
FLAG_FIELDS: Dict[str, str] = {
    "theta": "THETA_LIST",
    "init": "INIT_KIND",
    "xi": "XI",
    "gamma_steps": "GAMMA_STEPS",
    "phi_steps": "PHI_STEPS",
    "t_burn": "T_BURN",
    "t_max": "T_MAX",
    "threshold": "THERMAL_THRESHOLD",
    "a_floor": "A_FLOOR",
    "out": "OUTPUT_PATH",
    "workers": "WORKERS",
    "log_level": "LOG_LEVEL",
}


def add_config_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="dotenv-style KEY=value file; flags override it")
    parser.add_argument("--theta", help="comma list of coin biases, e.g. 'pi/6,pi/4'")
    parser.add_argument("--init", choices=["localized", "gaussian"])
    parser.add_argument("--xi", type=float, help="Gaussian packet width")
    parser.add_argument("--gamma-steps", type=int)
    parser.add_argument("--phi-steps", type=int)
    parser.add_argument("--t-burn", type=int)
    parser.add_argument("--t-max", type=int)
    parser.add_argument("--threshold", type=float, help="thermality residual threshold")
    parser.add_argument("--a-floor", type=float)
    parser.add_argument("--out", help="output CSV path")
    parser.add_argument("--workers", type=int, help="worker processes for the grid")
    parser.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR"])


def overrides_from_args(args: argparse.Namespace) -> Dict[str, Any]:
    return {field: getattr(args, dest, None) for dest, field in FLAG_FIELDS.items()}


def get_config(args: argparse.Namespace) -> SweepConfig:
    """Settings from --config (or .env) with command-line flags taking precedence."""
    config = get_settings(getattr(args, "config", None), **overrides_from_args(args))
    logging.getLogger("app").setLevel(config.LOG_LEVEL.upper())
    return config
