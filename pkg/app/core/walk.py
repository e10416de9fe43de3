"""Discrete-time quantum walk on the line with a two-level coin.

One step applies the coin U_theta = [[cos, sin], [sin, -cos]] at every site and
then the conditional shift: chirality + moves to n + 1, chirality - to n - 1.
"""
import logging
import math
from typing import Optional

import numpy as np

from app.core.config import InitKind
from app.core.errors import WindowOverflow, WindowTooSmall
from app.core.qubit import density_from_ab
from app.models.qubit import QubitDensity
from app.models.walk import CoinSpec, EquilibriumSample, InitialSpec, Trajectory, WalkState

logger = logging.getLogger(__name__)

SAMPLE_TOL = 1e-10
CONVERGENCE_TOL = 5e-3
CONVERGENCE_FRACTION = 0.1


def init_state(spec: InitialSpec, window_halfwidth: int) -> WalkState:
    needed = spec.support_halfwidth
    if window_halfwidth < needed:
        raise WindowTooSmall(needed, window_halfwidth)

    size = 2 * window_halfwidth + 1
    d = np.zeros(size, dtype=complex)
    e = np.zeros(size, dtype=complex)
    up, down = spec.chirality
    center = window_halfwidth

    if spec.kind is InitKind.LOCALIZED:
        d[center] = up
        e[center] = down
    else:
        n = np.arange(-needed, needed + 1)
        envelope = np.exp(-(n**2) / (4 * spec.xi**2)) / (2 * math.pi * spec.xi**2) ** 0.25
        d[center - needed : center + needed + 1] = envelope * up
        e[center - needed : center + needed + 1] = envelope * down
        norm = math.sqrt(float(np.sum(np.abs(d) ** 2 + np.abs(e) ** 2)))
        d /= norm
        e /= norm

    return WalkState(offset=-window_halfwidth, d=d, e=e, t=0)


def _advance(d: np.ndarray, e: np.ndarray, c: float, s: float) -> tuple:
    next_d = np.zeros_like(d)
    next_e = np.zeros_like(e)
    next_d[1:] = c * d[:-1] + s * e[:-1]
    next_e[:-1] = s * d[1:] - c * e[1:]
    return next_d, next_e


def step(state: WalkState, coin: CoinSpec) -> WalkState:
    # the coin mixes chiralities: amplitude on either edge slot would be shifted out
    if state.d[0] != 0 or state.e[0] != 0 or state.d[-1] != 0 or state.e[-1] != 0:
        raise WindowOverflow(state.t + 1)
    c, s = math.cos(coin.theta), math.sin(coin.theta)
    d, e = _advance(state.d, state.e, c, s)
    return WalkState(offset=state.offset, d=d, e=e, t=state.t + 1)


def coin_rdo(state: WalkState) -> QubitDensity:
    """Partial trace over positions."""
    a = float(np.sum(np.abs(state.d) ** 2)) - 0.5
    b = complex(np.vdot(state.e, state.d))
    return density_from_ab(a, b, tol=SAMPLE_TOL)


def window_for(spec: InitialSpec, t_max: int) -> int:
    return spec.support_halfwidth + t_max + 1


def run_trajectory(spec: InitialSpec, coin: CoinSpec, t_max: int) -> Trajectory:
    """Evolve t_max steps in a window the walk cannot leave, recording a(t), b(t)."""
    state = init_state(spec, window_for(spec, t_max))
    a = np.empty(t_max + 1)
    b = np.empty(t_max + 1, dtype=complex)
    norm = np.empty(t_max + 1)
    for t in range(t_max + 1):
        if t:
            state = step(state, coin)
        rho = coin_rdo(state)
        a[t], b[t], norm[t] = rho.a, rho.b, state.norm()
    return Trajectory(a=a, b=b, norm=norm)


def convergence_residual(series: np.ndarray) -> float:
    """Max deviation of the running mean from its final value over the last tenth of steps."""
    running = np.cumsum(series) / np.arange(1, len(series) + 1)
    window = max(2, math.ceil(CONVERGENCE_FRACTION * len(series)))
    return float(np.max(np.abs(running[-window:] - running[-1])))


def evolve_and_average(
    spec: InitialSpec,
    coin: CoinSpec,
    t_burn: Optional[int] = None,
    t_max: int = 400,
    tolerance: float = CONVERGENCE_TOL,
) -> EquilibriumSample:
    if t_burn is None:
        t_burn = t_max // 4
    if not 0 <= t_burn < t_max:
        raise ValueError(f"need 0 <= t_burn < t_max, got t_burn={t_burn}, t_max={t_max}")

    trajectory = run_trajectory(spec, coin, t_max)
    a_window = trajectory.a[t_burn:]
    b_window = trajectory.b[t_burn:]
    residual = max(convergence_residual(a_window), convergence_residual(b_window))
    converged = residual < tolerance
    if not converged:
        logger.debug(
            "Unconverged average for theta=%.4f gamma=%.4f phi=%.4f (residual %.2e)",
            coin.theta, spec.gamma, spec.phi, residual,
        )

    a_bar = float(np.mean(a_window))
    b_bar = complex(np.mean(b_window))
    # raises PositivityViolation if rounding pushed the average off the sphere
    density_from_ab(a_bar, b_bar, tol=SAMPLE_TOL)
    return EquilibriumSample(a_bar=a_bar, b_bar=b_bar, converged=converged, residual=residual)
