import logging
import math
from dataclasses import dataclass
from multiprocessing import Pool
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from app.core.config import InitKind, SweepConfig
from app.core.errors import GridPointError, InsufficientEnsemble, QWalkError
from app.core.qubit import density_from_ab, eigenvalues, von_neumann_entropy
from app.core.thermo import (
    cos_alpha,
    ensemble_from_samples,
    estimate_kappa,
    isotherm_plane,
    kappa_for_coin,
    plane_distance_origin,
    reported_temperature,
    temperature_from_alpha,
)
from app.core.walk import SAMPLE_TOL, evolve_and_average, run_trajectory
from app.models.thermo import ThermalVerdict
from app.models.walk import CoinSpec, EquilibriumSample, InitialSpec
from app.schemas.isotherm import IsothermRow
from app.schemas.sweep import SweepRecord, ThetaSummary
from app.schemas.trajectory import TrajectoryRow
from app.utils.export import summary_path_for, write_rows_csv, write_summary_json

logger = logging.getLogger(__name__)

GridPoint = Tuple[float, float, float]


@dataclass(frozen=True)
class SweepResult:
    records: List[SweepRecord]
    verdicts: Dict[float, Optional[ThermalVerdict]]


def grid_angles(gamma_steps: int, phi_steps: int) -> Tuple[np.ndarray, np.ndarray]:
    """gamma uniform on [0, pi] inclusive, phi uniform on [0, 2 pi) half-open."""
    gammas = np.linspace(0.0, math.pi, gamma_steps)
    phis = 2 * math.pi * np.arange(phi_steps) / phi_steps
    return gammas, phis


def grid_points(config: SweepConfig, thetas: Optional[Sequence[float]] = None) -> List[GridPoint]:
    gammas, phis = grid_angles(config.GAMMA_STEPS, config.PHI_STEPS)
    thetas = config.THETAS if thetas is None else thetas
    return [(float(t), float(g), float(p)) for t in thetas for g in gammas for p in phis]


def _simulate_point(job: Tuple[GridPoint, InitKind, float, int, int, float]) -> EquilibriumSample:
    (theta, gamma, phi), kind, xi, t_burn, t_max, tolerance = job
    try:
        spec = InitialSpec(kind=kind, gamma=gamma, phi=phi, xi=xi)
        return evolve_and_average(spec, CoinSpec(theta), t_burn=t_burn, t_max=t_max, tolerance=tolerance)
    except (QWalkError, ValueError) as exc:
        raise GridPointError((theta, gamma, phi), exc) from exc


def simulate_grid(
    points: Sequence[GridPoint],
    kind: InitKind,
    xi: float,
    t_burn: int,
    t_max: int,
    tolerance: float,
    workers: int = 1,
) -> List[EquilibriumSample]:
    """Evaluate every grid point; results come back in grid order."""
    jobs = [(point, kind, xi, t_burn, t_max, tolerance) for point in points]
    if workers <= 1:
        return [_simulate_point(job) for job in jobs]
    with Pool(processes=workers) as pool:
        return pool.map(_simulate_point, jobs)


def build_record(point: GridPoint, sample: EquilibriumSample, config: SweepConfig) -> SweepRecord:
    theta, gamma, phi = point
    rho = density_from_ab(sample.a_bar, sample.b_bar, tol=SAMPLE_TOL)
    lambda_plus, _ = eigenvalues(rho)
    return SweepRecord(
        theta=theta,
        gamma=gamma,
        phi=phi,
        a_bar=sample.a_bar,
        b_re=sample.b_bar.real,
        b_im=sample.b_bar.imag,
        cos_alpha_pred=cos_alpha(kappa_for_coin(theta), gamma, phi),
        lambda_plus=lambda_plus,
        S_vN=von_neumann_entropy(rho),
        T_ent=reported_temperature(rho, config.EPSILON, config.PURE_TOL, config.MIXED_TOL),
        converged=sample.converged,
        residual=sample.residual,
    )


def off_equator(records: Sequence[SweepRecord], margin: float) -> List[SweepRecord]:
    return [r for r in records if math.hypot(r.a_bar, r.b_re, r.b_im) >= margin]


def verdict_for(records: Sequence[SweepRecord], config: SweepConfig) -> Optional[ThermalVerdict]:
    """Proposition-style thermality verdict over the off-equator samples of one coin bias."""
    kept = off_equator(records, config.EQUATOR_MARGIN)
    ensemble = ensemble_from_samples((r.gamma, r.phi, r.a_bar, complex(r.b_re, r.b_im)) for r in kept)
    try:
        return estimate_kappa(ensemble, threshold=config.THERMAL_THRESHOLD, a_floor=config.A_FLOOR)
    except InsufficientEnsemble as exc:
        logger.warning("No thermality verdict for theta=%.6g: %s", records[0].theta if records else math.nan, exc)
        return None


def summarize(verdict: Optional[ThermalVerdict]) -> ThetaSummary:
    if verdict is None:
        return ThetaSummary(is_thermal=False, n_used=0)
    return ThetaSummary(
        kappa_hat=[verdict.kappa_hat.real, verdict.kappa_hat.imag],
        residual=verdict.residual,
        is_thermal=verdict.is_thermal,
        n_used=verdict.n_used,
    )


def run_sweep(config: SweepConfig, write: bool = True) -> SweepResult:
    points = grid_points(config)
    logger.info(
        "Sweeping %d grid points (%s walker, t_max=%d, workers=%d)",
        len(points), config.INIT_KIND.value, config.T_MAX, config.WORKERS,
    )
    samples = simulate_grid(
        points,
        config.INIT_KIND,
        config.XI,
        config.BURN_IN,
        config.T_MAX,
        config.CONVERGENCE_TOL,
        workers=config.WORKERS,
    )
    records = [build_record(point, sample, config) for point, sample in zip(points, samples)]

    unconverged = sum(not record.converged for record in records)
    if unconverged:
        logger.warning("%d of %d samples did not converge", unconverged, len(records))

    verdicts: Dict[float, Optional[ThermalVerdict]] = {}
    for theta in config.THETAS:
        verdicts[theta] = verdict_for([r for r in records if r.theta == theta], config)

    if write:
        write_rows_csv(records, SweepRecord, config.OUTPUT_PATH)
        summary = {repr(theta): summarize(verdict) for theta, verdict in verdicts.items()}
        write_summary_json(summary, summary_path_for(config.OUTPUT_PATH))
    return SweepResult(records=records, verdicts=verdicts)


def isotherm_table(kappa: complex, alpha_steps: int, epsilon: float = 1.0) -> List[IsothermRow]:
    """Analytic isotherm planes over alpha in [0, pi]."""
    if alpha_steps < 2:
        raise ValueError("alpha_steps must be >= 2")
    rows = []
    for alpha in np.linspace(0.0, math.pi, alpha_steps):
        plane = isotherm_plane(kappa, float(alpha))
        rows.append(
            IsothermRow(
                alpha=float(alpha),
                rhs=plane.rhs,
                distance=plane_distance_origin(plane),
                T_ent=temperature_from_alpha(float(alpha), epsilon),
            )
        )
    return rows


def trajectory_table(spec: InitialSpec, coin: CoinSpec, t_max: int) -> List[TrajectoryRow]:
    trajectory = run_trajectory(spec, coin, t_max)
    rows = []
    for t, (a, b, norm) in enumerate(zip(trajectory.a, trajectory.b, trajectory.norm)):
        rho = density_from_ab(a, b, tol=SAMPLE_TOL)
        rows.append(
            TrajectoryRow(
                t=t,
                a=float(a),
                b_re=float(b.real),
                b_im=float(b.imag),
                lambda_plus=eigenvalues(rho)[0],
                S_vN=von_neumann_entropy(rho),
                norm=float(norm),
            )
        )
    return rows


def write_isotherms(rows: Sequence[IsothermRow], path: Path) -> Path:
    return write_rows_csv(rows, IsothermRow, path)


def write_trajectory(rows: Sequence[TrajectoryRow], path: Path) -> Path:
    return write_rows_csv(rows, TrajectoryRow, path)
