"""Thermality of equilibrium families and the Bloch-sphere geometry of thermal states.

A family of equilibria rho(a, b) is an initial-state-dependent thermal state when
b = kappa a with one complex kappa for every initial condition. Its entanglement
Hamiltonian then has the fixed field direction v = (Re kappa, -Im kappa, 1), and the
initial state only sets the temperature through the angle alpha between the initial
Bloch vector and v.
"""
import logging
import math
from typing import Iterable, List, Tuple

import numpy as np

from app.core.errors import InsufficientEnsemble
from app.core.qubit import (
    bloch_from_density,
    eigenvalues,
    ent_temperature,
    density_from_ab,
    von_neumann_entropy,
)
from app.models.qubit import EntHamiltonian, QubitDensity
from app.models.thermo import EnsemblePoint, IsothermPlane, SampleDiagnostic, ThermalVerdict

logger = logging.getLogger(__name__)

THERMAL_THRESHOLD = 0.02
A_FLOOR = 1e-3
MIN_ENSEMBLE = 3
ANGLE_TOL = 1e-12


def estimate_kappa(
    ensemble: Iterable[EnsemblePoint],
    threshold: float = THERMAL_THRESHOLD,
    a_floor: float = A_FLOOR,
) -> ThermalVerdict:
    """Least-squares fit of b = kappa a with real regressor a."""
    points = list(ensemble)
    retained = [point for point in points if abs(point.a) > a_floor]
    distinct = {(point.gamma, point.phi) for point in retained}
    if len(retained) < MIN_ENSEMBLE or len(distinct) < 2:
        raise InsufficientEnsemble(len(retained), a_floor)

    a = np.array([point.a for point in retained], dtype=complex)
    b = np.array([point.b for point in retained], dtype=complex)
    solution, *_ = np.linalg.lstsq(a[:, None], b, rcond=None)
    kappa_hat = complex(solution[0])

    diagnostics = []
    for point in points:
        scale = max(abs(point.a), a_floor)
        keep = abs(point.a) > a_floor
        diagnostics.append(
            SampleDiagnostic(
                gamma=point.gamma,
                phi=point.phi,
                a=point.a,
                b=point.b,
                ratio=point.b / point.a if keep else complex(math.nan, math.nan),
                deviation=abs(point.b - kappa_hat * point.a) / scale,
                retained=keep,
            )
        )
    residual = max(diag.deviation for diag in diagnostics if diag.retained)
    is_thermal = residual < threshold and len(retained) >= MIN_ENSEMBLE
    logger.debug("kappa_hat=%s residual=%.3e n_used=%d", kappa_hat, residual, len(retained))
    return ThermalVerdict(
        kappa_hat=kappa_hat,
        residual=residual,
        n_used=len(retained),
        is_thermal=is_thermal,
        threshold=threshold,
        diagnostics=tuple(diagnostics),
    )


def initial_bloch(gamma: float, phi: float) -> np.ndarray:
    return np.array(
        [math.sin(gamma) * math.cos(phi), math.sin(gamma) * math.sin(phi), math.cos(gamma)]
    )


def field_vector(kappa: complex) -> np.ndarray:
    kappa = complex(kappa)
    return np.array([kappa.real, -kappa.imag, 1.0])


def cos_alpha(kappa: complex, gamma: float, phi: float) -> float:
    """Cosine of the angle between the initial Bloch vector and v."""
    v = field_vector(kappa)
    value = float(initial_bloch(gamma, phi) @ v) / math.sqrt(1.0 + abs(kappa) ** 2)
    return min(1.0, max(-1.0, value))


def kappa_for_coin(theta: float) -> float:
    return math.tan(theta)


def coin_field_direction(theta: float) -> Tuple[float, float, float]:
    return (math.sin(theta), 0.0, math.cos(theta))


def coin_eigen_poles(theta: float) -> Tuple[Tuple[float, float], Tuple[float, float]]:
    """(gamma, phi) of the two coin eigenstates, which never entangle with the walker."""
    return (theta, 0.0), (math.pi - theta, math.pi)


def predicted_b_gaussian(theta: float, gamma: float, phi: float) -> float:
    if not 0.0 < theta < math.pi / 2:
        raise ValueError(f"coin bias {theta} is outside (0, pi/2)")
    return 0.5 * math.sin(theta) * cos_alpha(kappa_for_coin(theta), gamma, phi)


def predicted_b_localized_hadamard(gamma: float, phi: float) -> complex:
    """Asymptotic coherence of the Hadamard walk started at the origin, b = sum d_n e_n^*."""
    prefactor = 0.5 * (1 - 1 / math.sqrt(2))
    return prefactor * complex(
        math.cos(gamma) + math.sin(gamma) * math.cos(phi),
        -math.sqrt(2) * math.sin(gamma) * math.sin(phi),
    )


def romanelli_kappa(theta: float, b: complex) -> complex:
    """kappa implied by a = Re(b) / tan(theta) together with b = kappa a."""
    b = complex(b)
    return (1 + 1j * b.imag / b.real) * math.tan(theta)


def romanelli_gap(theta: float, a: float, b: complex) -> float:
    return abs(a - complex(b).real / math.tan(theta))


def thermal_density_from_alpha(kappa: complex, alpha: float) -> QubitDensity:
    kappa = complex(kappa)
    a = math.cos(alpha) / (2 * math.sqrt(1.0 + abs(kappa) ** 2))
    return density_from_ab(a, kappa * a)


def temperature_from_alpha(alpha: float, epsilon: float = 1.0) -> float:
    """-epsilon / log(tan(alpha / 2)): +inf on the equator, 0 at the poles."""
    cosine = math.cos(alpha)
    if abs(cosine) <= ANGLE_TOL:
        return math.inf
    if abs(cosine) >= 1.0 - ANGLE_TOL:
        return 0.0
    return -epsilon / math.log(math.tan(alpha / 2))


def isotherm_plane(kappa: complex, alpha0: float) -> IsothermPlane:
    normal = field_vector(kappa)
    rhs = math.sqrt(1.0 + abs(kappa) ** 2) * math.cos(alpha0)
    return IsothermPlane(normal=tuple(float(x) for x in normal), rhs=rhs)


def plane_distance_origin(plane: IsothermPlane) -> float:
    return abs(plane.rhs) / float(np.linalg.norm(plane.normal))


def heat_entropy_check(
    kappa: complex, epsilon: float, alpha: float, d_alpha: float
) -> Tuple[float, float]:
    """Heat delta Q = sum_j E_j d lambda_j against T_ent dS between two nearby thermal states."""
    if d_alpha == 0:
        raise ValueError("d_alpha must be nonzero")
    for angle in (alpha, alpha + d_alpha):
        if not 0.0 < angle < math.pi:
            raise ValueError(f"alpha {angle} is outside (0, pi)")

    hamiltonian = EntHamiltonian.from_kappa(epsilon, kappa)
    field = np.asarray(hamiltonian.field)
    energies = np.array([-epsilon, epsilon])

    def populations(rho: QubitDensity) -> np.ndarray:
        # populations of the aligned (ground) and anti-aligned levels of H
        projection = float(bloch_from_density(rho).as_array() @ field)
        return np.array([0.5 * (1 + projection), 0.5 * (1 - projection)])

    start = thermal_density_from_alpha(kappa, alpha)
    end = thermal_density_from_alpha(kappa, alpha + d_alpha)
    middle = thermal_density_from_alpha(kappa, alpha + d_alpha / 2)

    delta_q = float(energies @ (populations(end) - populations(start)))
    delta_s = von_neumann_entropy(end) - von_neumann_entropy(start)
    return delta_q, ent_temperature(middle, epsilon) * delta_s


def reported_temperature(
    rho: QubitDensity,
    epsilon: float = 1.0,
    pure_tol: float = 0.0,
    mixed_tol: float = 0.0,
) -> float:
    """ent_temperature with simulated states snapped to the pure and maximally mixed limits."""
    _, lambda_minus = eigenvalues(rho)
    if lambda_minus <= pure_tol:
        return 0.0
    if rho.radius <= mixed_tol:
        return math.inf
    return ent_temperature(rho, epsilon)


def ensemble_from_samples(rows: Iterable[Tuple[float, float, float, complex]]) -> List[EnsemblePoint]:
    return [EnsemblePoint(gamma=g, phi=p, a=a, b=complex(b)) for g, p, a, b in rows]
