"""Exact 2x2 density-matrix algebra for the coin qubit.

States are parametrized as rho = [[1/2 + a, b], [b*, 1/2 - a]]. The entanglement
Hamiltonian is stored as -epsilon (n . sigma): at positive temperature the Bloch
vector points along the field n, so the sign of the temperature follows the
hemisphere of the state relative to n.
"""
import math
from typing import Sequence

import numpy as np
from scipy.special import entr

from app.core.errors import DegenerateState, NonOrthogonal, PositivityViolation
from app.models.qubit import BlochVector, EntHamiltonian, QubitDensity, SpectralDecomp

POSITIVITY_TOL = 1e-12
ORTHOGONALITY_TOL = 1e-10

_BASIS_PLUS = np.array([1.0, 0.0], dtype=complex)
_BASIS_MINUS = np.array([0.0, 1.0], dtype=complex)


def density_from_ab(a: float, b: complex, tol: float = POSITIVITY_TOL) -> QubitDensity:
    a, b = float(a), complex(b)
    excess = a * a + abs(b) ** 2 - 0.25
    if excess > tol:
        raise PositivityViolation(excess + 0.25, tol)
    return QubitDensity(a, b)


def density_from_matrix(matrix: np.ndarray, tol: float = POSITIVITY_TOL) -> QubitDensity:
    """Read (a, b) off a unit-trace Hermitian 2x2 matrix."""
    matrix = np.asarray(matrix, dtype=complex)
    a = 0.5 * float((matrix[0, 0] - matrix[1, 1]).real)
    return density_from_ab(a, matrix[0, 1], tol=tol)


def bloch_from_density(rho: QubitDensity) -> BlochVector:
    return BlochVector(2 * rho.b.real, -2 * rho.b.imag, 2 * rho.a)


def density_from_bloch(bloch: BlochVector, tol: float = POSITIVITY_TOL) -> QubitDensity:
    return density_from_ab(bloch.B3 / 2, complex(bloch.B1, -bloch.B2) / 2, tol=tol)


def eigenvalues(rho: QubitDensity) -> tuple:
    # clamp rounding overshoot of a^2 + |b|^2 past 1/4
    lambda_minus = max(0.5 - rho.radius, 0.0)
    return 1.0 - lambda_minus, lambda_minus


def eigendecompose(rho: QubitDensity) -> SpectralDecomp:
    lambda_plus, lambda_minus = eigenvalues(rho)
    a, b = rho.a, rho.b
    if b == 0:
        if a >= 0:
            return SpectralDecomp(lambda_plus, lambda_minus, _BASIS_PLUS.copy(), _BASIS_MINUS.copy())
        return SpectralDecomp(lambda_plus, lambda_minus, _BASIS_MINUS.copy(), _BASIS_PLUS.copy())

    r = rho.radius
    modulus = abs(b)
    vectors = []
    for sign in (1.0, -1.0):
        if sign * a >= 0:
            shifted = a + sign * r
        else:
            # a +/- r with cancellation rewritten as -|b|^2 / (a -/+ r)
            shifted = -modulus**2 / (a - sign * r)
        norm = math.sqrt(shifted**2 + modulus**2)
        vectors.append(
            np.array([modulus * shifted / (b.conjugate() * norm), modulus / norm], dtype=complex)
        )
    return SpectralDecomp(lambda_plus, lambda_minus, vectors[0], vectors[1])


def change_of_basis(decomp: SpectralDecomp) -> np.ndarray:
    """Unitary Q with columns psi+, psi- so that Q^dagger rho Q is diagonal."""
    return np.column_stack([decomp.psi_plus, decomp.psi_minus])


def extract_ent_hamiltonian(rho: QubitDensity, epsilon: float = 1.0) -> EntHamiltonian:
    if rho.a == 0 and rho.b == 0:
        raise DegenerateState()
    if rho.a != 0:
        return EntHamiltonian.from_kappa(epsilon, rho.b / rho.a)
    modulus = abs(rho.b)
    return EntHamiltonian(epsilon, (rho.b.real / modulus, -rho.b.imag / modulus, 0.0))


def ent_hamiltonian_from_basis(decomp: SpectralDecomp, epsilon: float = 1.0) -> np.ndarray:
    """Q diag(-epsilon, epsilon) Q^dagger: the most populated eigenvector is the ground state."""
    q = change_of_basis(decomp)
    return q @ np.diag([-epsilon, epsilon]).astype(complex) @ q.conj().T


def gibbs_state(hamiltonian: EntHamiltonian, beta: float) -> QubitDensity:
    # exp(-beta H) / Z = (I + tanh(beta epsilon) n . sigma) / 2
    polarization = math.tanh(beta * hamiltonian.epsilon)
    nx, ny, nz = hamiltonian.field
    return density_from_ab(0.5 * polarization * nz, 0.5 * polarization * complex(nx, -ny))


def ent_temperature(rho: QubitDensity, epsilon: float = 1.0) -> float:
    """2 epsilon / log(lambda+ / lambda-), signed by the hemisphere of the state.

    Returns +inf for the maximally mixed state and 0 for pure states.
    """
    polarization = 2 * rho.radius
    if polarization == 0.0:
        return math.inf
    if polarization >= 1.0:
        return 0.0
    # log(lambda+ / lambda-) = 2 atanh(lambda+ - lambda-)
    temperature = epsilon / math.atanh(polarization)
    return -temperature if rho.a < 0 else temperature


def von_neumann_entropy(rho: QubitDensity) -> float:
    return float(np.sum(entr(np.array(eigenvalues(rho)))))


def kraus_projector_asymptotic(
    psi_plus: Sequence[complex], psi_minus: Sequence[complex], rho0: QubitDensity
) -> QubitDensity:
    """Dephase rho0 in the orthonormal basis {psi+, psi-}."""
    psi_plus = np.asarray(psi_plus, dtype=complex)
    psi_minus = np.asarray(psi_minus, dtype=complex)
    overlap = abs(np.vdot(psi_plus, psi_minus))
    if overlap > ORTHOGONALITY_TOL:
        raise NonOrthogonal(overlap)

    initial = rho0.matrix()
    result = np.zeros((2, 2), dtype=complex)
    for psi in (psi_plus, psi_minus):
        projector = np.outer(psi, psi.conj())
        result += projector @ initial @ projector
    return density_from_matrix(result)
