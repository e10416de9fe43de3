import math

import numpy as np
import pytest
from scipy.linalg import expm

from app.core.errors import DegenerateState, NonOrthogonal, PositivityViolation
from app.core.qubit import (
    bloch_from_density,
    change_of_basis,
    density_from_ab,
    density_from_bloch,
    density_from_matrix,
    eigendecompose,
    eigenvalues,
    ent_hamiltonian_from_basis,
    ent_temperature,
    extract_ent_hamiltonian,
    gibbs_state,
    kraus_projector_asymptotic,
    von_neumann_entropy,
)
from app.models.qubit import PAULI_X, PAULI_Y, PAULI_Z, EntHamiltonian

STATES = [(0.25, 0.25), (-0.1, 0.2 - 0.3j), (0.0, 0.4j), (0.3, 0.0), (-0.45, 0.0), (1e-9, 0.49)]


def test_density_from_ab_accepts_pure_and_rejects_outside_sphere():
    rho = density_from_ab(0.5, 0.0)
    assert np.allclose(rho.matrix(), np.diag([1.0, 0.0]))

    with pytest.raises(PositivityViolation):
        density_from_ab(0.5, 0.1)


def test_density_matrix_is_hermitian_with_unit_trace():
    rho = density_from_ab(-0.1, 0.2 - 0.3j)
    m = rho.matrix()
    assert np.allclose(m, m.conj().T)
    assert np.isclose(np.trace(m), 1.0)
    back = density_from_matrix(m)
    assert back.a == pytest.approx(rho.a) and back.b == rho.b


def test_bloch_round_trip():
    rho = density_from_ab(0.1, 0.2 - 0.15j)
    bloch = bloch_from_density(rho)
    assert np.allclose(bloch.as_array(), [0.4, 0.3, 0.2])
    back = density_from_bloch(bloch)
    assert math.isclose(back.a, rho.a) and abs(back.b - rho.b) < 1e-15


def test_bloch_components_are_pauli_expectations():
    rho = density_from_ab(-0.2, 0.1 + 0.25j)
    bloch = bloch_from_density(rho)
    assert np.isclose(np.trace(rho.matrix() @ PAULI_Z).real, bloch.B3)
    assert np.isclose(bloch.norm, 2 * rho.radius)


def test_eigenvalues_of_pure_and_mixed_states():
    assert eigenvalues(density_from_ab(0.0, 0.5)) == (1.0, 0.0)
    assert eigenvalues(density_from_ab(0.0, 0.0)) == (0.5, 0.5)


@pytest.mark.parametrize("a,b", STATES)
def test_eigendecompose_gives_orthonormal_eigenvectors(a, b):
    rho = density_from_ab(a, b)
    decomp = eigendecompose(rho)
    m = rho.matrix()

    assert decomp.lambda_plus >= decomp.lambda_minus >= 0.0
    assert math.isclose(decomp.lambda_plus + decomp.lambda_minus, 1.0)
    assert np.allclose(m @ decomp.psi_plus, decomp.lambda_plus * decomp.psi_plus, atol=1e-12)
    assert np.allclose(m @ decomp.psi_minus, decomp.lambda_minus * decomp.psi_minus, atol=1e-12)

    q = change_of_basis(decomp)
    assert np.allclose(q.conj().T @ q, np.eye(2), atol=1e-12)
    assert np.allclose(q.conj().T @ m @ q, np.diag([decomp.lambda_plus, decomp.lambda_minus]), atol=1e-12)


def test_eigendecompose_diagonal_state_orders_by_population():
    decomp = eigendecompose(density_from_ab(-0.3, 0.0))
    assert np.allclose(decomp.psi_plus, [0, 1])
    assert np.allclose(decomp.psi_minus, [1, 0])


def test_extract_ent_hamiltonian_equal_a_and_b():
    h = extract_ent_hamiltonian(density_from_ab(0.25, 0.25), epsilon=1.0)
    expected = -np.array([[1, 1], [1, -1]]) / math.sqrt(2)
    assert np.allclose(h.matrix(), expected, atol=1e-12)
    assert h.kappa == pytest.approx(1.0)


def test_extract_ent_hamiltonian_diagonal_state():
    h = extract_ent_hamiltonian(density_from_ab(0.3, 0.0), epsilon=1.0)
    assert np.allclose(h.matrix(), -PAULI_Z)


def test_extract_ent_hamiltonian_equatorial_state_has_infinite_kappa():
    h = extract_ent_hamiltonian(density_from_ab(0.0, 0.2j), epsilon=2.0)
    assert np.allclose(h.field, [0.0, -1.0, 0.0])
    assert math.isinf(h.kappa.real)


def test_extract_ent_hamiltonian_rejects_maximally_mixed():
    with pytest.raises(DegenerateState):
        extract_ent_hamiltonian(density_from_ab(0.0, 0.0))


@pytest.mark.parametrize("a,b", STATES[:-1])
def test_ent_hamiltonian_is_traceless_with_spectrum_plus_minus_epsilon(a, b):
    h = extract_ent_hamiltonian(density_from_ab(a, b), epsilon=0.7).matrix()
    assert np.allclose(h, h.conj().T)
    assert abs(np.trace(h)) < 1e-12
    assert np.allclose(np.linalg.eigvalsh(h), [-0.7, 0.7])


def test_ent_hamiltonian_from_basis_matches_extraction_in_upper_hemisphere():
    rho = density_from_ab(0.2, 0.1 - 0.2j)
    rebuilt = ent_hamiltonian_from_basis(eigendecompose(rho), epsilon=1.5)
    assert np.allclose(rebuilt, extract_ent_hamiltonian(rho, epsilon=1.5).matrix(), atol=1e-12)


def test_ent_hamiltonian_validates_inputs():
    with pytest.raises(ValueError):
        EntHamiltonian(0.0, (0.0, 0.0, 1.0))
    with pytest.raises(ValueError):
        EntHamiltonian(1.0, (0.0, 0.5, 0.5))


def test_gibbs_state_matches_matrix_exponential():
    h = EntHamiltonian.from_kappa(1.3, 0.4 - 0.7j)
    beta = 0.8
    weights = expm(-beta * h.matrix())
    expected = weights / np.trace(weights)
    assert np.allclose(gibbs_state(h, beta).matrix(), expected, atol=1e-12)


def test_gibbs_state_at_low_temperature_occupies_ground_state():
    # H = sigma_z has its ground state on |1>
    h = EntHamiltonian(1.0, (0.0, 0.0, -1.0))
    assert np.allclose(h.matrix(), PAULI_Z)
    rho = gibbs_state(h, beta=50.0)
    assert np.allclose(rho.matrix(), np.diag([0.0, 1.0]), atol=1e-12)


def test_ent_temperature_limits_and_value():
    assert ent_temperature(density_from_ab(0.5, 0.0)) == 0.0
    assert ent_temperature(density_from_ab(0.0, 0.0)) == math.inf
    assert ent_temperature(density_from_ab(0.25, 0.0)) == pytest.approx(2 / math.log(3))
    assert ent_temperature(density_from_ab(-0.25, 0.0)) == pytest.approx(-2 / math.log(3))
    assert ent_temperature(density_from_ab(0.0, 0.25)) > 0


def test_gibbs_round_trip_recovers_state():
    rng = np.random.default_rng(7)
    for _ in range(25):
        radius = rng.uniform(0.01, 0.49)
        direction = rng.normal(size=3)
        direction /= np.linalg.norm(direction)
        rho = density_from_ab(radius * direction[2], radius * complex(direction[0], -direction[1]))
        h = extract_ent_hamiltonian(rho, epsilon=1.0)
        rebuilt = gibbs_state(h, 1.0 / ent_temperature(rho))
        assert np.allclose(rebuilt.matrix(), rho.matrix(), atol=1e-12)


def test_von_neumann_entropy():
    assert von_neumann_entropy(density_from_ab(0.0, 0.0)) == pytest.approx(math.log(2))
    assert von_neumann_entropy(density_from_ab(0.0, 0.5)) == 0.0
    lam = 0.8
    assert von_neumann_entropy(density_from_ab(lam - 0.5, 0.0)) == pytest.approx(
        -lam * math.log(lam) - (1 - lam) * math.log(1 - lam)
    )


def test_kraus_projector_dephases_in_given_basis():
    rho0 = density_from_ab(0.1, 0.3 + 0.1j)
    rho = kraus_projector_asymptotic([1, 0], [0, 1], rho0)
    assert rho.a == pytest.approx(0.1)
    assert rho.b == 0

    plus = np.array([1, 1]) / math.sqrt(2)
    minus = np.array([1, -1]) / math.sqrt(2)
    rho = kraus_projector_asymptotic(plus, minus, rho0)
    assert rho.a == pytest.approx(0.0)
    assert rho.b == pytest.approx(0.3)


def test_kraus_projector_rejects_non_orthogonal_vectors():
    with pytest.raises(NonOrthogonal):
        kraus_projector_asymptotic([1, 0], [1 / math.sqrt(2), 1 / math.sqrt(2)], density_from_ab(0.1, 0.0))


@pytest.mark.parametrize("kappa", [1.0, 0.3 - 1.2j, -2.0 + 0.5j])
def test_pauli_field_decomposition(kappa):
    kappa = complex(kappa)
    epsilon = 1.7
    h = EntHamiltonian.from_kappa(epsilon, kappa)
    scale = -epsilon / math.sqrt(1 + abs(kappa) ** 2)
    components = scale * np.array([kappa.real, -kappa.imag, 1.0])

    assert np.allclose(h.pauli_components(), components, atol=1e-12)
    assert np.allclose(
        h.matrix(), components[0] * PAULI_X + components[1] * PAULI_Y + components[2] * PAULI_Z, atol=1e-12
    )
    assert np.allclose(h.matrix(), scale * np.array([[1, kappa], [kappa.conjugate(), -1]]), atol=1e-12)


def test_gibbs_state_at_infinite_temperature_is_maximally_mixed():
    for h in (EntHamiltonian.from_kappa(1.0, 0.4 + 0.2j), EntHamiltonian(3.0, (1.0, 0.0, 0.0))):
        rho = gibbs_state(h, 0.0)
        assert rho.a == 0 and rho.b == 0
        assert np.allclose(rho.matrix(), np.eye(2) / 2)
