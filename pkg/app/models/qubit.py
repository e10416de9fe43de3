import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)

Vector3 = Tuple[float, float, float]


@dataclass(frozen=True)
class QubitDensity:
    """Coin density operator [[1/2 + a, b], [b*, 1/2 - a]]."""

    a: float
    b: complex

    @property
    def radius(self) -> float:
        # half the Bloch vector length
        return math.hypot(self.a, abs(self.b))

    def matrix(self) -> np.ndarray:
        return np.array(
            [[0.5 + self.a, self.b], [self.b.conjugate(), 0.5 - self.a]],
            dtype=complex,
        )


@dataclass(frozen=True)
class SpectralDecomp:
    lambda_plus: float
    lambda_minus: float
    psi_plus: np.ndarray
    psi_minus: np.ndarray


@dataclass(frozen=True)
class BlochVector:
    B1: float
    B2: float
    B3: float

    def as_array(self) -> np.ndarray:
        return np.array([self.B1, self.B2, self.B3])

    @property
    def norm(self) -> float:
        return math.sqrt(self.B1**2 + self.B2**2 + self.B3**2)


@dataclass(frozen=True)
class EntHamiltonian:
    """Traceless qubit Hamiltonian -epsilon (n . sigma) with unit field n.

    Finite kappa corresponds to n = (Re kappa, -Im kappa, 1) / sqrt(1 + |kappa|^2);
    an equatorial field (n_z = 0) is the kappa -> infinity limit.
    """

    epsilon: float
    field: Vector3

    def __post_init__(self) -> None:
        if not self.epsilon > 0:
            raise ValueError("epsilon must be positive")
        norm = math.sqrt(sum(component**2 for component in self.field))
        if not math.isclose(norm, 1.0, abs_tol=1e-12):
            raise ValueError(f"field direction must be a unit vector, got norm {norm}")

    @classmethod
    def from_kappa(cls, epsilon: float, kappa: complex) -> "EntHamiltonian":
        kappa = complex(kappa)
        scale = math.sqrt(1.0 + abs(kappa) ** 2)
        return cls(epsilon, (kappa.real / scale, -kappa.imag / scale, 1.0 / scale))

    @property
    def kappa(self) -> complex:
        nx, ny, nz = self.field
        if nz == 0.0:
            return complex(math.inf, 0.0)
        return complex(nx, -ny) / nz

    def pauli_components(self) -> np.ndarray:
        """Coefficients (h_x, h_y, h_z) of H = h . sigma."""
        return -self.epsilon * np.asarray(self.field)

    def matrix(self) -> np.ndarray:
        hx, hy, hz = self.pauli_components()
        return hx * PAULI_X + hy * PAULI_Y + hz * PAULI_Z
