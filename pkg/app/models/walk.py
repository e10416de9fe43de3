import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from app.core.config import InitKind

TWO_PI = 2 * math.pi


@dataclass(frozen=True)
class CoinSpec:
    theta: float

    def __post_init__(self) -> None:
        if not 0.0 < self.theta < math.pi / 2:
            raise ValueError(f"coin bias {self.theta} is outside (0, pi/2)")

    def matrix(self) -> np.ndarray:
        c, s = math.cos(self.theta), math.sin(self.theta)
        return np.array([[c, s], [s, -c]], dtype=complex)


@dataclass(frozen=True)
class InitialSpec:
    kind: InitKind
    gamma: float
    phi: float
    xi: Optional[float] = None

    def __post_init__(self) -> None:
        if not 0.0 <= self.gamma <= math.pi:
            raise ValueError(f"gamma {self.gamma} is outside [0, pi]")
        if self.kind is InitKind.GAUSSIAN and (self.xi is None or self.xi < 1.0):
            raise ValueError("Gaussian initial states need xi >= 1")
        # azimuth reduced to [0, 2 pi)
        phi = self.phi % TWO_PI
        object.__setattr__(self, "phi", 0.0 if phi >= TWO_PI else phi)

    @property
    def chirality(self) -> np.ndarray:
        """Coin state (cos(gamma/2), e^{i phi} sin(gamma/2))."""
        return np.array(
            [math.cos(self.gamma / 2), np.exp(1j * self.phi) * math.sin(self.gamma / 2)],
            dtype=complex,
        )

    @property
    def support_halfwidth(self) -> int:
        if self.kind is InitKind.GAUSSIAN:
            return math.ceil(6 * self.xi)
        return 0


@dataclass(frozen=True)
class WalkState:
    """Amplitudes d_n (chirality +) and e_n (chirality -) on slots n = offset + i."""

    offset: int
    d: np.ndarray
    e: np.ndarray
    t: int = 0

    @property
    def positions(self) -> np.ndarray:
        return np.arange(self.offset, self.offset + len(self.d))

    def probabilities(self) -> np.ndarray:
        return np.abs(self.d) ** 2 + np.abs(self.e) ** 2

    def norm(self) -> float:
        return float(np.sqrt(self.probabilities().sum()))


@dataclass(frozen=True)
class EquilibriumSample:
    a_bar: float
    b_bar: complex
    converged: bool
    residual: float


@dataclass(frozen=True)
class Trajectory:
    """Per-step coin populations and coherences, t = 0 .. t_max."""

    a: np.ndarray
    b: np.ndarray
    norm: np.ndarray
