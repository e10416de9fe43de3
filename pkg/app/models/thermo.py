from dataclasses import dataclass, field
from typing import Tuple

from app.models.qubit import Vector3


@dataclass(frozen=True)
class EnsemblePoint:
    gamma: float
    phi: float
    a: float
    b: complex


@dataclass(frozen=True)
class SampleDiagnostic:
    gamma: float
    phi: float
    a: float
    b: complex
    ratio: complex
    deviation: float
    retained: bool


@dataclass(frozen=True)
class ThermalVerdict:
    kappa_hat: complex
    residual: float
    n_used: int
    is_thermal: bool
    threshold: float
    diagnostics: Tuple[SampleDiagnostic, ...] = field(default=(), repr=False)


@dataclass(frozen=True)
class IsothermPlane:
    """Plane normal . (x, y, z) = rhs."""

    normal: Vector3
    rhs: float
