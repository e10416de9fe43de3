import math
import re
from enum import Enum
from pathlib import Path
from typing import Any, List, Optional

from pydantic import field_validator, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

_PI_FRACTION = re.compile(r"^(?:(?P<num>\d+(?:\.\d*)?)\s*\*?\s*)?pi(?:\s*/\s*(?P<den>\d+(?:\.\d*)?))?$")


class InitKind(str, Enum):
    LOCALIZED = "localized"
    GAUSSIAN = "gaussian"


def parse_angle(token: str) -> float:
    """Parse a float or a pi-fraction such as ``pi/4`` or ``3*pi/8``."""
    token = token.strip().lower()
    match = _PI_FRACTION.match(token)
    if match:
        num = float(match.group("num") or 1.0)
        den = float(match.group("den") or 1.0)
        return num * math.pi / den
    return float(token)


def parse_angle_list(value: str) -> List[float]:
    return [parse_angle(item) for item in value.split(",") if item.strip()]


class SweepConfig(BaseSettings):
    # Sweep grid
    THETA_LIST: str = "pi/6,pi/4,pi/3"
    INIT_KIND: InitKind = InitKind.GAUSSIAN
    XI: float = 10.0
    GAMMA_STEPS: int = 6
    PHI_STEPS: int = 8

    # Time averaging
    T_BURN: Optional[int] = None
    T_MAX: int = 400
    LOCALIZED_T_MAX: int = 600
    CONVERGENCE_TOL: float = 5e-3

    # Thermality analysis
    THERMAL_THRESHOLD: float = 0.02
    A_FLOOR: float = 1e-3
    EQUATOR_MARGIN: float = 0.1
    EPSILON: float = 1.0

    # Temperature reporting
    PURE_TOL: float = 2e-3
    MIXED_TOL: float = 5e-3
    POLE_ENTROPY_TOL: float = 1e-2

    # Runtime
    WORKERS: int = 1
    OUTPUT_PATH: Path = Path("sweep.csv")
    LOG_LEVEL: str = "INFO"

    model_config = SettingsConfigDict(case_sensitive=True, env_file=".env", extra="ignore")

    @field_validator("THETA_LIST", mode="before")
    @classmethod
    def assemble_theta_list(cls, v: Any) -> str:
        if isinstance(v, (list, tuple)):
            v = ",".join(repr(float(item)) for item in v)
        if not isinstance(v, str):
            raise ValueError(v)
        thetas = parse_angle_list(v)
        if not thetas:
            raise ValueError("THETA_LIST must name at least one coin bias")
        for theta in thetas:
            if not 0.0 < theta < math.pi / 2:
                raise ValueError(f"coin bias {theta} is outside (0, pi/2)")
        return v

    @field_validator("XI")
    @classmethod
    def check_xi(cls, v: float) -> float:
        if v < 1.0:
            raise ValueError("XI must be >= 1")
        return v

    @field_validator("GAMMA_STEPS")
    @classmethod
    def check_gamma_steps(cls, v: int) -> int:
        if v < 2:
            raise ValueError("GAMMA_STEPS must be >= 2")
        return v

    @field_validator("PHI_STEPS", "WORKERS")
    @classmethod
    def check_positive(cls, v: int) -> int:
        if v < 1:
            raise ValueError("must be >= 1")
        return v

    @model_validator(mode="after")
    def check_time_window(self) -> "SweepConfig":
        if self.T_MAX < 1:
            raise ValueError("T_MAX must be >= 1")
        if self.T_BURN is not None and not 0 <= self.T_BURN < self.T_MAX:
            raise ValueError("T_BURN must satisfy 0 <= T_BURN < T_MAX")
        return self

    @property
    def THETAS(self) -> List[float]:
        """Parsed coin biases."""
        return parse_angle_list(self.THETA_LIST)

    @property
    def BURN_IN(self) -> int:
        return self.T_BURN if self.T_BURN is not None else self.T_MAX // 4


def get_settings(config_file: Optional[Path] = None, **overrides: Any) -> SweepConfig:
    """Load settings from a dotenv-style file; keyword overrides take precedence."""
    overrides = {key: value for key, value in overrides.items() if value is not None}
    if config_file is not None:
        return SweepConfig(_env_file=config_file, **overrides)
    return SweepConfig(**overrides)
