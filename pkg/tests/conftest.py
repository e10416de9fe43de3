import pytest

from app.core.config import get_settings


@pytest.fixture
def small_config(tmp_path):
    """A grid small enough for unit tests; results are not expected to be converged."""
    return get_settings(
        THETA_LIST="pi/4",
        GAMMA_STEPS=3,
        PHI_STEPS=2,
        XI=10.0,
        T_MAX=60,
        OUTPUT_PATH=tmp_path / "sweep.csv",
    )
