import math

import pytest
from pydantic import ValidationError

from app.core.config import InitKind, get_settings, parse_angle, parse_angle_list


def test_parse_angle_accepts_floats_and_pi_fractions():
    assert parse_angle("0.5") == 0.5
    assert parse_angle("pi/4") == pytest.approx(math.pi / 4)
    assert parse_angle("3*pi/8") == pytest.approx(3 * math.pi / 8)
    assert parse_angle(" PI ") == pytest.approx(math.pi)
    assert parse_angle_list("pi/6, pi/4,pi/3") == pytest.approx([math.pi / 6, math.pi / 4, math.pi / 3])


def test_defaults():
    config = get_settings()
    assert config.THETAS == pytest.approx([math.pi / 6, math.pi / 4, math.pi / 3])
    assert config.INIT_KIND is InitKind.GAUSSIAN
    assert config.GAMMA_STEPS == 6 and config.PHI_STEPS == 8
    assert config.T_MAX == 400
    assert config.BURN_IN == 100
    assert config.THERMAL_THRESHOLD == 0.02
    assert config.A_FLOOR == 1e-3


def test_theta_list_accepts_a_sequence():
    config = get_settings(THETA_LIST=[0.3, 0.6])
    assert config.THETAS == [0.3, 0.6]


@pytest.mark.parametrize(
    "overrides",
    [
        {"THETA_LIST": ""},
        {"THETA_LIST": "pi/2"},
        {"THETA_LIST": "0,0.3"},
        {"T_BURN": 400, "T_MAX": 400},
        {"GAMMA_STEPS": 1},
        {"PHI_STEPS": 0},
        {"XI": 0.5},
        {"WORKERS": 0},
    ],
)
def test_invalid_settings_are_rejected(overrides):
    with pytest.raises(ValidationError):
        get_settings(**overrides)


def test_config_file_is_read_and_overrides_win(tmp_path):
    path = tmp_path / "run.env"
    path.write_text("THETA_LIST=pi/3\nINIT_KIND=localized\nT_MAX=200\nT_BURN=20\n")

    config = get_settings(path, T_MAX=300, XI=None)
    assert config.THETAS == pytest.approx([math.pi / 3])
    assert config.INIT_KIND is InitKind.LOCALIZED
    assert config.T_MAX == 300
    assert config.BURN_IN == 20
    assert config.XI == 10.0
