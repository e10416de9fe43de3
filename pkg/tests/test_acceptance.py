import math

import pytest

from app.core.acceptance import AcceptanceSuite, verify
from app.core.config import get_settings
from app.schemas.sweep import SweepRecord
from app.schemas.verify import VerifyReport


@pytest.fixture
def suite():
    return AcceptanceSuite(get_settings())


@pytest.mark.parametrize(
    "check",
    ["check_temperature_identity", "check_heat_relation", "check_geometry", "check_gibbs_round_trip", "check_engine"],
)
def test_analytic_checks_pass(suite, check):
    getattr(suite, check)()
    assert suite.checks
    assert all(result.passed for result in suite.checks), [r for r in suite.checks if not r.passed]


def test_report_renders_failures(suite):
    suite.record("always fails", 1.0, 0.5, False, "detail")
    suite.record("always passes", 0.1, 0.5, True)
    report = VerifyReport(checks=suite.checks, unconverged=["theta=0.1"])
    rendered = report.render()
    assert not report.passed
    assert "[FAIL] always fails" in rendered and "[PASS] always passes" in rendered
    assert "Unconverged samples (1)" in rendered
    assert rendered.endswith("VERIFICATION FAILED")


@pytest.mark.slow
def test_verify_default_config_passes():
    status, report = verify(get_settings())
    assert status == 0, report.render()


@pytest.mark.slow
def test_verify_fails_below_noise_floor():
    status, report = verify(get_settings(THERMAL_THRESHOLD=1e-9))
    assert status == 1
    failed = [check.name for check in report.checks if not check.passed]
    assert any(name.startswith("gaussian thermality") for name in failed)


@pytest.mark.slow
def test_verify_reports_unconverged_short_runs():
    status, report = verify(get_settings(T_MAX=10))
    assert status == 1
    assert report.unconverged


def test_gibbs_round_trip_cross_checks_eigenbasis_hamiltonian(suite):
    suite.check_gibbs_round_trip()
    by_name = {result.name: result for result in suite.checks}
    assert by_name["H_ent from eigenbasis"].passed
    assert by_name["H_ent from eigenbasis"].measured < 1e-10


def test_gaussian_thermality_reports_implied_kappa_spread():
    suite = AcceptanceSuite(get_settings(THETA_LIST="pi/4"))
    theta = suite.config.THETAS[0]
    records = [
        SweepRecord(
            theta=theta, gamma=gamma, phi=0.0, a_bar=a, b_re=a, b_im=0.0, cos_alpha_pred=0.0,
            lambda_plus=0.5 + abs(a) * math.sqrt(2), S_vN=0.0, T_ent=0.0, converged=True, residual=0.0,
        )
        for gamma, a in [(0.3, 0.2), (0.8, 0.15), (2.3, -0.15), (2.8, -0.25), (1.2, 0.1)]
    ]
    suite.check_gaussian_thermality(records)
    (result,) = suite.checks
    assert result.passed
    assert "tan(theta)-implied kappa spread" in result.detail
    spread = float(result.detail.rsplit("=", 1)[1])
    assert spread < 1e-12
