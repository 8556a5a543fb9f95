"""Design checks over the rise."""

import math

import pytest

from kiricap.cam import check_constraints
from kiricap.core.contracts import CamConfig, CamLaw, LawFamily
from kiricap.core.errors import ConstraintViolationError, InvalidParamsError

MU_30 = math.radians(30.0)


def test_zero_offset_has_zero_pressure_angle(cycloidal):
    report = check_constraints(CamConfig(e=0.0, s0=4.0, roller_radius=0.8), cycloidal, MU_30, 1000.0)
    assert report.max_pressure_angle == 0.0
    assert report.pressure_ok
    assert report.n_samples == 1024


def test_default_design_passes(cam_config, cycloidal):
    report = check_constraints(cam_config, cycloidal, math.radians(30.0), 1000.0)
    assert report.max_pressure_angle_deg == pytest.approx(26.5651, abs=1e-4)
    assert report.passed
    assert report.failures() == []
    report.raise_for_violations()


def test_pressure_angle_shrinks_with_base_distance(cycloidal):
    angles = [
        check_constraints(CamConfig(e=2.0, s0=s0, roller_radius=0.5), cycloidal, MU_30 * 2, 1e6).max_pressure_angle
        for s0 in (2.0, 4.0, 8.0)
    ]
    assert angles[0] > angles[1] > angles[2]


def test_peak_acceleration_ratio(cam_config):
    cyc = check_constraints(cam_config, CamLaw(family=LawFamily.CYCLOIDAL), MU_30, 1e6)
    poly = check_constraints(cam_config, CamLaw(family=LawFamily.POLY_345), MU_30, 1e6)
    assert cyc.max_acceleration / poly.max_acceleration == pytest.approx(1.0883, abs=1e-3)
    # constant speed: max |a| = L (2 pi) / beta^2 * omega^2 = 6 pi
    assert cyc.max_acceleration == pytest.approx(6 * math.pi, rel=1e-5)


def test_acceleration_bound_violation(cam_config, cycloidal):
    report = check_constraints(cam_config, cycloidal, MU_30, 1.0)
    assert not report.acceleration_ok
    assert not report.passed
    assert any("acceleration" in f for f in report.failures())
    with pytest.raises(ConstraintViolationError, match="acceleration"):
        report.raise_for_violations()


def test_pressure_bound_violation(cam_config, cycloidal):
    report = check_constraints(cam_config, cycloidal, math.radians(20.0), 1000.0)
    assert not report.pressure_ok
    assert "pressure angle" in report.failures()[0]


def test_undercut_reported(cycloidal):
    report = check_constraints(CamConfig(e=0.0, s0=1.0, roller_radius=5.0), cycloidal, MU_30, 1e6)
    assert report.undercut
    assert any("undercut" in f for f in report.failures())


def test_more_samples_are_honoured(cam_config, cycloidal):
    assert check_constraints(cam_config, cycloidal, MU_30, 1e6, n_samples=4096).n_samples == 4096
    assert check_constraints(cam_config, cycloidal, MU_30, 1e6, n_samples=10).n_samples == 1024


@pytest.mark.parametrize("mu_max,a_max", [(0.0, 1.0), (math.pi / 2, 1.0), (-0.1, 1.0), (MU_30, 0.0)])
def test_invalid_bounds_rejected(cam_config, cycloidal, mu_max, a_max):
    with pytest.raises(InvalidParamsError):
        check_constraints(cam_config, cycloidal, mu_max, a_max)


def test_full_turn_rise_checks_curvature_over_rise(cam_config):
    report = check_constraints(cam_config, CamLaw(rise_angle=2 * math.pi), MU_30, 1e6)
    assert math.isfinite(report.min_radius_of_curvature)
