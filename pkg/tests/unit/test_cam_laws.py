"""Displacement laws: boundary conditions, derivatives and peak coefficients."""

import math

import numpy as np
import pytest

from kiricap.cam import law_eval, return_eval
from kiricap.core.contracts import CamLaw, LawFamily
from kiricap.core.errors import OutOfRangeError

FAMILIES = list(LawFamily)


@pytest.mark.parametrize("family", FAMILIES)
def test_boundary_conditions(family, rng):
    """s(0)=0, s(beta)=L and zero velocity at both ends for any lift and rise angle"""
    for _ in range(100):
        law = CamLaw(family=family, lift=rng.uniform(0.1, 20.0), rise_angle=rng.uniform(0.2, 2 * math.pi))
        s0, v0, _ = law_eval(law, 0.0)
        s1, v1, _ = law_eval(law, law.rise_angle)
        assert s0 == pytest.approx(0.0, abs=1e-12)
        assert s1 == pytest.approx(law.lift, rel=1e-12)
        assert v0 == pytest.approx(0.0, abs=1e-9 * law.lift)
        assert v1 == pytest.approx(0.0, abs=1e-9 * law.lift)


@pytest.mark.parametrize("family", FAMILIES)
def test_derivatives_match_finite_differences(family, rng):
    law = CamLaw(family=family, lift=7.5, rise_angle=2.0)
    h = 1e-6
    phi = rng.uniform(h, law.rise_angle - h, 1000)
    s, ds, d2s = law_eval(law, phi)
    s_p, ds_p, _ = law_eval(law, phi + h)
    s_m, ds_m, _ = law_eval(law, phi - h)
    np.testing.assert_allclose((s_p - s_m) / (2 * h), ds, rtol=1e-5, atol=1e-6 * law.lift)
    np.testing.assert_allclose((ds_p - ds_m) / (2 * h), d2s, rtol=1e-5, atol=1e-6 * law.lift)


@pytest.mark.parametrize("family", FAMILIES)
def test_displacement_is_monotone(family):
    s, _, _ = law_eval(CamLaw(family=family, lift=3.0), np.linspace(0.0, math.pi, 2001))
    assert np.all(np.diff(s) >= -1e-12)


def test_cycloidal_midpoint():
    law = CamLaw(family=LawFamily.CYCLOIDAL, lift=10.0, rise_angle=math.pi)
    s, ds, d2s = law_eval(law, math.pi / 2)
    assert s == pytest.approx(5.0)
    assert ds == pytest.approx(20.0 / math.pi, rel=1e-12)
    assert ds == pytest.approx(6.3662, abs=1e-4)
    assert d2s == pytest.approx(0.0, abs=1e-12)


@pytest.mark.parametrize("family", [LawFamily.CYCLOIDAL, LawFamily.POLY_345, LawFamily.POLY_4567])
def test_zero_end_acceleration(family):
    law = CamLaw(family=family, lift=3.0, rise_angle=math.pi)
    assert law_eval(law, 0.0)[2] == pytest.approx(0.0, abs=1e-12)
    assert law_eval(law, math.pi)[2] == pytest.approx(0.0, abs=1e-9)


@pytest.mark.parametrize("x_break", [0.125, 0.875])
def test_modified_sine_continuous_at_breakpoints(x_break):
    law = CamLaw(family=LawFamily.MODIFIED_SINE, lift=1.0, rise_angle=1.0)
    eps = 1e-9
    left = np.array(law_eval(law, x_break - eps))
    right = np.array(law_eval(law, x_break + eps))
    np.testing.assert_allclose(left, right, atol=1e-6)


def _peak_coefficient(family: LawFamily) -> float:
    law = CamLaw(family=family, lift=1.0, rise_angle=1.0)
    _, _, d2s = law_eval(law, np.linspace(0.0, 1.0, 200001))
    return float(np.max(np.abs(d2s)))


def test_peak_acceleration_coefficients():
    assert _peak_coefficient(LawFamily.CYCLOIDAL) == pytest.approx(2 * math.pi, rel=1e-6)
    assert _peak_coefficient(LawFamily.POLY_345) == pytest.approx(10 / math.sqrt(3), rel=1e-6)
    assert _peak_coefficient(LawFamily.MODIFIED_SINE) == pytest.approx(4 * math.pi**2 / (4 + math.pi), rel=1e-6)
    ratio = _peak_coefficient(LawFamily.CYCLOIDAL) / _peak_coefficient(LawFamily.POLY_345)
    assert ratio == pytest.approx(1.0883, abs=1e-4)


def test_array_and_scalar_agree():
    law = CamLaw(family=LawFamily.POLY_345, lift=2.0, rise_angle=1.5)
    phi = np.array([0.1, 0.7, 1.2])
    s, ds, d2s = law_eval(law, phi)
    for i, p in enumerate(phi):
        assert law_eval(law, float(p)) == pytest.approx((s[i], ds[i], d2s[i]))


@pytest.mark.parametrize("phi", [-1e-6, math.pi + 1e-6, float("nan")])
def test_outside_rise_raises(phi):
    with pytest.raises(OutOfRangeError):
        law_eval(CamLaw(), phi)


def test_rise_tolerance_absorbs_round_off():
    law = CamLaw()
    assert law_eval(law, law.rise_angle * (1 + 1e-15))[0] == pytest.approx(law.lift)


def test_return_stroke_mirrors_rise():
    law = CamLaw(family=LawFamily.CYCLOIDAL, lift=3.0, rise_angle=math.pi / 2)
    span = 3 * math.pi / 2
    s0, v0, _ = return_eval(law, 0.0, span)
    s1, v1, _ = return_eval(law, span, span)
    assert (s0, s1) == pytest.approx((3.0, 0.0), abs=1e-12)
    assert (v0, v1) == pytest.approx((0.0, 0.0), abs=1e-9)
    s_mid, v_mid, _ = return_eval(law, span / 2, span)
    assert s_mid == pytest.approx(1.5)
    assert v_mid == pytest.approx(-2 * 3.0 / span)
