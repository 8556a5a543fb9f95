"""End-to-end capsule simulation and trace export."""

import io

import numpy as np
import pandas as pd
import pytest

from kiricap.core.contracts import CamLaw, CapsuleConfig
from kiricap.core.errors import InfeasibleConfigError
from kiricap.mechanics import DeploymentModel
from kiricap.sim import TRACE_COLUMNS, SimTrace, export_trace, simulate, summarize_trace


def _config(lift: float) -> CapsuleConfig:
    return CapsuleConfig(deploy_law=CamLaw(lift=lift))


@pytest.fixture(scope="module")
def default_trace():
    return simulate(CapsuleConfig())


@pytest.fixture(scope="module")
def reference_trace():
    return simulate(_config(7.5))


def _rows(trace, phase):
    return np.array([p == phase for p in trace.phase])


def test_default_run_shape(default_trace):
    assert len(default_trace) == 5501
    assert default_trace.phase[0] == "deploy"
    assert default_trace.phase[-1] == "retract"


def test_flaps_open_during_deploy(default_trace):
    deploy = _rows(default_trace, "deploy")
    assert np.all(np.diff(default_trace.theta[deploy]) >= -1e-12)
    assert np.all(np.diff(default_trace.depth[deploy]) >= -1e-12)


def test_opening_held_while_scraping(default_trace):
    scrape = _rows(default_trace, "scrape")
    theta = default_trace.theta[scrape]
    np.testing.assert_allclose(theta, theta[0])
    assert 0.0 < theta[0] < 34.0


def test_flaps_close_after_retract(default_trace):
    assert default_trace.theta[-1] < 1e-6
    assert default_trace.depth[-1] < 1e-6


@pytest.mark.parametrize("dt", [0.012, 0.0007])
def test_flaps_close_when_step_does_not_divide_program(dt):
    trace = simulate(_config(7.5), dt)
    assert trace.t[-1] == 5.5
    assert trace.theta[-1] < 1e-6
    assert trace.depth[-1] < 1e-6
    assert trace.phase[-1] == "retract"


def test_operating_point(reference_trace):
    summary = summarize_trace(reference_trace)
    assert summary["peak_strain"] == pytest.approx(0.15)
    assert summary["peak_theta"] == pytest.approx(34.0, abs=1e-6)
    assert summary["peak_depth"] == pytest.approx(0.58656, abs=1e-4)
    assert 0.45 <= summary["peak_depth"] <= 0.75


def test_depth_never_exceeds_spike(reference_trace):
    assert reference_trace.spike_length == pytest.approx(1.04887, abs=1e-5)
    assert np.all(reference_trace.depth <= reference_trace.spike_length)
    assert np.all(reference_trace.depth >= 0.0)


def test_deploy_and_retract_mirror_each_other(reference_trace):
    np.testing.assert_allclose(reference_trace.y, reference_trace.y[::-1], atol=1e-9)


def test_zero_lift_keeps_flaps_closed():
    trace = simulate(_config(0.0))
    assert np.all(trace.strain == 0.0)
    assert np.all(trace.theta == 0.0)
    assert np.all(trace.depth == 0.0)


def test_excess_lift_is_infeasible():
    with pytest.raises(InfeasibleConfigError, match="strain"):
        simulate(_config(20.0))


def test_model_limits_are_respected():
    with pytest.raises(InfeasibleConfigError):
        simulate(CapsuleConfig(), model=DeploymentModel(max_strain=0.05))


def test_pulses_track_cam_and_scrape(default_trace):
    assert default_trace.pulses[0] == 0
    # 180 deg deploy at 18.1 deg/pulse
    assert default_trace.pulses[1000] == 10
    # cam back at 0, 420 deg of scrape rotation
    assert default_trace.pulses[-1] == 23
    assert default_trace.pulses.dtype.kind == "i"


def test_summary(default_trace):
    summary = summarize_trace(default_trace)
    assert set(summary) == {
        "rows",
        "spike_length",
        "peak_strain",
        "peak_theta",
        "peak_depth",
        "time_of_peak_depth",
        "final_theta",
        "final_y",
        "total_scrape_rotation",
        "spans",
    }
    assert summary["rows"] == 5501
    assert summary["total_scrape_rotation"] == pytest.approx(420.0)
    assert summary["final_y"] == pytest.approx(4.0)
    assert 1.0 <= summary["time_of_peak_depth"] <= 4.5
    assert [s["phase"] for s in summary["spans"]] == ["deploy", "scrape", "retract"]


def test_empty_trace():
    empty = SimTrace.empty()
    assert summarize_trace(empty) == {"rows": 0, "spans": []}
    assert export_trace(empty) == (",".join(TRACE_COLUMNS) + "\n").encode()


def test_export_parses_back(reference_trace):
    data = export_trace(reference_trace)
    assert data.splitlines()[0] == b"t,pulses,phi,y,strain,theta,depth,scrape_angle,phase"
    assert b"\r" not in data
    frame = pd.read_csv(io.BytesIO(data))
    assert list(frame.columns) == TRACE_COLUMNS
    assert len(frame) == len(reference_trace)
    np.testing.assert_allclose(frame["theta"], reference_trace.theta, atol=5e-7)
    np.testing.assert_array_equal(frame["pulses"], reference_trace.pulses)


def test_export_is_byte_stable():
    assert export_trace(simulate(_config(7.5))) == export_trace(simulate(_config(7.5)))
