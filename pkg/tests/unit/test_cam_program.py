"""Multi-phase motion program execution."""

import math

import numpy as np
import pytest

from kiricap.cam import MOTION_COLUMNS, run_motion_program
from kiricap.core.contracts import (
    CamConfig,
    CamLaw,
    DeployPhase,
    DwellPhase,
    MotionProgram,
    RetractPhase,
    SpeedKind,
    SpeedProfile,
)
from kiricap.core.errors import InvalidProgramError

DT = 0.001


@pytest.fixture
def default_trace(cam_config, cycloidal):
    return run_motion_program(MotionProgram(), cam_config, DT, cycloidal)


def test_row_count_and_grid(default_trace):
    assert len(default_trace) == 5501
    assert default_trace.t[0] == 0.0
    assert default_trace.t[-1] == pytest.approx(5.5)
    np.testing.assert_allclose(np.diff(default_trace.t), DT, atol=1e-12)


@pytest.mark.parametrize("dt", [0.012, 0.007, 0.3])
def test_grid_ends_on_program_duration(cam_config, cycloidal, dt):
    trace = run_motion_program(MotionProgram(), cam_config, dt, cycloidal)
    assert trace.t[-1] == 5.5
    assert len(trace) == math.ceil(5.5 / dt) + 1
    steps = np.diff(trace.t)
    np.testing.assert_allclose(steps[:-1], dt, atol=1e-12)
    assert 0.0 < steps[-1] <= dt + 1e-12
    assert trace.y[-1] == pytest.approx(cam_config.s0, abs=1e-12)
    assert trace.phase[-1] == "retract"


def test_returns_to_start(default_trace, cam_config):
    assert default_trace.y[0] == pytest.approx(cam_config.s0)
    assert default_trace.y[-1] == pytest.approx(cam_config.s0, abs=1e-12)
    assert default_trace.phi[-1] == pytest.approx(0.0, abs=1e-12)


def test_scrape_rotation_accumulates(default_trace):
    assert default_trace.scrape_angle[-1] == pytest.approx(420.0)
    assert np.all(np.diff(default_trace.scrape_angle) >= 0)


def test_lift_held_during_scrape(default_trace, cam_config, cycloidal):
    scraping = np.array([p == "scrape" for p in default_trace.phase])
    np.testing.assert_allclose(default_trace.y[scraping], cam_config.s0 + cycloidal.lift)
    assert default_trace.phi[scraping] == pytest.approx(math.pi)


def test_trace_is_continuous(default_trace):
    assert np.max(np.abs(np.diff(default_trace.y))) < 0.01
    assert np.max(np.abs(np.diff(default_trace.phi))) < 0.01


def test_phase_labels_and_spans(default_trace):
    assert default_trace.phase[0] == "deploy"
    assert default_trace.phase[1000] == "scrape"
    assert default_trace.phase[-1] == "retract"
    assert [(s.kind, s.start, s.end) for s in default_trace.spans] == [
        ("deploy", 0.0, 1.0),
        ("scrape", 1.0, 4.5),
        ("retract", 4.5, 5.5),
    ]


def test_pressure_angle_follows_position(default_trace, cam_config):
    np.testing.assert_allclose(default_trace.mu, np.arctan(cam_config.e / default_trace.y))


def test_frame_columns(default_trace):
    frame = default_trace.to_frame()
    assert list(frame.columns) == MOTION_COLUMNS
    assert len(frame) == 5501


def test_state_accessor(default_trace, cam_config):
    state = default_trace.state(0)
    assert state.y == pytest.approx(cam_config.s0)
    assert state.y_dot == 0.0


def test_dwell_holds_everything(cam_config, cycloidal):
    program = MotionProgram(
        phases=[DeployPhase(duration=1.0), DwellPhase(duration=0.5), RetractPhase(duration=1.0)]
    )
    trace = run_motion_program(program, cam_config, DT, cycloidal)
    dwell = np.array([p == "dwell" for p in trace.phase])
    assert dwell.sum() == pytest.approx(500, abs=1)
    np.testing.assert_allclose(trace.y[dwell], cam_config.s0 + cycloidal.lift)
    assert np.all(trace.y_dot[dwell] == 0.0)
    assert np.all(trace.scrape_angle == 0.0)


def test_retract_without_lift_rejected(cam_config):
    program = MotionProgram(phases=[RetractPhase(duration=1.0)])
    with pytest.raises(InvalidProgramError):
        run_motion_program(program, cam_config, DT)


def test_partial_retract_allowed(cam_config):
    program = MotionProgram(
        phases=[
            DeployPhase(duration=1.0, law=CamLaw(lift=3.0)),
            RetractPhase(duration=1.0, law=CamLaw(lift=1.0)),
        ]
    )
    trace = run_motion_program(program, cam_config, DT)
    assert trace.y[-1] == pytest.approx(cam_config.s0 + 2.0)


@pytest.mark.parametrize("dt", [0.0, -0.001, float("nan")])
def test_nonpositive_step_rejected(cam_config, dt):
    with pytest.raises(InvalidProgramError):
        run_motion_program(MotionProgram(), cam_config, dt)


def test_trapezoidal_deploy_reaches_full_lift(cycloidal):
    config = CamConfig(e=2.0, s0=4.0, omega=SpeedProfile(kind=SpeedKind.TRAPEZOIDAL, ramp_fraction=0.25))
    trace = run_motion_program(MotionProgram(), config, DT, cycloidal)
    assert trace.y[1000] == pytest.approx(config.s0 + cycloidal.lift)
    assert trace.y_dot[0] == 0.0
    assert trace.y[-1] == pytest.approx(config.s0, abs=1e-12)


def test_deploy_and_retract_are_time_symmetric(cam_config, cycloidal):
    program = MotionProgram(phases=[DeployPhase(duration=1.0), RetractPhase(duration=1.0)])
    trace = run_motion_program(program, cam_config, DT, cycloidal)
    np.testing.assert_allclose(trace.y, trace.y[::-1], atol=1e-9)
