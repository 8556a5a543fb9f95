"""Execution of a multi-phase motion program on a uniform time grid."""

import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np
import pandas as pd

from kiricap.core.contracts import (
    CamConfig,
    CamLaw,
    DeployPhase,
    DwellPhase,
    MotionProgram,
    RetractPhase,
    ScrapePhase,
)
from kiricap.core.errors import InvalidProgramError
from kiricap.cam.kinematics import AngleSchedule, FollowerState, pressure_angle
from kiricap.cam.laws import law_eval

logger = logging.getLogger(__name__)

MOTION_COLUMNS = ["t", "phi", "y", "y_dot", "y_ddot", "mu", "scrape_angle"]
LIFT_TOL = 1e-12
GRID_TOL = 1e-9


@dataclass(frozen=True)
class PhaseSpan:
    kind: str
    start: float
    end: float


@dataclass(frozen=True)
class MotionTrace:
    """Sampled follower states plus cumulative scrape rotation (deg)"""

    t: np.ndarray
    phi: np.ndarray
    y: np.ndarray
    y_dot: np.ndarray
    y_ddot: np.ndarray
    mu: np.ndarray
    scrape_angle: np.ndarray
    phase: Tuple[str, ...]
    spans: Tuple[PhaseSpan, ...]

    def __len__(self) -> int:
        return len(self.t)

    def state(self, i: int) -> FollowerState:
        return FollowerState(
            float(self.phi[i]), float(self.y[i]), float(self.y_dot[i]), float(self.y_ddot[i]), float(self.mu[i])
        )

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({c: getattr(self, c) for c in MOTION_COLUMNS})


def _phase_of(ends: np.ndarray, t: np.ndarray) -> np.ndarray:
    # half-open [start, end) except the final instant, which belongs to the last phase
    return np.minimum(np.searchsorted(ends, t, side="right"), len(ends) - 1)


def run_motion_program(
    program: MotionProgram,
    config: CamConfig,
    dt: float,
    deploy_law: Optional[CamLaw] = None,
) -> MotionTrace:
    """Sample the program at t_k = k dt and always end on t = T.

    When dt does not divide T the last step is shorter than dt.

    Deploy lifts the follower by its law's L while the cam turns forward by
    beta; Retract lowers it by L while the cam turns back. Dwell and Scrape
    hold the current lift, and Scrape advances the scrape angle at its rate.
    Phases without a law use ``deploy_law``.
    """
    if not dt > 0 or not math.isfinite(dt):
        raise InvalidProgramError(f"time step must be > 0, got {dt}")
    default_law = deploy_law or CamLaw()

    total = program.duration
    steps = total / dt
    nearest = round(steps)
    # float noise in T / dt must not add a sliver step
    n_steps = int(nearest) if abs(steps - nearest) <= GRID_TOL * max(1.0, steps) else math.ceil(steps)
    n = n_steps + 1
    t = np.arange(n) * dt
    t[-1] = total

    phi = np.zeros(n)
    y = np.full(n, config.s0)
    y_dot = np.zeros(n)
    y_ddot = np.zeros(n)
    scrape = np.zeros(n)
    names: List[str] = [""] * n

    durations = np.array([p.duration for p in program.phases])
    ends = np.cumsum(durations)
    owner = _phase_of(ends, t)

    level = 0.0
    cam_angle = 0.0
    scrape_total = 0.0
    spans = []
    start = 0.0
    for i, phase in enumerate(program.phases):
        end = float(ends[i])
        idx = np.flatnonzero(owner == i)
        local = np.clip(t[idx] - start, 0.0, phase.duration)
        spans.append(PhaseSpan(kind=phase.kind, start=start, end=end))
        for k in idx:
            names[k] = phase.kind

        if isinstance(phase, (DeployPhase, RetractPhase)):
            law = phase.law or default_law
            schedule = AngleSchedule.for_span(config.omega, law.rise_angle, phase.duration)
            ang, omega, omega_dot = schedule.evaluate(local)
            s, ds, d2s = law_eval(law, ang)
            sign = 1.0 if isinstance(phase, DeployPhase) else -1.0
            if sign < 0 and law.lift > level + LIFT_TOL:
                raise InvalidProgramError(
                    f"phase {i} retracts {law.lift} mm but the follower is only lifted {level:.6f} mm"
                )
            base = level if sign > 0 else level - law.lift
            offset = 0.0 if sign > 0 else law.lift
            y[idx] = config.s0 + base + offset + sign * s
            y_dot[idx] = sign * ds * omega
            y_ddot[idx] = sign * (d2s * omega**2 + ds * omega_dot)
            phi[idx] = cam_angle + sign * ang
            scrape[idx] = scrape_total
            level += sign * law.lift
            level = max(level, 0.0)
            cam_angle += sign * law.rise_angle
        elif isinstance(phase, ScrapePhase):
            y[idx] = config.s0 + level
            phi[idx] = cam_angle
            scrape[idx] = scrape_total + phase.rate * local
            scrape_total += phase.rate * phase.duration
        elif isinstance(phase, DwellPhase):
            y[idx] = config.s0 + level
            phi[idx] = cam_angle
            scrape[idx] = scrape_total
        else:  # pragma: no cover
            raise InvalidProgramError(f"unknown phase kind {phase!r}")
        start = end

    mu = pressure_angle(config, y - config.s0)
    logger.info(
        "Motion program: %d phases, %.3f s, %d rows",
        len(program.phases), total, n, extra={"rows": n},
    )
    return MotionTrace(
        t=t, phi=phi, y=y, y_dot=y_dot, y_ddot=y_ddot, mu=np.asarray(mu),
        scrape_angle=scrape, phase=tuple(names), spans=tuple(spans),
    )
