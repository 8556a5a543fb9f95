"""Pressure-angle, acceleration and undercut checks for a cam design."""

import logging
import math
from typing import List

import numpy as np
from pydantic import BaseModel, Field

from kiricap.core.contracts import CamConfig, CamLaw
from kiricap.core.errors import ConstraintViolationError, InvalidParamsError
from kiricap.cam.kinematics import pressure_angle, rise_schedule
from kiricap.cam.laws import law_eval
from kiricap.cam.profile import DEFAULT_SAMPLES, pitch_curve, rise_curvature

logger = logging.getLogger(__name__)


class ConstraintReport(BaseModel):
    """Outcome of sampling the rise on a uniform phi grid"""

    n_samples: int
    max_pressure_angle: float = Field(..., description="max |mu| (rad)")
    max_acceleration: float = Field(..., description="max |y_ddot| (mm/s^2)")
    min_radius_of_curvature: float = Field(..., description="Smallest convex pitch radius (mm)")
    roller_radius: float
    mu_max: float
    a_max: float
    pressure_ok: bool
    acceleration_ok: bool
    undercut: bool

    @property
    def max_pressure_angle_deg(self) -> float:
        return math.degrees(self.max_pressure_angle)

    @property
    def passed(self) -> bool:
        return self.pressure_ok and self.acceleration_ok and not self.undercut

    def failures(self) -> List[str]:
        out = []
        if not self.pressure_ok:
            out.append(
                f"pressure angle {self.max_pressure_angle_deg:.3f} deg > {math.degrees(self.mu_max):.3f} deg"
            )
        if not self.acceleration_ok:
            out.append(f"acceleration {self.max_acceleration:.3f} mm/s^2 > {self.a_max:.3f} mm/s^2")
        if self.undercut:
            out.append(
                f"undercut: radius of curvature {self.min_radius_of_curvature:.5f} mm "
                f"< roller {self.roller_radius:.5f} mm"
            )
        return out

    def raise_for_violations(self) -> None:
        if not self.passed:
            raise ConstraintViolationError("; ".join(self.failures()))


def check_constraints(
    config: CamConfig,
    law: CamLaw,
    mu_max: float,
    a_max: float,
    n_samples: int = DEFAULT_SAMPLES,
) -> ConstraintReport:
    """Sample the rise at ``n_samples`` (>= 1024) uniform phi points and compare to the bounds"""
    if not 0.0 < mu_max < math.pi / 2:
        raise InvalidParamsError(f"mu_max must lie in (0, pi/2) rad, got {mu_max}")
    if a_max <= 0:
        raise InvalidParamsError(f"a_max must be > 0, got {a_max}")
    n = max(int(n_samples), DEFAULT_SAMPLES)

    phi = np.linspace(0.0, law.rise_angle, n)
    s, ds, d2s = law_eval(law, phi)
    schedule = rise_schedule(config, law)
    _, omega, omega_dot = schedule.evaluate(schedule.time_at(phi))
    y_ddot = d2s * omega**2 + ds * omega_dot
    mu = pressure_angle(config, s)

    if law.rise_angle < 2.0 * math.pi:
        curvature = pitch_curve(config, law, n).curvature
    else:
        curvature = rise_curvature(config, law, n)
    convex = curvature[curvature > 0]
    rho = float(1.0 / convex.max()) if convex.size else math.inf

    max_mu = float(np.max(np.abs(mu)))
    max_acc = float(np.max(np.abs(y_ddot)))
    report = ConstraintReport(
        n_samples=n,
        max_pressure_angle=max_mu,
        max_acceleration=max_acc,
        min_radius_of_curvature=rho,
        roller_radius=config.roller_radius,
        mu_max=mu_max,
        a_max=a_max,
        pressure_ok=max_mu <= mu_max,
        acceleration_ok=max_acc <= a_max,
        undercut=rho < config.roller_radius,
    )
    logger.info(
        "Constraint check: mu %.3f deg, |a| %.3f mm/s^2, rho %.4f mm -> %s",
        report.max_pressure_angle_deg, max_acc, rho, "pass" if report.passed else "FAIL",
    )
    return report
