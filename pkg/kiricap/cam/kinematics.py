"""Offset translating-follower kinematics under a cam speed profile."""

import logging
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from kiricap.core.contracts import CamConfig, CamLaw, SpeedKind, SpeedProfile
from kiricap.core.errors import InvalidParamsError, OutOfRangeError
from kiricap.cam.laws import law_eval

logger = logging.getLogger(__name__)

TIME_TOL = 1e-12


@dataclass(frozen=True)
class FollowerState:
    """Follower state; fields are floats or equally shaped arrays"""

    phi: float
    y: float
    y_dot: float
    y_ddot: float
    mu: float


def pressure_angle(config: CamConfig, s):
    """mu = arctan(e / (s0 + s)) in radians"""
    y = config.s0 + np.asarray(s, dtype=float)
    if np.any(y <= 0):
        raise InvalidParamsError("follower position s0 + s must be > 0")
    mu = np.arctan(config.e / y)
    return float(mu) if mu.ndim == 0 else mu


@dataclass(frozen=True)
class AngleSchedule:
    """Cam angle phi(t) sweeping ``span`` rad in ``duration`` s.

    Constant speed turns at span / duration. The trapezoidal schedule ramps
    linearly up over ``ramp`` s, cruises at ``omega_max`` and ramps down
    symmetrically.
    """

    kind: SpeedKind
    span: float
    duration: float
    omega_max: float
    ramp: float = 0.0

    @classmethod
    def for_span(cls, profile: SpeedProfile, span: float, duration: Optional[float] = None) -> "AngleSchedule":
        """Schedule covering ``span``; a given ``duration`` rescales the speed to fit"""
        if span <= 0:
            raise InvalidParamsError(f"cam sweep must be > 0, got {span}")
        if profile.kind == SpeedKind.CONSTANT:
            T = duration if duration is not None else span / profile.omega
            return cls(kind=SpeedKind.CONSTANT, span=span, duration=T, omega_max=span / T)
        r = profile.ramp_fraction
        T = duration if duration is not None else span / (profile.omega * (1.0 - r))
        omega_max = span / (T * (1.0 - r))
        if duration is not None and not math.isclose(omega_max, profile.omega, rel_tol=1e-9):
            logger.debug("Cruise speed rescaled from %.6f to %.6f rad/s to fit %.6f s", profile.omega, omega_max, T)
        return cls(kind=SpeedKind.TRAPEZOIDAL, span=span, duration=T, omega_max=omega_max, ramp=r * T)

    @property
    def alpha(self) -> float:
        return self.omega_max / self.ramp if self.ramp > 0 else 0.0

    def _check(self, t) -> np.ndarray:
        t = np.asarray(t, dtype=float)
        slack = TIME_TOL * max(self.duration, 1.0)
        if np.any(~np.isfinite(t)) or np.any(t < -slack) or np.any(t > self.duration + slack):
            raise OutOfRangeError(f"time outside [0, {self.duration:.6f}] s")
        return np.clip(t, 0.0, self.duration)

    def evaluate(self, t):
        """(phi, omega, omega_dot) at time(s) t"""
        t = self._check(t)
        if self.kind == SpeedKind.CONSTANT:
            w = self.omega_max
            return w * t, np.full_like(t, w), np.zeros_like(t)
        tau, T, a, w = self.ramp, self.duration, self.alpha, self.omega_max
        up = t < tau
        down = t > T - tau
        phi = np.where(up, 0.5 * a * t**2, 0.5 * a * tau**2 + w * (t - tau))
        phi = np.where(down, self.span - 0.5 * a * (T - t) ** 2, phi)
        omega = np.where(up, a * t, np.where(down, a * (T - t), w))
        omega_dot = np.where(up, a, np.where(down, -a, 0.0))
        return phi, omega, omega_dot

    def time_at(self, phi) -> np.ndarray:
        """Inverse of phi(t)"""
        phi = np.clip(np.asarray(phi, dtype=float), 0.0, self.span)
        if self.kind == SpeedKind.CONSTANT:
            return phi / self.omega_max
        tau, T, a, w = self.ramp, self.duration, self.alpha, self.omega_max
        phi_ramp = 0.5 * a * tau**2
        return np.where(
            phi < phi_ramp,
            np.sqrt(2.0 * phi / a),
            np.where(
                phi <= self.span - phi_ramp,
                tau + (phi - phi_ramp) / w,
                T - np.sqrt(np.maximum(2.0 * (self.span - phi) / a, 0.0)),
            ),
        )


def rise_schedule(config: CamConfig, law: CamLaw, duration: Optional[float] = None) -> AngleSchedule:
    return AngleSchedule.for_span(config.omega, law.rise_angle, duration)


def follower_kinematics(config: CamConfig, law: CamLaw, t) -> FollowerState:
    """Follower state at time(s) t of a rise driven by the configured speed profile.

    y = s0 + s(phi), y_dot = s' omega, y_ddot = s'' omega^2 + s' omega_dot.
    """
    schedule = rise_schedule(config, law)
    phi, omega, omega_dot = schedule.evaluate(t)
    s, ds, d2s = law_eval(law, phi)
    y = config.s0 + np.asarray(s)
    y_dot = np.asarray(ds) * omega
    y_ddot = np.asarray(d2s) * omega**2 + np.asarray(ds) * omega_dot
    mu = pressure_angle(config, s)
    if np.ndim(phi) == 0:
        return FollowerState(float(phi), float(y), float(y_dot), float(y_ddot), float(mu))
    return FollowerState(phi, y, y_dot, y_ddot, mu)
