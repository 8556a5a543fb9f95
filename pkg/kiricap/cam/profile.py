"""Pitch curve and roller-offset cam profile for the offset translating follower.

Cam-fixed frame: the cam turns counter-clockwise by phi, so the roller centre
(e, y) seen from the cam is rotated by -phi. The locus is traversed
clockwise as phi grows.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np
from shapely.geometry import LinearRing

from kiricap.core.contracts import CamConfig, CamLaw
from kiricap.core.errors import InvalidParamsError, UndercutError
from kiricap.cam.laws import law_eval, return_eval

logger = logging.getLogger(__name__)

MIN_SAMPLES = 64
DEFAULT_SAMPLES = 1024


@dataclass(frozen=True)
class PitchCurve:
    """Sampled roller-centre locus over one revolution.

    ``points`` holds N samples at phi = 2 pi k / N; the closing edge back to
    the first sample is implicit. ``tangent`` and ``curvature`` come from the
    analytic derivatives of the displacement law, with curvature positive
    where the curve is convex.
    """

    phi: np.ndarray
    points: np.ndarray
    tangent: np.ndarray
    curvature: np.ndarray

    @property
    def min_convex_radius(self) -> float:
        convex = self.curvature[self.curvature > 0]
        return float(1.0 / convex.max()) if convex.size else math.inf

    @property
    def signed_area(self) -> float:
        x, y = self.points[:, 0], self.points[:, 1]
        return 0.5 * float(np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y))


def follower_displacement(law: CamLaw, phi: np.ndarray):
    """s, s', s'' over a full revolution: rise on [0, beta], return on [beta, 2 pi]"""
    beta = law.rise_angle
    if beta >= 2.0 * math.pi:
        raise InvalidParamsError("a closed cam needs a return stroke; rise angle must be < 2 pi")
    rising = phi <= beta
    s = np.empty_like(phi)
    ds = np.empty_like(phi)
    d2s = np.empty_like(phi)
    s[rising], ds[rising], d2s[rising] = law_eval(law, phi[rising])
    ret = ~rising
    s[ret], ds[ret], d2s[ret] = return_eval(law, phi[ret] - beta, 2.0 * math.pi - beta)
    return s, ds, d2s


def _locus(config: CamConfig, phi, y, dy, d2y):
    c, s = np.cos(phi), np.sin(phi)
    e = config.e
    points = np.column_stack([e * c + y * s, -e * s + y * c])
    # derivatives in the follower-aligned frame; the rotation drops out of the cross product
    ax, ay = y, -e + dy
    bx, by = -e + 2.0 * dy, -y + d2y
    speed = np.hypot(ax, ay)
    curvature = -(ax * by - ay * bx) / speed**3
    tx, ty = ax * c + ay * s, -ax * s + ay * c
    tangent = np.column_stack([tx, ty]) / speed[:, None]
    return points, tangent, curvature


def pitch_curve(config: CamConfig, law: CamLaw, n_samples: int = DEFAULT_SAMPLES) -> PitchCurve:
    if n_samples < MIN_SAMPLES:
        raise InvalidParamsError(f"n_samples must be >= {MIN_SAMPLES}, got {n_samples}")
    phi = 2.0 * math.pi * np.arange(n_samples) / n_samples
    s, ds, d2s = follower_displacement(law, phi)
    points, tangent, curvature = _locus(config, phi, config.s0 + s, ds, d2s)
    return PitchCurve(phi=phi, points=points, tangent=tangent, curvature=curvature)


def rise_curvature(config: CamConfig, law: CamLaw, n_samples: int = DEFAULT_SAMPLES) -> np.ndarray:
    """Pitch curvature over the rise alone; usable when beta = 2 pi"""
    phi = np.linspace(0.0, law.rise_angle, n_samples)
    s, ds, d2s = law_eval(law, phi)
    return _locus(config, phi, config.s0 + s, ds, d2s)[2]


def cam_profile(pitch: PitchCurve, roller_radius: float) -> np.ndarray:
    """Inner envelope of the roller: the pitch curve offset inwards by ``roller_radius``.

    Raises UndercutError when the roller is larger than the smallest convex
    radius of curvature of the pitch curve.
    """
    if roller_radius < 0:
        raise InvalidParamsError(f"roller radius must be >= 0, got {roller_radius}")
    if roller_radius == 0:
        return pitch.points.copy()
    rho = pitch.min_convex_radius
    if rho < roller_radius:
        raise UndercutError(rho, roller_radius)
    tx, ty = pitch.tangent[:, 0], pitch.tangent[:, 1]
    if pitch.signed_area < 0:
        inward = np.column_stack([ty, -tx])
    else:
        inward = np.column_stack([-ty, tx])
    profile = pitch.points + roller_radius * inward
    logger.debug("Cam profile: %d points, min convex radius %.5f mm", len(profile), rho)
    return profile


def is_simple(points: np.ndarray) -> bool:
    """True when the closed polyline does not cross itself"""
    return bool(LinearRing(points).is_simple)
