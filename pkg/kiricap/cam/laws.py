"""Closed-form displacement laws.

Each family is defined on the normalised rise x = phi / beta in [0, 1] as
f(x), f'(x), f''(x) with f(0) = 0, f(1) = 1 and zero end velocity. The
physical law scales by the lift L and converts derivatives to phi:
s = L f, ds/dphi = L f' / beta, d2s/dphi2 = L f'' / beta^2.
"""

import math
from typing import Callable, Dict, Tuple

import numpy as np

from kiricap.core.contracts import CamLaw, LawFamily
from kiricap.core.errors import OutOfRangeError

UnitLaw = Callable[[np.ndarray], Tuple[np.ndarray, np.ndarray, np.ndarray]]

# relative slack on the [0, beta] domain check
DOMAIN_TOL = 1e-12
TWO_PI = 2.0 * math.pi


def _cycloidal(x):
    a = TWO_PI * x
    return x - np.sin(a) / TWO_PI, 1.0 - np.cos(a), TWO_PI * np.sin(a)


def _poly_345(x):
    x2, x3 = x * x, x * x * x
    s = x3 * (10.0 - 15.0 * x + 6.0 * x2)
    v = x2 * (30.0 - 60.0 * x + 30.0 * x2)
    a = x * (60.0 - 180.0 * x + 120.0 * x2)
    return s, v, a


def _poly_4567(x):
    x2, x3 = x * x, x * x * x
    s = x2 * x2 * (35.0 - 84.0 * x + 70.0 * x2 - 20.0 * x3)
    v = x3 * (140.0 - 420.0 * x + 420.0 * x2 - 140.0 * x3)
    a = x2 * (420.0 - 1680.0 * x + 2100.0 * x2 - 840.0 * x3)
    return s, v, a


_MS_K = 4.0 + math.pi


def _modified_sine(x):
    # Three segments with breakpoints at x = 1/8 and 7/8: quarter-period
    # sine acceleration pulses of period 1/2 at either end, joined by a
    # sine of period 3/2 through the middle.
    x = np.asarray(x, dtype=float)
    mid = (x > 0.125) & (x < 0.875)
    late = x >= 0.875

    u = 4.0 * math.pi * x
    s = (math.pi * x - np.sin(u) / 4.0) / _MS_K
    v = math.pi * (1.0 - np.cos(u)) / _MS_K
    a = 4.0 * math.pi**2 * np.sin(u) / _MS_K

    w = math.pi / 3.0 + 4.0 * math.pi * x / 3.0
    s_mid = (2.0 + math.pi * x - 9.0 * np.sin(w) / 4.0) / _MS_K
    v_mid = math.pi * (1.0 - 3.0 * np.cos(w)) / _MS_K
    a_mid = 4.0 * math.pi**2 * np.sin(w) / _MS_K

    s = np.where(mid, s_mid, s)
    s = np.where(late, s + 4.0 / _MS_K, s)
    v = np.where(mid, v_mid, v)
    a = np.where(mid, a_mid, a)
    return s, v, a


UNIT_LAWS: Dict[LawFamily, UnitLaw] = {
    LawFamily.CYCLOIDAL: _cycloidal,
    LawFamily.MODIFIED_SINE: _modified_sine,
    LawFamily.POLY_345: _poly_345,
    LawFamily.POLY_4567: _poly_4567,
}


def _normalised(phi, span: float) -> np.ndarray:
    phi = np.asarray(phi, dtype=float)
    slack = DOMAIN_TOL * max(span, 1.0)
    if np.any(~np.isfinite(phi)) or np.any(phi < -slack) or np.any(phi > span + slack):
        raise OutOfRangeError(f"cam angle outside [0, {span:.6f}] rad")
    return np.clip(phi / span, 0.0, 1.0)


def _unpack(values):
    if np.ndim(values[0]) == 0:
        return tuple(float(v) for v in values)
    return values


def law_eval(law: CamLaw, phi):
    """Displacement s (mm), ds/dphi (mm/rad) and d2s/dphi2 (mm/rad^2).

    Accepts a scalar or an array of cam angles in [0, beta].
    """
    beta = law.rise_angle
    x = _normalised(phi, beta)
    f, df, d2f = UNIT_LAWS[law.family](x)
    L = law.lift
    return _unpack((L * f, L * df / beta, L * d2f / beta**2))


def return_eval(law: CamLaw, phi, span: float):
    """Return stroke from L back to 0 over ``span`` rad using the same family"""
    x = _normalised(phi, span)
    f, df, d2f = UNIT_LAWS[law.family](x)
    L = law.lift
    return _unpack((L * (1.0 - f), -L * df / span, -L * d2f / span**2))
