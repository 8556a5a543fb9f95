"""Pulse-to-angle calibration."""

import logging
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, List, Union

import numpy as np

from kiricap.core.contracts import CalibrationFit
from kiricap.core.errors import DegenerateDataError, EmptyInputError, InvalidParamsError, ParseError
from kiricap.core.io import read_numeric_csv

logger = logging.getLogger(__name__)

CALIBRATION_COLUMNS = ("pulses", "angle_deg")


@dataclass(frozen=True)
class CalibrationSample:
    pulses: float
    angle: float

    def __post_init__(self):
        if self.pulses < 0:
            raise InvalidParamsError(f"pulse count must be >= 0, got {self.pulses}")


def _r_squared(x: np.ndarray, y: np.ndarray, slope: float, intercept: float) -> float:
    residual = y - (slope * x + intercept)
    ss_res = float(residual @ residual)
    centred = y - y.mean()
    ss_tot = float(centred @ centred)
    if ss_tot == 0.0:
        return 1.0 if ss_res == 0.0 else 0.0
    return 1.0 - ss_res / ss_tot


def fit_pulse_angle(samples: Iterable[CalibrationSample], through_origin: bool = False) -> CalibrationFit:
    """Least-squares line angle = slope * pulses + intercept.

    With ``through_origin`` the intercept is pinned to 0; r2 is still taken
    about the mean angle, so it can be lower than the free fit's.
    """
    samples = list(samples)
    if len(samples) < 2:
        raise DegenerateDataError(f"need at least 2 calibration samples, got {len(samples)}")
    x = np.array([s.pulses for s in samples], dtype=float)
    y = np.array([s.angle for s in samples], dtype=float)
    if np.unique(x).size < 2:
        raise DegenerateDataError("all calibration samples share one pulse count")

    if through_origin:
        slope, intercept = float(x @ y / (x @ x)), 0.0
    else:
        slope, intercept = (float(c) for c in np.polyfit(x, y, 1))
    fit = CalibrationFit(slope=slope, intercept=intercept, r2=_r_squared(x, y, slope, intercept))
    logger.info("Calibration fit: %.6f deg/pulse, intercept %.6f deg, r2 %.6f", fit.slope, fit.intercept, fit.r2)
    return fit


def pulses_for_angle(fit: CalibrationFit, target: float) -> int:
    """Nearest pulse count for a target angle; halves round away from zero, negatives clamp to 0"""
    if not fit.slope > 0:
        raise InvalidParamsError(f"calibration slope must be > 0, got {fit.slope}")
    raw = (target - fit.intercept) / fit.slope
    n = math.copysign(math.floor(abs(raw) + 0.5), raw)
    return max(int(n), 0)


def load_calibration_csv(path: Union[str, Path]) -> List[CalibrationSample]:
    """Samples from a CSV with header ``pulses,angle_deg``"""
    frame = read_numeric_csv(path, CALIBRATION_COLUMNS)
    if frame.empty:
        raise EmptyInputError(f"{path} has no calibration samples")
    negative = np.flatnonzero(frame["pulses"].to_numpy() < 0)
    if negative.size:
        raise ParseError("pulse count must be >= 0", line=int(negative[0]) + 2)
    return [CalibrationSample(pulses=p, angle=a) for p, a in frame.itertuples(index=False, name=None)]


def pulses_for_angles(fit: CalibrationFit, targets) -> np.ndarray:
    """Vectorised pulses_for_angle"""
    if not fit.slope > 0:
        raise InvalidParamsError(f"calibration slope must be > 0, got {fit.slope}")
    raw = (np.asarray(targets, dtype=float) - fit.intercept) / fit.slope
    n = np.sign(raw) * np.floor(np.abs(raw) + 0.5)
    return np.maximum(n, 0).astype(int)
