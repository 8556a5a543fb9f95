"""Force-trace ingestion and peak detection."""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import IO, List, Union

import numpy as np
from scipy.signal import find_peaks
from scipy.stats import median_abs_deviation

from kiricap.core.errors import InvalidParamsError, NonMonotoneTimeError
from kiricap.core.io import read_numeric_csv

logger = logging.getLogger(__name__)

FORCE_COLUMNS = ("t", "fx", "fy", "fz")
AXES = ("fx", "fy", "fz")
NOISE_FLOOR_MADS = 5.0


@dataclass(frozen=True)
class ForceTrace:
    t: np.ndarray
    fx: np.ndarray
    fy: np.ndarray
    fz: np.ndarray

    def __len__(self) -> int:
        return len(self.t)

    def axis(self, name: str) -> np.ndarray:
        if name not in AXES:
            raise InvalidParamsError(f"unknown axis '{name}'")
        return getattr(self, name)


@dataclass(frozen=True)
class Peak:
    t: float
    axis: str
    magnitude: float

    def as_dict(self):
        return {"t": self.t, "axis": self.axis, "magnitude": self.magnitude}


def load_force_csv(source: Union[str, Path, IO]) -> ForceTrace:
    """Parse a ``t,fx,fy,fz`` CSV; time must strictly increase"""
    frame = read_numeric_csv(source, FORCE_COLUMNS)
    t = frame["t"].to_numpy()
    back = np.flatnonzero(np.diff(t) <= 0)
    if back.size:
        row = int(back[0]) + 1
        raise NonMonotoneTimeError(f"time {t[row]} does not increase past {t[row - 1]}", line=row + 2)
    logger.debug("Loaded force trace with %d rows", len(frame), extra={"rows": len(frame)})
    return ForceTrace(t=t, fx=frame["fx"].to_numpy(), fy=frame["fy"].to_numpy(), fz=frame["fz"].to_numpy())


def noise_floor(signal: np.ndarray) -> float:
    if signal.size == 0:
        return 0.0
    return NOISE_FLOOR_MADS * float(median_abs_deviation(signal, scale=1.0))


def _axis_peaks(t: np.ndarray, signal: np.ndarray, window: float, axis: str) -> List[Peak]:
    magnitude = np.abs(signal)
    floor = noise_floor(signal)
    # pad below any magnitude so the first and last samples can be maxima
    idx, _ = find_peaks(np.pad(magnitude, 1, constant_values=-1.0))
    idx = idx - 1
    idx = idx[magnitude[idx] > floor]
    # strongest first; earlier wins a tie
    order = idx[np.lexsort((t[idx], -magnitude[idx]))]
    kept: List[int] = []
    for i in order:
        if all(abs(t[i] - t[j]) >= window for j in kept):
            kept.append(int(i))
    return [Peak(t=float(t[i]), axis=axis, magnitude=float(magnitude[i])) for i in sorted(kept)]


def peak_forces(trace: ForceTrace, window: float) -> List[Peak]:
    """Local maxima of |f| per axis above 5 MAD of that axis.

    Within any ``window`` seconds only the largest maximum survives, so two
    pulses closer than ``window`` report one peak. Results are grouped by
    axis (fx, fy, fz) and ordered by time.
    """
    if not window > 0:
        raise InvalidParamsError(f"window must be > 0, got {window}")
    peaks: List[Peak] = []
    for axis in AXES:
        peaks.extend(_axis_peaks(trace.t, trace.axis(axis), window, axis))
    logger.info("Detected %d force peak(s)", len(peaks))
    return peaks
