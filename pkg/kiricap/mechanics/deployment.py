"""Flap opening angle as a function of applied strain."""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Sequence, Tuple

import numpy as np
from scipy.interpolate import PchipInterpolator

from kiricap.core.errors import InvalidParamsError, OutOfRangeError

logger = logging.getLogger(__name__)

DEFAULT_ANCHORS: Tuple[Tuple[float, float], ...] = ((0.0, 0.0), (0.15, 34.0), (0.20, 38.0))
MAX_STRAIN = 0.30


@dataclass(frozen=True)
class DeploymentModel:
    """Monotone piecewise-cubic (PCHIP) fit of angle vs strain.

    Beyond the last anchor the angle stays at ``saturation_angle``.
    """

    anchors: Tuple[Tuple[float, float], ...] = DEFAULT_ANCHORS
    interpolation: str = "pchip"
    max_strain: float = MAX_STRAIN
    _interp: PchipInterpolator = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.interpolation != "pchip":
            raise InvalidParamsError(f"unsupported interpolation '{self.interpolation}'")
        if len(self.anchors) < 2:
            raise InvalidParamsError("deployment model needs at least two anchors")
        eps = np.array([a[0] for a in self.anchors], dtype=float)
        theta = np.array([a[1] for a in self.anchors], dtype=float)
        if eps[0] != 0.0 or theta[0] != 0.0:
            raise InvalidParamsError("first anchor must be (0, 0)")
        if np.any(np.diff(eps) <= 0):
            raise InvalidParamsError("anchor strains must be strictly increasing")
        if np.any(np.diff(theta) < 0):
            raise InvalidParamsError("anchor angles must be nondecreasing")
        object.__setattr__(self, "_interp", PchipInterpolator(eps, theta, extrapolate=False))

    @property
    def saturation_angle(self) -> float:
        return float(self.anchors[-1][1])

    @property
    def saturation_strain(self) -> float:
        return float(self.anchors[-1][0])

    @classmethod
    def from_config(cls, data: Optional[Dict[str, Any]]) -> "DeploymentModel":
        """Build from the ``deployment`` section of deployment.yaml"""
        if not data:
            return cls()
        section = data.get("deployment", data)
        anchors: Sequence = section.get("anchors", DEFAULT_ANCHORS)
        return cls(
            anchors=tuple((float(e), float(t)) for e, t in anchors),
            interpolation=section.get("interpolation", "pchip"),
            max_strain=float(section.get("max_strain", MAX_STRAIN)),
        )

    def angle(self, strain):
        """Vectorised opening angle in degrees"""
        eps = np.asarray(strain, dtype=float)
        if np.any(~np.isfinite(eps)) or np.any(eps < 0.0) or np.any(eps > self.max_strain):
            raise OutOfRangeError(f"strain must lie in [0, {self.max_strain}]")
        clipped = np.minimum(eps, self.saturation_strain)
        theta = self._interp(clipped)
        theta = np.where(eps >= self.saturation_strain, self.saturation_angle, theta)
        return float(theta) if theta.ndim == 0 else theta


def opening_angle(model: DeploymentModel, strain: float) -> float:
    return model.angle(strain)
