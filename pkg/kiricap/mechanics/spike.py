"""Spike length and penetration depth."""

import logging
import math
from dataclasses import dataclass
from typing import Any, Dict, List

from kiricap.core.contracts import KirigamiParams, SpikePolicy
from kiricap.core.errors import InvalidParamsError, OutOfRangeError

logger = logging.getLogger(__name__)

# Measured reference depths at the 34 degree operating point (mm)
THEORETICAL_DEPTH = 0.704
MEASURED_MEDIAN_DEPTH = 0.61


@dataclass(frozen=True)
class SpikeGeometry:
    H: float
    source_params: KirigamiParams
    policy: SpikePolicy = SpikePolicy.APEX


def _apex(params: KirigamiParams) -> float:
    # apex height of an isosceles flap with base (l - delta) and base angle gamma
    return 0.5 * (params.l - params.delta) * math.tan(params.gamma_rad)


def _cotangent(params: KirigamiParams) -> float:
    return (params.l - params.delta) / (2.0 * math.tan(params.gamma_rad))


_POLICIES = {
    SpikePolicy.APEX: _apex,
    SpikePolicy.COTANGENT: _cotangent,
}


def spike_length(params: KirigamiParams, policy: SpikePolicy = SpikePolicy.APEX) -> SpikeGeometry:
    """Flap spike length H under the selected interpretation.

    Raises InvalidParamsError when H falls outside (0, l).
    """
    H = _POLICIES[SpikePolicy(policy)](params)
    if not 0.0 < H < params.l:
        raise InvalidParamsError(
            f"spike length {H:.5f} mm outside (0, l={params.l}) under policy '{SpikePolicy(policy).value}'"
        )
    return SpikeGeometry(H=H, source_params=params, policy=SpikePolicy(policy))


def penetration_depth(spike: SpikeGeometry, theta: float) -> float:
    """d = H sin(theta), theta in degrees on [0, 90]"""
    if not 0.0 <= theta <= 90.0:
        raise OutOfRangeError(f"opening angle {theta} deg outside [0, 90]")
    return spike.H * math.sin(math.radians(theta))


def penetration_report(params: KirigamiParams, theta: float) -> List[Dict[str, Any]]:
    """Computed depth under every policy next to the measured references.

    Policies whose H is invalid for ``params`` are reported with ``None``.
    """
    rows = []
    for policy in SpikePolicy:
        try:
            spike = spike_length(params, policy)
        except InvalidParamsError as e:
            logger.info("Policy %s not applicable: %s", policy.value, e)
            rows.append({"policy": policy.value, "H": None, "depth": None})
            continue
        rows.append({"policy": policy.value, "H": spike.H, "depth": penetration_depth(spike, theta)})
    for row in rows:
        row["theta"] = theta
        row["theoretical_reference"] = THEORETICAL_DEPTH
        row["measured_median"] = MEASURED_MEDIAN_DEPTH
    return rows
