"""Pulses -> cam angle -> lift -> strain -> flap angle -> penetration depth."""

import logging
import time
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from kiricap.cam.program import PhaseSpan, run_motion_program
from kiricap.core.contracts import CapsuleConfig
from kiricap.core.errors import InfeasibleConfigError, InvalidParamsError
from kiricap.drive.calibration import pulses_for_angles
from kiricap.mechanics.deployment import DeploymentModel
from kiricap.mechanics.spike import spike_length
from kiricap.mechanics.stiffness import strain_from_expansion

logger = logging.getLogger(__name__)

DEFAULT_DT = 0.001
# lift round-off below this is treated as zero expansion
LIFT_TOL = 1e-9


@dataclass(frozen=True)
class SimTrace:
    t: np.ndarray
    pulses: np.ndarray
    phi: np.ndarray
    y: np.ndarray
    strain: np.ndarray
    theta: np.ndarray
    depth: np.ndarray
    scrape_angle: np.ndarray
    phase: Tuple[str, ...]
    spans: Tuple[PhaseSpan, ...] = ()
    spike_length: float = 0.0

    def __len__(self) -> int:
        return len(self.t)

    @classmethod
    def empty(cls) -> "SimTrace":
        z = np.zeros(0)
        return cls(t=z, pulses=np.zeros(0, dtype=int), phi=z, y=z, strain=z, theta=z, depth=z, scrape_angle=z, phase=())


def simulate(
    config: CapsuleConfig,
    dt: float = DEFAULT_DT,
    model: Optional[DeploymentModel] = None,
) -> SimTrace:
    """Run the capsule's motion program and map the follower lift onto the skin.

    Raises InfeasibleConfigError when the lift stretches the skin beyond the
    deployment model's validated strain range.
    """
    model = model or DeploymentModel()
    started = time.perf_counter()
    spike = spike_length(config.kirigami, config.spike_policy)
    motion = run_motion_program(config.program, config.cam_config, dt, config.deploy_law)

    lift = motion.y - config.cam_config.s0
    if np.any(lift < -LIFT_TOL):
        raise InvalidParamsError("follower dropped below its initial position")
    strain = strain_from_expansion(np.clip(lift, 0.0, None), config.strain_reference_length)
    peak = float(strain.max()) if strain.size else 0.0
    if peak > model.max_strain:
        raise InfeasibleConfigError(
            f"peak strain {peak:.4f} exceeds the validated range [0, {model.max_strain}]; "
            f"reduce the lift or increase strain_reference_length"
        )

    theta = np.asarray(model.angle(strain))
    depth = spike.H * np.sin(np.radians(theta))
    pulses = pulses_for_angles(config.calibration, np.degrees(motion.phi) + motion.scrape_angle)

    elapsed = time.perf_counter() - started
    logger.info(
        "Simulated %d rows: peak strain %.4f, peak theta %.3f deg, peak depth %.5f mm",
        len(motion), peak, float(theta.max(initial=0.0)), float(depth.max(initial=0.0)),
        extra={"rows": len(motion), "elapsed": round(elapsed, 4)},
    )
    return SimTrace(
        t=motion.t,
        pulses=pulses,
        phi=motion.phi,
        y=motion.y,
        strain=strain,
        theta=theta,
        depth=depth,
        scrape_angle=motion.scrape_angle,
        phase=motion.phase,
        spans=motion.spans,
        spike_length=spike.H,
    )
