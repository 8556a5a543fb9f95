"""Flap deployment, spike penetration and film stiffness models."""

from .deployment import DEFAULT_ANCHORS, DeploymentModel, opening_angle
from .spike import SpikeGeometry, penetration_depth, penetration_report, spike_length
from .stiffness import effective_stiffness, stiffness_sweep, strain_from_expansion

__all__ = [
    "DEFAULT_ANCHORS",
    "DeploymentModel",
    "SpikeGeometry",
    "effective_stiffness",
    "opening_angle",
    "penetration_depth",
    "penetration_report",
    "spike_length",
    "stiffness_sweep",
    "strain_from_expansion",
]
