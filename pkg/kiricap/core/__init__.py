"""Shared contracts, errors, I/O helpers and run manifests."""

from .contracts import (
    CalibrationFit,
    CalibrationSource,
    CamConfig,
    CamLaw,
    CapsuleConfig,
    KirigamiParams,
    LawFamily,
    MotionProgram,
    SafetyEnvelope,
    SpeedKind,
    SpeedProfile,
    SpikePolicy,
    SummaryStats,
    Tissue,
    ToolConfig,
)
from .errors import KiricapError
from .manifest import RunManifest

__all__ = [
    "CalibrationFit",
    "CalibrationSource",
    "CamConfig",
    "CamLaw",
    "CapsuleConfig",
    "KiricapError",
    "KirigamiParams",
    "LawFamily",
    "MotionProgram",
    "RunManifest",
    "SafetyEnvelope",
    "SpeedKind",
    "SpeedProfile",
    "SpikePolicy",
    "SummaryStats",
    "Tissue",
    "ToolConfig",
]
