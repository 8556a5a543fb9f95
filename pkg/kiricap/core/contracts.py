"""Pydantic models for the parameter sets exchanged between modules.

All models are frozen and reject unknown fields, so a typo in a JSON config
fails loudly instead of silently falling back to a default.
"""

import math
from enum import Enum
from typing import Annotated, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class StrictModel(BaseModel):
    """Base for every kiricap contract"""

    model_config = ConfigDict(frozen=True, extra="forbid")


class KirigamiParams(StrictModel):
    """Cut-pattern parameters plus strip dimensions and film thickness.

    Coordinates: strip lower-left corner at the origin, x along the width w,
    y along the height h. The opening angle is given in degrees.
    """

    delta: float = Field(0.5, gt=0.0, description="Ligament / cut spacing (mm)")
    l: float = Field(3.0, gt=0.0, description="Notch length (mm)")
    gamma: float = Field(40.0, gt=0.0, lt=90.0, description="Opening angle (degrees)")
    h: float = Field(7.5, gt=0.0, description="Strip height (mm)")
    w: float = Field(50.0, gt=0.0, description="Strip width (mm)")
    t: float = Field(0.05, gt=0.0, description="Film thickness (mm)")

    @model_validator(mode="after")
    def ligament_shorter_than_notch(self) -> "KirigamiParams":
        if not self.delta < self.l:
            raise ValueError(f"delta ({self.delta}) must be smaller than l ({self.l})")
        return self

    @property
    def gamma_rad(self) -> float:
        return math.radians(self.gamma)


class LawFamily(str, Enum):
    """Displacement-law families"""

    CYCLOIDAL = "cycloidal"
    MODIFIED_SINE = "modified-sine"
    POLY_345 = "poly-3-4-5"
    POLY_4567 = "poly-4-5-6-7"


class CamLaw(StrictModel):
    """A displacement law instance: family, lift and rise angle.

    A zero lift is accepted as the degenerate law that never moves the
    follower.
    """

    family: LawFamily = LawFamily.CYCLOIDAL
    lift: float = Field(3.0, ge=0.0, description="Lift L (mm)")
    rise_angle: float = Field(math.pi, gt=0.0, le=2.0 * math.pi, description="Rise angle beta (rad)")


class SpeedKind(str, Enum):
    CONSTANT = "constant"
    TRAPEZOIDAL = "trapezoidal"


class SpeedProfile(StrictModel):
    """Cam angular-speed profile.

    For ``constant`` the cam turns at ``omega``; for ``trapezoidal`` ``omega``
    is the cruise speed reached after a linear ramp lasting ``ramp_fraction``
    of the phase, mirrored at the end.
    """

    kind: SpeedKind = SpeedKind.CONSTANT
    omega: float = Field(math.pi, gt=0.0, description="omega_c or omega_max (rad/s)")
    ramp_fraction: float = Field(0.2, gt=0.0, le=0.5)


class CamConfig(StrictModel):
    """Offset translating roller-follower constants"""

    e: float = Field(2.0, ge=0.0, description="Lateral offset (mm)")
    s0: float = Field(4.0, gt=0.0, description="Initial vertical distance (mm)")
    roller_radius: float = Field(0.8, ge=0.0, description="Roller radius (mm)")
    omega: SpeedProfile = Field(default_factory=SpeedProfile)


class DeployPhase(StrictModel):
    kind: Literal["deploy"] = "deploy"
    law: Optional[CamLaw] = None
    duration: float = Field(..., gt=0.0)


class DwellPhase(StrictModel):
    kind: Literal["dwell"] = "dwell"
    duration: float = Field(..., gt=0.0)


class ScrapePhase(StrictModel):
    kind: Literal["scrape"] = "scrape"
    rate: float = Field(..., description="Scrape rotation rate (deg/s)")
    duration: float = Field(..., gt=0.0)


class RetractPhase(StrictModel):
    kind: Literal["retract"] = "retract"
    law: Optional[CamLaw] = None
    duration: float = Field(..., gt=0.0)


Phase = Annotated[
    Union[DeployPhase, DwellPhase, ScrapePhase, RetractPhase],
    Field(discriminator="kind"),
]


class MotionProgram(StrictModel):
    """Ordered actuation phases.

    Deploy and Retract phases without their own law use the law supplied by
    the caller (the capsule's deploy law).
    """

    phases: List[Phase] = Field(
        default_factory=lambda: [
            DeployPhase(duration=1.0),
            ScrapePhase(rate=120.0, duration=3.5),
            RetractPhase(duration=1.0),
        ]
    )

    @field_validator("phases")
    @classmethod
    def at_least_one_phase(cls, v):
        if not v:
            raise ValueError("a motion program needs at least one phase")
        return v

    @property
    def duration(self) -> float:
        return float(sum(p.duration for p in self.phases))


class CalibrationFit(StrictModel):
    """Linear pulse-to-angle calibration"""

    slope: float = Field(..., description="Degrees per pulse")
    intercept: float = Field(0.0, description="Degrees")
    r2: float = Field(1.0, description="Coefficient of determination")

    @property
    def pulses_per_revolution(self) -> float:
        return 360.0 / self.slope if self.slope else math.inf


class SpikePolicy(str, Enum):
    """Interpretations of the spike-length formula"""

    APEX = "apex"
    COTANGENT = "cotangent"


class CapsuleConfig(StrictModel):
    """Everything a simulation needs"""

    kirigami: KirigamiParams = Field(default_factory=KirigamiParams)
    cam_config: CamConfig = Field(default_factory=CamConfig)
    deploy_law: CamLaw = Field(default_factory=CamLaw)
    program: MotionProgram = Field(default_factory=MotionProgram)
    calibration: CalibrationFit = Field(default_factory=lambda: CalibrationFit(slope=18.1))
    strain_reference_length: float = Field(50.0, gt=0.0, description="Gauge length for strain (mm)")
    spike_policy: SpikePolicy = SpikePolicy.APEX


class Tissue(str, Enum):
    GASTRIC = "gastric"
    INTESTINAL = "intestinal"


class SafetyEnvelope(StrictModel):
    """Tissue-specific force band; [f_min, f_max] is closed"""

    tissue: Tissue
    f_min: float = Field(..., gt=0.0, description="N")
    f_max: float = Field(..., gt=0.0, description="N")

    @model_validator(mode="after")
    def ordered_bounds(self) -> "SafetyEnvelope":
        if not self.f_min < self.f_max:
            raise ValueError(f"f_min ({self.f_min}) must be smaller than f_max ({self.f_max})")
        return self


class SummaryStats(StrictModel):
    """Median / IQR / range / mean summary of a measurement set"""

    n: int
    median: float
    q1: float
    q3: float
    min: float
    max: float
    mean: float

    @property
    def five_number(self) -> Tuple[float, float, float, float, float]:
        return (self.min, self.q1, self.median, self.q3, self.max)


class CalibrationSource(StrictModel):
    """Either an inline fit or a CSV of calibration samples"""

    fit: Optional[CalibrationFit] = None
    csv: Optional[str] = None
    through_origin: bool = False

    @model_validator(mode="after")
    def exactly_one_source(self) -> "CalibrationSource":
        if (self.fit is None) == (self.csv is None):
            raise ValueError("calibration needs exactly one of 'fit' or 'csv'")
        return self


class ToolConfig(StrictModel):
    """Top-level JSON configuration consumed by the CLI"""

    kirigami: KirigamiParams = Field(default_factory=KirigamiParams)
    cam: CamConfig = Field(default_factory=CamConfig)
    law: CamLaw = Field(default_factory=CamLaw)
    program: MotionProgram = Field(default_factory=MotionProgram)
    calibration: CalibrationSource = Field(
        default_factory=lambda: CalibrationSource(fit=CalibrationFit(slope=18.1))
    )
    spike_policy: SpikePolicy = SpikePolicy.APEX
    strain_reference_length: float = Field(50.0, gt=0.0)
    output_dir: Optional[str] = None
