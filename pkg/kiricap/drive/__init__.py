"""Pulse calibration and step-sequence generation."""

from .calibration import (
    CALIBRATION_COLUMNS,
    CalibrationSample,
    fit_pulse_angle,
    load_calibration_csv,
    pulses_for_angle,
    pulses_for_angles,
)
from .stepper import Direction, StepMode, StepSequence, net_pulses, step_sequence

__all__ = [
    "CALIBRATION_COLUMNS",
    "CalibrationSample",
    "Direction",
    "StepMode",
    "StepSequence",
    "fit_pulse_angle",
    "load_calibration_csv",
    "net_pulses",
    "pulses_for_angle",
    "pulses_for_angles",
    "step_sequence",
]
