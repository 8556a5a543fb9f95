"""Displacement laws, follower kinematics, cam profiles and motion programs."""

from .constraints import ConstraintReport, check_constraints
from .kinematics import AngleSchedule, FollowerState, follower_kinematics, pressure_angle
from .laws import UNIT_LAWS, law_eval, return_eval
from .profile import PitchCurve, cam_profile, is_simple, pitch_curve
from .program import MOTION_COLUMNS, MotionTrace, PhaseSpan, run_motion_program

__all__ = [
    "AngleSchedule",
    "ConstraintReport",
    "FollowerState",
    "MOTION_COLUMNS",
    "MotionTrace",
    "PhaseSpan",
    "PitchCurve",
    "UNIT_LAWS",
    "cam_profile",
    "check_constraints",
    "follower_kinematics",
    "is_simple",
    "law_eval",
    "pitch_curve",
    "pressure_angle",
    "return_eval",
    "run_motion_program",
]
