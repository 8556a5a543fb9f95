"""Force-trace analysis, tissue safety and measurement statistics."""

from .forces import AXES, FORCE_COLUMNS, ForceTrace, Peak, load_force_csv, noise_floor, peak_forces
from .safety import (
    DEFAULT_ENVELOPES,
    Classification,
    Verdict,
    classify_safety,
    envelope_for,
    envelopes_from_config,
)
from .stats import GroupComparison, compare_groups, load_values_csv, summarize

__all__ = [
    "AXES",
    "Classification",
    "DEFAULT_ENVELOPES",
    "FORCE_COLUMNS",
    "ForceTrace",
    "GroupComparison",
    "Peak",
    "Verdict",
    "classify_safety",
    "compare_groups",
    "envelope_for",
    "envelopes_from_config",
    "load_force_csv",
    "load_values_csv",
    "noise_floor",
    "peak_forces",
    "summarize",
]
