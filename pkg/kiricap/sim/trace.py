"""Trace serialisation and summary."""

from typing import Any, Dict

import numpy as np
import pandas as pd

from kiricap.core.io import frame_to_csv_bytes
from kiricap.sim.simulator import SimTrace

TRACE_COLUMNS = ["t", "pulses", "phi", "y", "strain", "theta", "depth", "scrape_angle", "phase"]


def trace_frame(trace: SimTrace) -> pd.DataFrame:
    data = {c: getattr(trace, c) for c in TRACE_COLUMNS if c != "phase"}
    data["pulses"] = np.asarray(trace.pulses, dtype=int)
    data["phase"] = list(trace.phase)
    return pd.DataFrame(data, columns=TRACE_COLUMNS)


def export_trace(trace: SimTrace) -> bytes:
    """CSV with a header row, fixed column order and 6 decimals"""
    return frame_to_csv_bytes(trace_frame(trace))


def summarize_trace(trace: SimTrace) -> Dict[str, Any]:
    """Peaks, final state and per-phase time spans"""
    if len(trace) == 0:
        return {"rows": 0, "spans": []}
    i_peak = int(np.argmax(trace.depth))
    return {
        "rows": len(trace),
        "spike_length": trace.spike_length,
        "peak_strain": float(trace.strain.max()),
        "peak_theta": float(trace.theta.max()),
        "peak_depth": float(trace.depth[i_peak]),
        "time_of_peak_depth": float(trace.t[i_peak]),
        "final_theta": float(trace.theta[-1]),
        "final_y": float(trace.y[-1]),
        "total_scrape_rotation": float(trace.scrape_angle[-1] - trace.scrape_angle[0]),
        "spans": [{"phase": s.kind, "start": s.start, "end": s.end} for s in trace.spans],
    }
