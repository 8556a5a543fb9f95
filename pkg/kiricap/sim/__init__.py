"""End-to-end actuation simulation."""

from .simulator import DEFAULT_DT, SimTrace, simulate
from .trace import TRACE_COLUMNS, export_trace, summarize_trace, trace_frame

__all__ = ["DEFAULT_DT", "SimTrace", "TRACE_COLUMNS", "export_trace", "simulate", "summarize_trace", "trace_frame"]
