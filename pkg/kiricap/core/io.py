"""CSV and JSON input/output shared by the CLI commands.

Writers are deterministic: fixed float formatting, sorted JSON keys, LF endings.
"""

import json
import logging
import math
from pathlib import Path
from typing import IO, Any, Sequence, Union

import numpy as np
import pandas as pd

from kiricap.core.errors import ExportIOError, ParseError

logger = logging.getLogger(__name__)

FLOAT_FORMAT = "%.6f"


def frame_to_csv_bytes(frame: pd.DataFrame) -> bytes:
    """Fixed 6-decimal CSV with LF line endings and no negative zeros"""
    frame = frame.copy()
    for col in frame.select_dtypes(include="float").columns:
        values = frame[col].to_numpy()
        # values that print as -0.000000 become 0
        frame[col] = np.where(np.abs(values) < 5e-7, 0.0, values)
    return frame.to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator="\n").encode("utf-8")


def _finite(data: Any) -> Any:
    # JSON has no inf/nan; write them as null
    if isinstance(data, float) and not math.isfinite(data):
        return None
    if isinstance(data, dict):
        return {k: _finite(v) for k, v in data.items()}
    if isinstance(data, (list, tuple)):
        return [_finite(v) for v in data]
    return data


def canonical_json(data: Any) -> str:
    return json.dumps(_finite(data), sort_keys=True, indent=2, allow_nan=False, default=_json_default) + "\n"


def _json_default(obj: Any) -> Any:
    if isinstance(obj, (np.floating, np.integer)):
        return obj.item()
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, Path):
        return str(obj)
    raise TypeError(f"{type(obj).__name__} is not JSON serialisable")


def write_bytes(data: bytes, path: Union[str, Path]) -> Path:
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_bytes(data)
    except OSError as e:
        raise ExportIOError(f"cannot write {path}: {e}") from e
    logger.debug("Wrote %s (%d bytes)", path, len(data))
    return path


def write_csv(frame: pd.DataFrame, path: Union[str, Path]) -> Path:
    return write_bytes(frame_to_csv_bytes(frame), path)


def write_json(data: Any, path: Union[str, Path]) -> Path:
    return write_bytes(canonical_json(data).encode("utf-8"), path)


def read_numeric_csv(source: Union[str, Path, IO], columns: Sequence[str]) -> pd.DataFrame:
    """Read a CSV whose header must start with ``columns``; every cell must be a finite number.

    ``source`` is a path or an open text/byte stream. Parse failures raise
    ParseError naming the 1-based file line.
    """
    if isinstance(source, str):
        source = Path(source)
    try:
        frame = pd.read_csv(source, dtype=str, skipinitialspace=True, keep_default_na=False, skip_blank_lines=False)
    except FileNotFoundError as e:
        raise ParseError(f"file not found: {source}") from e
    except pd.errors.EmptyDataError as e:
        raise ParseError("missing header", line=1) from e
    except pd.errors.ParserError as e:
        raise ParseError(f"malformed CSV: {e}") from e

    header = [c.strip() for c in frame.columns]
    if header[: len(columns)] != list(columns):
        raise ParseError(f"expected header {','.join(columns)}, got {','.join(header)}", line=1)
    frame.columns = header

    parsed = pd.DataFrame(
        {col: pd.to_numeric(frame[col].str.strip(), errors="coerce") for col in columns},
        columns=list(columns),
    ).astype(float)
    bad = ~np.isfinite(parsed.to_numpy())
    if bad.any():
        row, col = (int(i) for i in np.argwhere(bad)[0])
        name = columns[col]
        raise ParseError(f"column '{name}': cannot parse {frame[name].iloc[row]!r}", line=row + 2)
    return parsed
