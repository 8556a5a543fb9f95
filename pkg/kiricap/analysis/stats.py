"""Descriptive statistics for measurement sets."""

import logging
from pathlib import Path
from typing import IO, Iterable, List, Union

import numpy as np
from pydantic import BaseModel
from scipy.stats import mannwhitneyu

from kiricap.core.contracts import SummaryStats
from kiricap.core.errors import EmptyInputError, InvalidParamsError
from kiricap.core.io import read_numeric_csv

logger = logging.getLogger(__name__)

VALUE_COLUMN = "value"


def summarize(values: Iterable[float]) -> SummaryStats:
    """Median and quartiles by linear interpolation between order statistics"""
    x = np.asarray(list(values), dtype=float)
    if x.size == 0:
        raise EmptyInputError("cannot summarise an empty measurement set")
    if not np.all(np.isfinite(x)):
        raise InvalidParamsError("measurements must be finite")
    q1, median, q3 = np.percentile(x, [25.0, 50.0, 75.0], method="linear")
    return SummaryStats(
        n=int(x.size),
        median=float(median),
        q1=float(q1),
        q3=float(q3),
        min=float(x.min()),
        max=float(x.max()),
        mean=float(x.mean()),
    )


def load_values_csv(source: Union[str, Path, IO]) -> List[float]:
    """Single-column measurement file with header ``value``"""
    frame = read_numeric_csv(source, (VALUE_COLUMN,))
    return [float(v) for v in frame[VALUE_COLUMN]]


class GroupComparison(BaseModel):
    a: SummaryStats
    b: SummaryStats
    u_statistic: float
    p_value: float


def compare_groups(a: Iterable[float], b: Iterable[float]) -> GroupComparison:
    """Two-sided Mann-Whitney U test with both summaries"""
    a, b = list(a), list(b)
    sa, sb = summarize(a), summarize(b)
    result = mannwhitneyu(a, b, alternative="two-sided")
    logger.info("Mann-Whitney U=%.3f p=%.4g (n=%d vs n=%d)", result.statistic, result.pvalue, sa.n, sb.n)
    return GroupComparison(a=sa, b=sb, u_statistic=float(result.statistic), p_value=float(result.pvalue))
