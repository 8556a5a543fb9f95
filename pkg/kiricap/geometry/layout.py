"""Tiling of the unit cut over a strip and layout validation."""

import logging
import math
from dataclasses import dataclass, field
from typing import List, Tuple

import numpy as np

from kiricap.core.contracts import KirigamiParams
from kiricap.core.errors import InvalidParamsError
from kiricap.geometry.lattice import CutSegment, lattice_basis, unit_cut

logger = logging.getLogger(__name__)

DEFAULT_MARGIN = 0.5
# Closed containment; absorbs round-off in the lattice translations only.
CONTAINMENT_TOL = 1e-9
INTERSECTION_TOL = 1e-12


@dataclass(frozen=True)
class CutLayout:
    """Cut segments of one strip, in strip-local coordinates.

    ``origin`` is where the strip's lower-left corner is placed on the sheet
    when exporting; it never affects which cuts are generated.
    """

    params: KirigamiParams
    segments: Tuple[CutSegment, ...]
    margin: float = DEFAULT_MARGIN
    origin: Tuple[float, float] = (0.0, 0.0)

    @property
    def is_empty(self) -> bool:
        return not self.segments

    @property
    def inset(self) -> Tuple[float, float, float, float]:
        """(x_min, y_min, x_max, y_max) of the region cuts must lie in"""
        return (self.margin, self.margin, self.params.w - self.margin, self.params.h - self.margin)

    def endpoints(self) -> np.ndarray:
        """(N, 2, 2) array of segment endpoints"""
        if not self.segments:
            return np.zeros((0, 2, 2))
        return np.stack([s.as_array() for s in self.segments])


@dataclass(frozen=True)
class Violation:
    rule: str
    indices: Tuple[int, ...]
    message: str = field(default="", compare=False)


def _inside(points: np.ndarray, inset: Tuple[float, float, float, float]) -> np.ndarray:
    x_min, y_min, x_max, y_max = inset
    x, y = points[..., 0], points[..., 1]
    return (
        (x >= x_min - CONTAINMENT_TOL)
        & (x <= x_max + CONTAINMENT_TOL)
        & (y >= y_min - CONTAINMENT_TOL)
        & (y <= y_max + CONTAINMENT_TOL)
    )


def generate_pattern(
    params: KirigamiParams,
    margin: float = DEFAULT_MARGIN,
    origin: Tuple[float, float] = (0.0, 0.0),
) -> CutLayout:
    """Every lattice translate of the unit cut that fits the inset strip.

    Cuts are never clipped: a cell is kept only if both endpoints of its cut
    lie in the closed inset rectangle. Segments are ordered by (n, m).
    """
    if margin < 0:
        raise InvalidParamsError(f"margin must be >= 0, got {margin}")
    if 2.0 * margin >= min(params.h, params.w):
        logger.warning(
            "Margin %.3f mm leaves no room on a %.3f x %.3f mm strip; layout is empty",
            margin, params.w, params.h,
        )
        return CutLayout(params=params, segments=(), margin=margin, origin=origin)

    basis = lattice_basis(params)
    ref = unit_cut(params)
    inset = (margin, margin, params.w - margin, params.h - margin)

    # A translate by (m, n) shifts x by (m + n)*lc and y by (m - n)*ls.
    lc, ls = basis.a1[0], basis.a1[1]
    x_lo = inset[0] - min(ref.p_start[0], ref.p_end[0])
    x_hi = inset[2] - max(ref.p_start[0], ref.p_end[0])
    y_lo = inset[1] - ref.p_start[1]
    y_hi = inset[3] - ref.p_start[1]
    p_range = np.arange(math.floor(x_lo / lc) - 1, math.ceil(x_hi / lc) + 2)
    q_range = np.arange(math.floor(y_lo / ls) - 1, math.ceil(y_hi / ls) + 2)

    p_grid, q_grid = np.meshgrid(p_range, q_range, indexing="ij")
    same_parity = (p_grid - q_grid) % 2 == 0
    m_idx = ((p_grid + q_grid) // 2)[same_parity]
    n_idx = ((p_grid - q_grid) // 2)[same_parity]

    dx = m_idx * basis.a1[0] + n_idx * basis.a2[0]
    dy = m_idx * basis.a1[1] + n_idx * basis.a2[1]
    starts = np.column_stack([ref.p_start[0] + dx, ref.p_start[1] + dy])
    ends = np.column_stack([ref.p_end[0] + dx, ref.p_end[1] + dy])
    keep = _inside(starts, inset) & _inside(ends, inset)

    order = np.lexsort((m_idx[keep], n_idx[keep]))
    kept_m, kept_n = m_idx[keep][order], n_idx[keep][order]
    segments = tuple(
        ref.translated(float(ddx), float(ddy), (int(m), int(n)))
        for m, n, ddx, ddy in zip(kept_m, kept_n, dx[keep][order], dy[keep][order])
    )

    layout = CutLayout(params=params, segments=segments, margin=margin, origin=origin)
    if layout.is_empty:
        logger.warning("No cut fits a %.3f x %.3f mm strip with margin %.3f mm", params.w, params.h, margin)
    else:
        logger.debug("Generated %d cuts", len(segments), extra={"segments": len(segments)})
    return layout


def _orient(a: np.ndarray, b: np.ndarray, c: np.ndarray) -> np.ndarray:
    return (b[..., 0] - a[..., 0]) * (c[..., 1] - a[..., 1]) - (b[..., 1] - a[..., 1]) * (c[..., 0] - a[..., 0])


def _open_intersections(seg: np.ndarray, others: np.ndarray) -> np.ndarray:
    """Mask of ``others`` whose open interior meets the open interior of ``seg``."""
    a0, a1 = seg[0], seg[1]
    b0, b1 = others[:, 0], others[:, 1]
    scale = max(float(np.abs(others).max(initial=0.0)), float(np.abs(seg).max()), 1.0) ** 2
    eps = INTERSECTION_TOL * scale

    o1 = _orient(a0, a1, b0)
    o2 = _orient(a0, a1, b1)
    o3 = _orient(b0, b1, a0[None, :])
    o4 = _orient(b0, b1, a1[None, :])
    proper = (o1 * o2 < 0) & (o3 * o4 < 0) & (np.abs(o1) > eps) & (np.abs(o2) > eps) \
        & (np.abs(o3) > eps) & (np.abs(o4) > eps)

    collinear = (np.abs(o1) <= eps) & (np.abs(o2) <= eps)
    d = a1 - a0
    dd = float(d @ d)
    if dd == 0.0:
        return proper
    t0 = ((b0 - a0) @ d) / dd
    t1 = ((b1 - a0) @ d) / dd
    overlap = np.minimum(1.0, np.maximum(t0, t1)) - np.maximum(0.0, np.minimum(t0, t1))
    return proper | (collinear & (overlap > 1e-9))


def validate_layout(layout: CutLayout) -> List[Violation]:
    """Report containment and open-segment intersection violations"""
    violations: List[Violation] = []
    pts = layout.endpoints()
    if len(pts) == 0:
        return violations

    inside = _inside(pts, layout.inset).all(axis=1)
    for i in np.flatnonzero(~inside):
        violations.append(
            Violation(
                rule="containment",
                indices=(int(i),),
                message=f"segment {i} leaves the inset rectangle {layout.inset}",
            )
        )

    for i in range(len(pts) - 1):
        hits = _open_intersections(pts[i], pts[i + 1:])
        for j in np.flatnonzero(hits):
            jj = int(i + 1 + j)
            violations.append(
                Violation(
                    rule="intersection",
                    indices=(int(i), jj),
                    message=f"segments {i} and {jj} intersect",
                )
            )

    if violations:
        logger.info("Layout has %d violation(s)", len(violations))
    return violations
