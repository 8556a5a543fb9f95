"""Triangular-lattice primitives for the kirigami cut pattern."""

import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from kiricap.core.contracts import KirigamiParams

Vec2 = Tuple[float, float]


@dataclass(frozen=True)
class LatticeBasis:
    """Primitive vectors of the cut lattice (mm)"""

    a1: Vec2
    a2: Vec2

    def translation(self, m: int, n: int) -> Vec2:
        return (
            m * self.a1[0] + n * self.a2[0],
            m * self.a1[1] + n * self.a2[1],
        )


@dataclass(frozen=True)
class CutSegment:
    """One straight cut, tagged with the lattice cell it belongs to"""

    p_start: Vec2
    p_end: Vec2
    cell_index: Tuple[int, int] = (0, 0)

    @property
    def length(self) -> float:
        return math.hypot(self.p_end[0] - self.p_start[0], self.p_end[1] - self.p_start[1])

    def translated(self, dx: float, dy: float, cell_index: Tuple[int, int]) -> "CutSegment":
        return CutSegment(
            p_start=(self.p_start[0] + dx, self.p_start[1] + dy),
            p_end=(self.p_end[0] + dx, self.p_end[1] + dy),
            cell_index=cell_index,
        )

    def as_array(self) -> np.ndarray:
        return np.array([self.p_start, self.p_end], dtype=float)


def primitive_vectors(l: float, gamma_rad: float) -> LatticeBasis:
    """a1 = l(cos g, sin g), a2 = l(cos g, -sin g); no range checks."""
    c, s = math.cos(gamma_rad), math.sin(gamma_rad)
    return LatticeBasis(a1=(l * c, l * s), a2=(l * c, -l * s))


def lattice_basis(params: KirigamiParams) -> LatticeBasis:
    return primitive_vectors(params.l, params.gamma_rad)


def unit_cut(params: KirigamiParams) -> CutSegment:
    """Reference-cell cut from (delta/l)*a1 to a1 + (1 - delta/l)*a2.

    Both endpoints sit at height delta*sin(gamma), so every cut is horizontal
    with length 2(l - delta)cos(gamma).
    """
    basis = lattice_basis(params)
    ratio = params.delta / params.l
    a1, a2 = basis.a1, basis.a2
    p_start = (ratio * a1[0], ratio * a1[1])
    p_end = (a1[0] + (1.0 - ratio) * a2[0], a1[1] + (1.0 - ratio) * a2[1])
    return CutSegment(p_start=p_start, p_end=p_end, cell_index=(0, 0))
