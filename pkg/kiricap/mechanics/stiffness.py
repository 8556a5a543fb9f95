"""Reduced-order stiffness and strain helpers."""

from typing import Dict, Sequence

import numpy as np

from kiricap.core.contracts import KirigamiParams
from kiricap.core.errors import InvalidParamsError

PI_FILM_MODULUS = 20.0  # MPa
FABRICATED_THICKNESSES = (0.05, 0.1, 0.15, 0.2)  # mm


def effective_stiffness(modulus: float, t: float, params: KirigamiParams) -> float:
    """Plate-bending hinge: k = E t^3 / (12 delta^2), hinge length = ligament delta.

    Only ratios between results are meaningful.
    """
    if modulus <= 0:
        raise InvalidParamsError(f"modulus must be > 0, got {modulus}")
    if t <= 0:
        raise InvalidParamsError(f"thickness must be > 0, got {t}")
    return modulus * t**3 / (12.0 * params.delta**2)


def stiffness_sweep(
    params: KirigamiParams,
    thicknesses: Sequence[float] = FABRICATED_THICKNESSES,
    modulus: float = PI_FILM_MODULUS,
) -> Dict[float, float]:
    """Stiffness per thickness, relative to the first entry"""
    if not thicknesses:
        raise InvalidParamsError("at least one thickness is required")
    base = effective_stiffness(modulus, thicknesses[0], params)
    return {float(t): effective_stiffness(modulus, t, params) / base for t in thicknesses}


def strain_from_expansion(delta_length, reference_length: float = 50.0):
    """Engineering strain; accepts a scalar or an array of expansions"""
    if reference_length <= 0:
        raise InvalidParamsError(f"reference length must be > 0, got {reference_length}")
    dl = np.asarray(delta_length, dtype=float)
    if np.any(dl < 0):
        raise InvalidParamsError("expansion must be >= 0")
    strain = dl / reference_length
    return float(strain) if strain.ndim == 0 else strain
