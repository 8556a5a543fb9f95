"""Kirigami cut-pattern geometry: lattice, layout and fabrication export."""

from .export import export_curves_dxf, export_curves_svg, export_dxf, export_svg, save
from .lattice import CutSegment, LatticeBasis, lattice_basis, primitive_vectors, unit_cut
from .layout import CutLayout, Violation, generate_pattern, validate_layout

__all__ = [
    "CutLayout",
    "CutSegment",
    "LatticeBasis",
    "Violation",
    "export_curves_dxf",
    "export_curves_svg",
    "export_dxf",
    "export_svg",
    "generate_pattern",
    "lattice_basis",
    "primitive_vectors",
    "save",
    "unit_cut",
    "validate_layout",
]
