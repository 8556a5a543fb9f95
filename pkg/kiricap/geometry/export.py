"""SVG 1.1 and DXF R12 emitters for cut layouts and cam curves.

Both formats are written with coordinates quantised to 5 decimal places so
identical inputs give byte-identical files. SVG y runs downwards, so strip
coordinates are flipped against the sheet height; DXF keeps the strip's
y-up convention.
"""

import io
import logging
from pathlib import Path
from typing import Dict, Iterable, Sequence, Tuple, Union

import numpy as np
import svgwrite
from ezdxf.addons import r12writer

from kiricap.core.io import write_bytes
from kiricap.geometry.layout import CutLayout

logger = logging.getLogger(__name__)

DECIMALS = 5
CUT_LAYER = "CUTS"
OUTLINE_LAYER = "OUTLINE"
CAM_LAYER = "CAM"
PITCH_LAYER = "PITCH"

Point = Tuple[float, float]


def _q(value: float) -> float:
    # quantise and drop negative zero
    return round(float(value), DECIMALS) + 0.0


def _fmt(value: float) -> str:
    return f"{_q(value):.{DECIMALS}f}"


class _SvgSheet:
    """svgwrite drawing in millimetre user units with a y-up input convention"""

    def __init__(self, width: float, height: float):
        self.height = height
        self.dwg = svgwrite.Drawing(
            size=(f"{_fmt(width)}mm", f"{_fmt(height)}mm"),
            viewBox=f"0 0 {_fmt(width)} {_fmt(height)}",
            profile="full",
        )
        self.groups: Dict[str, svgwrite.container.Group] = {}

    def group(self, name: str, stroke: str) -> svgwrite.container.Group:
        if name not in self.groups:
            g = self.dwg.g(id=name, stroke=stroke, fill="none", stroke_width="0.1")
            self.dwg.add(g)
            self.groups[name] = g
        return self.groups[name]

    def _xy(self, p: Point) -> str:
        return f"{_fmt(p[0])} {_fmt(self.height - p[1])}"

    def polyline(self, layer: str, stroke: str, points: Sequence[Point], closed: bool = False) -> None:
        d = "M " + " L ".join(self._xy(p) for p in points)
        if closed:
            d += " Z"
        self.group(layer, stroke).add(self.dwg.path(d=d))

    def to_bytes(self) -> bytes:
        return ('<?xml version="1.0" encoding="utf-8" ?>\n' + self.dwg.tostring() + "\n").encode("utf-8")


def _outline(origin: Point, w: float, h: float) -> Tuple[Point, ...]:
    x0, y0 = origin
    return ((x0, y0), (x0 + w, y0), (x0 + w, y0 + h), (x0, y0 + h))


def export_svg(layout: CutLayout) -> bytes:
    """Strip outline group plus one path per cut"""
    x0, y0 = layout.origin
    p = layout.params
    sheet = _SvgSheet(x0 + p.w, y0 + p.h)
    sheet.polyline(OUTLINE_LAYER, "blue", _outline(layout.origin, p.w, p.h), closed=True)
    cuts = sheet.group(CUT_LAYER, "red")
    for seg in layout.segments:
        start = (seg.p_start[0] + x0, seg.p_start[1] + y0)
        end = (seg.p_end[0] + x0, seg.p_end[1] + y0)
        cuts.add(sheet.dwg.path(d=f"M {sheet._xy(start)} L {sheet._xy(end)}"))
    return sheet.to_bytes()


def _line_record(start: Point, end: Point, layer: str) -> str:
    tags = (
        ("0", "LINE"), ("8", layer),
        ("10", _fmt(start[0])), ("20", _fmt(start[1])), ("30", _fmt(0.0)),
        ("11", _fmt(end[0])), ("21", _fmt(end[1])), ("31", _fmt(0.0)),
    )
    return "".join(f"{code}\n{value}\n" for code, value in tags)


def _dxf_bytes(lines: Iterable[Tuple[Point, Point, str]]) -> bytes:
    stream = io.StringIO()
    # r12writer opens and closes the ENTITIES section; add_line would print
    # floats in repr form, so LINE values go out fixed-point
    with r12writer(stream):
        for start, end, layer in lines:
            stream.write(_line_record(start, end, layer))
    return stream.getvalue().encode("ascii")


def _closed_edges(points: Sequence[Point], layer: str):
    for i in range(len(points)):
        yield points[i], points[(i + 1) % len(points)], layer


def export_dxf(layout: CutLayout) -> bytes:
    """One LINE per cut on layer CUTS, strip outline on layer OUTLINE"""
    x0, y0 = layout.origin
    p = layout.params

    def lines():
        yield from _closed_edges(_outline(layout.origin, p.w, p.h), OUTLINE_LAYER)
        for seg in layout.segments:
            yield (seg.p_start[0] + x0, seg.p_start[1] + y0), (seg.p_end[0] + x0, seg.p_end[1] + y0), CUT_LAYER

    return _dxf_bytes(lines())


def _curve_extent(curves: Sequence[np.ndarray]) -> Tuple[float, float, float, float]:
    pts = np.vstack(curves)
    return float(pts[:, 0].min()), float(pts[:, 1].min()), float(pts[:, 0].max()), float(pts[:, 1].max())


def export_curves_svg(profile: np.ndarray, pitch: Union[np.ndarray, None] = None, pad: float = 1.0) -> bytes:
    """Closed cam profile on layer CAM and optional pitch curve on PITCH.

    The cam centre is shifted so the drawing fits in positive coordinates.
    """
    curves = [profile] if pitch is None else [profile, pitch]
    x_min, y_min, x_max, y_max = _curve_extent(curves)
    shift = np.array([pad - x_min, pad - y_min])
    sheet = _SvgSheet(x_max - x_min + 2 * pad, y_max - y_min + 2 * pad)
    if pitch is not None:
        sheet.polyline(PITCH_LAYER, "gray", [tuple(p) for p in pitch + shift], closed=True)
    sheet.polyline(CAM_LAYER, "red", [tuple(p) for p in profile + shift], closed=True)
    return sheet.to_bytes()


def export_curves_dxf(profile: np.ndarray, pitch: Union[np.ndarray, None] = None) -> bytes:
    """Cam curves as LINE entities in cam-centred coordinates"""

    def lines():
        if pitch is not None:
            yield from _closed_edges([tuple(p) for p in pitch], PITCH_LAYER)
        yield from _closed_edges([tuple(p) for p in profile], CAM_LAYER)

    return _dxf_bytes(lines())


def save(data: bytes, path: Union[str, Path]) -> Path:
    """Write an export to disk, mapping OS failures to ExportIOError"""
    path = write_bytes(data, path)
    logger.info("Wrote %s (%d bytes)", path, len(data))
    return path
