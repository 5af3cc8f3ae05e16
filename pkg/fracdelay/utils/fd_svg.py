"""
fracdelay | utils | fd_svg.py

A minimal SVG writer: line charts made of polylines with axis ticks, and
categorical heat maps. Output is deterministic for identical input.
"""

import os
import xml.etree.ElementTree as ET
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

SVG_NS = "http://www.w3.org/2000/svg"
PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"]

# ------------------------------- Layout ------------------------------------- #
WIDTH = 640
HEIGHT = 420
MARGIN_LEFT = 64
MARGIN_RIGHT = 120
MARGIN_TOP = 36
MARGIN_BOTTOM = 48


def _fmt(value: float) -> str:
    return f"{value:.2f}"


def _tick_label(value: float) -> str:
    return f"{value:.4g}"


def _nice_ticks(lo: float, hi: float, count: int = 5) -> List[float]:
    if hi <= lo:
        return [lo]
    raw = (hi - lo) / count
    magnitude = 10 ** np.floor(np.log10(raw))
    step = min((m * magnitude for m in (1, 2, 5, 10) if m * magnitude >= raw))
    first = np.ceil(lo / step) * step
    ticks = []
    value = first
    while value <= hi + 1e-12 * step:
        ticks.append(float(round(value / step) * step))
        value += step
    return ticks


def _svg_root(title: str) -> ET.Element:
    root = ET.Element(
        "svg",
        {
            "xmlns": SVG_NS,
            "viewBox": f"0 0 {WIDTH} {HEIGHT}",
            "width": str(WIDTH),
            "height": str(HEIGHT),
        },
    )
    ET.SubElement(root, "rect", {"width": str(WIDTH), "height": str(HEIGHT), "fill": "white"})
    heading = ET.SubElement(
        root,
        "text",
        {"x": _fmt(WIDTH / 2), "y": "22", "text-anchor": "middle", "font-size": "14"},
    )
    heading.text = title
    return root


def _write(root: ET.Element, path: str) -> str:
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    body = ET.tostring(root, encoding="unicode")
    with open(path, "w", encoding="utf-8", newline="\n") as svg_file:
        svg_file.write('<?xml version="1.0" encoding="UTF-8"?>\n')
        svg_file.write(body)
        svg_file.write("\n")
    return os.path.abspath(path)


class LineChart:
    """Overlay of named series sharing one pair of axes."""

    def __init__(self, title: str, x_label: str = "t", y_label: str = "x(t)"):
        self.title = title
        self.x_label = x_label
        self.y_label = y_label
        self.series: List[Tuple[str, np.ndarray, np.ndarray]] = []
        self.reference_y: Optional[float] = None

    def add_series(self, name: str, xs: Sequence[float], ys: Sequence[float]) -> None:
        """Add one curve."""
        self.series.append((name, np.asarray(xs, dtype=float), np.asarray(ys, dtype=float)))

    def add_reference_line(self, y_value: float = 0.0) -> None:
        """Draw a dashed horizontal line, e.g. the zero solution."""
        self.reference_y = y_value

    def _bounds(self):
        xs = np.concatenate([series[1] for series in self.series])
        ys = np.concatenate([series[2] for series in self.series])
        y_lo, y_hi = float(np.min(ys)), float(np.max(ys))
        if self.reference_y is not None:
            y_lo, y_hi = min(y_lo, self.reference_y), max(y_hi, self.reference_y)
        if y_hi - y_lo < 1e-12:
            y_lo, y_hi = y_lo - 1.0, y_hi + 1.0
        pad = 0.05 * (y_hi - y_lo)
        return float(np.min(xs)), float(np.max(xs)), y_lo - pad, y_hi + pad

    def render(self) -> ET.Element:
        """Build the SVG element tree."""
        if not self.series:
            raise ValueError("LineChart needs at least one series.")

        x_lo, x_hi, y_lo, y_hi = self._bounds()
        plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
        plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM

        def to_px(x_value, y_value):
            px = MARGIN_LEFT + (x_value - x_lo) / (x_hi - x_lo or 1.0) * plot_w
            py = MARGIN_TOP + (y_hi - y_value) / (y_hi - y_lo) * plot_h
            return px, py

        root = _svg_root(self.title)
        axes = ET.SubElement(root, "g", {"stroke": "black", "fill": "none"})
        ET.SubElement(
            axes,
            "rect",
            {
                "x": _fmt(MARGIN_LEFT),
                "y": _fmt(MARGIN_TOP),
                "width": _fmt(plot_w),
                "height": _fmt(plot_h),
            },
        )

        ticks = ET.SubElement(root, "g", {"font-size": "10", "fill": "black"})
        for tick in _nice_ticks(x_lo, x_hi):
            px, _ = to_px(tick, y_lo)
            ET.SubElement(
                ticks, "line",
                {"x1": _fmt(px), "y1": _fmt(HEIGHT - MARGIN_BOTTOM),
                 "x2": _fmt(px), "y2": _fmt(HEIGHT - MARGIN_BOTTOM + 5), "stroke": "black"},
            )
            label = ET.SubElement(
                ticks, "text",
                {"x": _fmt(px), "y": _fmt(HEIGHT - MARGIN_BOTTOM + 17), "text-anchor": "middle"},
            )
            label.text = _tick_label(tick)
        for tick in _nice_ticks(y_lo, y_hi):
            _, py = to_px(x_lo, tick)
            ET.SubElement(
                ticks, "line",
                {"x1": _fmt(MARGIN_LEFT - 5), "y1": _fmt(py),
                 "x2": _fmt(MARGIN_LEFT), "y2": _fmt(py), "stroke": "black"},
            )
            label = ET.SubElement(
                ticks, "text",
                {"x": _fmt(MARGIN_LEFT - 8), "y": _fmt(py + 3), "text-anchor": "end"},
            )
            label.text = _tick_label(tick)

        x_caption = ET.SubElement(
            root, "text",
            {"x": _fmt(MARGIN_LEFT + plot_w / 2), "y": _fmt(HEIGHT - 8),
             "text-anchor": "middle", "font-size": "12"},
        )
        x_caption.text = self.x_label
        y_caption = ET.SubElement(
            root, "text",
            {"x": "14", "y": _fmt(MARGIN_TOP + plot_h / 2), "text-anchor": "middle",
             "font-size": "12",
             "transform": f"rotate(-90 14 {_fmt(MARGIN_TOP + plot_h / 2)})"},
        )
        y_caption.text = self.y_label

        if self.reference_y is not None:
            x1, y1 = to_px(x_lo, self.reference_y)
            x2, _ = to_px(x_hi, self.reference_y)
            ET.SubElement(
                root, "line",
                {"x1": _fmt(x1), "y1": _fmt(y1), "x2": _fmt(x2), "y2": _fmt(y1),
                 "stroke": "#777777", "stroke-dasharray": "4 3"},
            )

        curves = ET.SubElement(root, "g", {"fill": "none", "stroke-width": "1.5"})
        legend = ET.SubElement(root, "g", {"font-size": "11"})
        for index, (name, xs, ys) in enumerate(self.series):
            color = PALETTE[index % len(PALETTE)]
            points = " ".join(
                f"{_fmt(px)},{_fmt(py)}" for px, py in (to_px(x, y) for x, y in zip(xs, ys))
            )
            ET.SubElement(curves, "polyline", {"points": points, "stroke": color})

            ly = MARGIN_TOP + 14 + 16 * index
            lx = WIDTH - MARGIN_RIGHT + 10
            ET.SubElement(
                legend, "line",
                {"x1": _fmt(lx), "y1": _fmt(ly - 4), "x2": _fmt(lx + 18), "y2": _fmt(ly - 4),
                 "stroke": color, "stroke-width": "2"},
            )
            entry = ET.SubElement(legend, "text", {"x": _fmt(lx + 24), "y": _fmt(ly)})
            entry.text = name

        return root

    def write(self, path: str) -> str:
        """Render and write to path."""
        return _write(self.render(), path)


class HeatMap:
    """Categorical map over a rectangular (x, y) grid."""

    def __init__(self, title: str, x_label: str, y_label: str, colors: Dict[str, str]):
        self.title = title
        self.x_label = x_label
        self.y_label = y_label
        self.colors = colors

    def render(self, xs: Sequence[float], ys: Sequence[float], classes) -> ET.Element:
        """
        classes[i][j] is the category of the cell at (xs[i], ys[j]).
        """
        xs = np.asarray(xs, dtype=float)
        ys = np.asarray(ys, dtype=float)
        plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
        plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM
        cell_w = plot_w / len(xs)
        cell_h = plot_h / len(ys)

        root = _svg_root(self.title)
        cells = ET.SubElement(root, "g", {"stroke": "none"})
        for i in range(len(xs)):
            for j in range(len(ys)):
                ET.SubElement(
                    cells, "rect",
                    {"x": _fmt(MARGIN_LEFT + i * cell_w),
                     "y": _fmt(MARGIN_TOP + (len(ys) - 1 - j) * cell_h),
                     "width": _fmt(cell_w), "height": _fmt(cell_h),
                     "fill": self.colors[classes[i][j]]},
                )

        ticks = ET.SubElement(root, "g", {"font-size": "10", "fill": "black"})
        for tick in _nice_ticks(xs[0], xs[-1]):
            px = MARGIN_LEFT + (tick - xs[0]) / (xs[-1] - xs[0]) * (plot_w - cell_w) + cell_w / 2
            label = ET.SubElement(
                ticks, "text",
                {"x": _fmt(px), "y": _fmt(HEIGHT - MARGIN_BOTTOM + 15), "text-anchor": "middle"},
            )
            label.text = _tick_label(tick)
        for tick in _nice_ticks(ys[0], ys[-1]):
            py = (MARGIN_TOP + plot_h - cell_h / 2
                  - (tick - ys[0]) / (ys[-1] - ys[0]) * (plot_h - cell_h))
            label = ET.SubElement(
                ticks, "text",
                {"x": _fmt(MARGIN_LEFT - 6), "y": _fmt(py + 3), "text-anchor": "end"},
            )
            label.text = _tick_label(tick)

        x_caption = ET.SubElement(
            root, "text",
            {"x": _fmt(MARGIN_LEFT + plot_w / 2), "y": _fmt(HEIGHT - 8),
             "text-anchor": "middle", "font-size": "12"},
        )
        x_caption.text = self.x_label
        y_caption = ET.SubElement(
            root, "text",
            {"x": "14", "y": _fmt(MARGIN_TOP + plot_h / 2), "text-anchor": "middle",
             "font-size": "12",
             "transform": f"rotate(-90 14 {_fmt(MARGIN_TOP + plot_h / 2)})"},
        )
        y_caption.text = self.y_label

        legend = ET.SubElement(root, "g", {"font-size": "11"})
        for index, (name, color) in enumerate(self.colors.items()):
            ly = MARGIN_TOP + 14 + 18 * index
            lx = WIDTH - MARGIN_RIGHT + 10
            ET.SubElement(
                legend, "rect",
                {"x": _fmt(lx), "y": _fmt(ly - 10), "width": "12", "height": "12", "fill": color},
            )
            entry = ET.SubElement(legend, "text", {"x": _fmt(lx + 18), "y": _fmt(ly)})
            entry.text = name

        return root

    def write(self, path: str, xs, ys, classes) -> str:
        """Render and write to path."""
        return _write(self.render(xs, ys, classes), path)
