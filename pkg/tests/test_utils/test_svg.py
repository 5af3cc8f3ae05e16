""" Tests for fracdelay.utils.fd_svg """

import os
import tempfile
import unittest
import xml.etree.ElementTree as ET

from fracdelay.utils.fd_svg import SVG_NS, HeatMap, LineChart


def _count(root, tag):
    return len(root.findall(f".//{{{SVG_NS}}}{tag}"))


class TestSvg(unittest.TestCase):
    """Structural checks of the SVG writer"""

    def test_line_chart(self):
        """
        Tests one polyline per series plus the reference line, and a viewBox
        """
        chart = LineChart("curves")
        chart.add_series("x1", [0, 1, 2], [1.0, 0.5, 0.25])
        chart.add_series("x2", [0, 1, 2], [-1.0, -0.5, 0.0])
        chart.add_reference_line(0.0)
        with tempfile.TemporaryDirectory() as tmp:
            path = chart.write(os.path.join(tmp, "chart.svg"))
            root = ET.parse(path).getroot()
        self.assertIn("viewBox", root.attrib)
        self.assertEqual(_count(root, "polyline"), 2)

    def test_line_chart_deterministic(self):
        """
        Tests byte-identical output for identical input
        """
        contents = []
        with tempfile.TemporaryDirectory() as tmp:
            for name in ("a.svg", "b.svg"):
                chart = LineChart("curves")
                chart.add_series("x", [0, 1], [0.0, 1.0])
                with open(chart.write(os.path.join(tmp, name)), "rb") as svg_file:
                    contents.append(svg_file.read())
        self.assertEqual(contents[0], contents[1])

    def test_heat_map(self):
        """
        Tests one rect per cell plus the background and legend
        """
        heat_map = HeatMap("map", "a", "b", {"yes": "#00ff00", "no": "#ff0000"})
        classes = [["yes", "no", "no"], ["yes", "yes", "no"]]
        with tempfile.TemporaryDirectory() as tmp:
            path = heat_map.write(os.path.join(tmp, "map.svg"), [0.0, 1.0], [0.0, 1.0, 2.0], classes)
            root = ET.parse(path).getroot()
        # background, six cells, two legend swatches
        self.assertEqual(_count(root, "rect"), 1 + 6 + 2)
