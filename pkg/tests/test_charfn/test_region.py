""" Tests for fracdelay.charfn.region """

import unittest

from fracdelay.charfn import ComplexRegion, imaginary_bound
from fracdelay.core import example51_problem
from fracdelay.error import RegionError


class TestRegion(unittest.TestCase):
    """Rectangles in the complex plane"""

    def test_invalid(self):
        """
        Tests empty rectangles and the branch cut
        """
        with self.assertRaises(RegionError):
            ComplexRegion.rectangle(1.0, 0.0, -1.0, 1.0)
        with self.assertRaises(RegionError):
            ComplexRegion.rectangle(-1.0, 1.0, -1.0, 1.0)
        with self.assertRaises(RegionError):
            ComplexRegion.right_half_plane(10.0)
        # off the axis a left half-plane rectangle is fine
        ComplexRegion.rectangle(-3.0, -1.0, 0.5, 2.0)

    def test_right_half_plane(self):
        """
        Tests the default height from the zero-free bound
        """
        p = example51_problem()
        region = ComplexRegion.right_half_plane(10.0, p=p)
        self.assertEqual(region.kind, "right_half_plane")
        self.assertEqual(region.im_hi, imaginary_bound(p, 0.0))
        self.assertEqual(region.im_lo, -region.im_hi)

    def test_geometry(self):
        """
        Tests center, containment, boundary nodes and splitting
        """
        region = ComplexRegion.rectangle(0.0, 4.0, -1.0, 1.0)
        self.assertEqual(region.center, 2.0 + 0.0j)
        self.assertTrue(region.contains(4.0 + 1.0j))
        self.assertFalse(region.contains(4.1 + 0.0j))
        self.assertTrue(region.contains(4.1 + 0.0j, slack=0.2))

        nodes = region.boundary_nodes(8)
        self.assertEqual(len(nodes), 33)
        self.assertEqual(nodes[0], nodes[-1])

        left, right = region.split(0.25)
        self.assertEqual((left.re_hi, right.re_lo), (1.0, 1.0))
        lower, upper = ComplexRegion.rectangle(0.0, 1.0, 0.0, 4.0).split()
        self.assertEqual((lower.im_hi, upper.im_lo), (2.0, 2.0))
