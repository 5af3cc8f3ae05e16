""" Tests for fracdelay.mlf.contour """

import math
import unittest

import numpy as np

from fracdelay.error import ParameterError
from fracdelay.mlf.contour import ContourSpec, arc_nodes, gauss_legendre, ray_nodes


class TestContourSpec(unittest.TestCase):
    """ContourSpec validation"""

    def test_defaults(self):
        """
        Tests the default contour
        """
        spec = ContourSpec()
        self.assertIsNone(spec.mu)
        self.assertTrue(math.pi / 2 < spec.theta < math.pi)
        self.assertGreaterEqual(spec.ray_doublings, 1)

    def test_invalid(self):
        """
        Tests rejected contour parameters
        """
        for kwargs in (
            {"theta": math.pi / 2},
            {"theta": math.pi},
            {"mu": 0.0},
            {"mu": math.inf},
            {"ray_truncation": -1.0},
            {"n_ray": 1},
            {"n_arc": 1},
        ):
            with self.assertRaises(ParameterError, msg=str(kwargs)):
                ContourSpec(**kwargs)


class TestNodes(unittest.TestCase):
    """Quadrature nodes on the arc and the rays"""

    def test_gauss_legendre(self):
        """
        Tests the weights integrate constants and are cached read-only
        """
        nodes, weights = gauss_legendre(16)
        self.assertAlmostEqual(float(np.sum(weights)), 2.0, places=14)
        self.assertIs(gauss_legendre(16)[0], nodes)
        with self.assertRaises(ValueError):
            nodes[0] = 0.0

    def test_arc_weights(self):
        """
        Tests the arc weights sum to exp(i theta) - 1
        """
        spec = ContourSpec(theta=2.0)
        z, w = arc_nodes(spec)
        self.assertTrue(np.allclose(np.abs(z), 1.0))
        self.assertAlmostEqual(complex(np.sum(w)), np.exp(2.0j) - 1.0, places=13)
        # integral of z dz along the arc is (exp(2 i theta) - 1) / 2
        self.assertAlmostEqual(complex(np.sum(z * w)), (np.exp(4.0j) - 1.0) / 2, places=13)

    def test_ray_weights(self):
        """
        Tests each row of ray weights spans [1, end] along the ray
        """
        spec = ContourSpec(theta=2.0)
        z, w = ray_nodes(spec, np.array([8.0, 3.0]))
        self.assertEqual(z.shape, (2, 3, spec.n_ray))
        direction = np.exp(2.0j)
        self.assertAlmostEqual(complex(np.sum(w[0])), 7.0 * direction, places=12)
        self.assertAlmostEqual(complex(np.sum(w[1])), 2.0 * direction, places=12)
        self.assertLessEqual(float(np.max(np.abs(z[1]))), 3.0 + 1e-12)
