""" Tests for fracdelay.stability.lipschitz """

import unittest

from fracdelay.core import Nonlinearity
from fracdelay.stability import estimate_lipschitz_modulus, lipschitz_profile


class TestLipschitzModulus(unittest.TestCase):
    """Sampled local Lipschitz moduli"""

    def test_zero(self):
        """
        Tests f = 0
        """
        self.assertEqual(estimate_lipschitz_modulus(Nonlinearity.zero(), 1.0), 0.0)

    def test_linear(self):
        """
        Tests f(x, y) = 2x - y, whose modulus is 3 in the max norm
        """
        f = Nonlinearity.polynomial([(2.0, 1, 0), (-1.0, 0, 1)])
        self.assertAlmostEqual(estimate_lipschitz_modulus(f, 0.5, samples=0), 3.0, places=12)

    def test_example_nonlinearity(self):
        """
        Tests x^2 + y^3 at rho = 0.1 against 2 rho + 3 rho^2
        """
        value = estimate_lipschitz_modulus(Nonlinearity.example51(), 0.1)
        self.assertGreaterEqual(value, 0.19)
        self.assertLessEqual(value, 0.24)

    def test_more_samples_never_lower(self):
        """
        Tests the estimate is monotone in the sample count for a fixed seed
        """
        f = Nonlinearity.example51()
        estimates = [estimate_lipschitz_modulus(f, 0.3, samples=n, seed=7) for n in (0, 1000, 5000)]
        self.assertLessEqual(estimates[0], estimates[1])
        self.assertLessEqual(estimates[1], estimates[2])

    def test_deterministic(self):
        """
        Tests equal seeds give equal estimates
        """
        f = Nonlinearity.example51()
        self.assertEqual(estimate_lipschitz_modulus(f, 0.2, seed=3),
                         estimate_lipschitz_modulus(f, 0.2, seed=3))

    def test_invalid(self):
        """
        Tests rho <= 0
        """
        with self.assertRaises(ValueError):
            estimate_lipschitz_modulus(Nonlinearity.example51(), 0.0)


class TestLipschitzProfile(unittest.TestCase):
    """Moduli over increasing radii"""

    def test_nondecreasing(self):
        """
        Tests the profile is sorted, nondecreasing, and looked up from above
        """
        profile = lipschitz_profile(Nonlinearity.example51(), [0.4, 0.1, 0.2], samples=500)
        self.assertEqual(profile.rho_grid, (0.1, 0.2, 0.4))
        self.assertEqual(list(profile.ell_values), sorted(profile.ell_values))
        self.assertEqual(profile.at(0.15), profile.ell_values[1])
        with self.assertRaises(ValueError):
            profile.at(1.0)
