""" Tests for fracdelay.mlf.kernel """

import math
import unittest

import numpy as np

from fracdelay.core import Beta, ProblemParams
from fracdelay.error import ContourDegenerate, DomainError
from fracdelay.mlf import (
    ContourSpec,
    KernelQuery,
    contour_integral,
    eval_classical_ml,
    eval_kernel,
    eval_kernel_batch,
    integrated_kernel_grid,
)

from .reference import delayed_kernel

EXAMPLE = ProblemParams(alpha=0.5, a=-5.0, b=0.5, tau=1.0)


def classical_kernel(p, beta, t):
    """t^(beta-1) E_{alpha,beta}(a t^alpha), the kernel without delay."""
    beta_value = beta.value_for(p.alpha)
    return t ** (beta_value - 1) * eval_classical_ml(p.alpha, beta_value, p.a * t**p.alpha)


class TestKernelWithoutDelay(unittest.TestCase):
    """b = 0 reduces to the classical two-parameter function"""

    def test_classical_reduction(self):
        """
        Tests contour quadrature against the classical function on the reference grid
        """
        for a in (-1.0, -5.0):
            for alpha in (0.3, 0.5, 0.8):
                p = ProblemParams(alpha=alpha, a=a, b=0.0, tau=1.0)
                for beta in (Beta.ONE, Beta.ALPHA):
                    t_grid = (0.5, 1.0, 2.0, 5.0)
                    values = eval_kernel_batch(p, beta, t_grid)
                    for t, value in zip(t_grid, values):
                        self.assertAlmostEqual(
                            value, classical_kernel(p, beta, t), delta=1e-8,
                            msg=f"a={a}, alpha={alpha}, beta={beta.value}, t={t}",
                        )

    def test_positive_a(self):
        """
        Tests a > 0, where the real pole sits inside the arc
        """
        p = ProblemParams(alpha=0.5, a=1.0, b=0.0, tau=1.0)
        expected = classical_kernel(p, Beta.ONE, 1.0)
        self.assertAlmostEqual(eval_kernel(KernelQuery(p, Beta.ONE, 1.0)), expected,
                               delta=1e-9 * expected)

    def test_first_delay_interval(self):
        """
        Tests t <= tau, where the delayed term contributes nothing
        """
        undelayed = ProblemParams(alpha=0.5, a=-5.0, b=0.0, tau=1.0)
        for beta in (Beta.ONE, Beta.ALPHA):
            for t in (0.25, 0.5, 1.0):
                self.assertAlmostEqual(
                    eval_kernel(KernelQuery(EXAMPLE, beta, t)),
                    eval_kernel(KernelQuery(undelayed, beta, t)),
                    delta=1e-10,
                )
        self.assertAlmostEqual(eval_kernel(KernelQuery(EXAMPLE, Beta.ONE, 0.5)),
                               eval_classical_ml(0.5, 1.0, -5.0 * 0.5**0.5), delta=1e-8)


class TestDelayedKernel(unittest.TestCase):
    """b != 0 against the delay-step series"""

    def test_against_series(self):
        """
        Tests the Example kernels against a high-precision delay-step sum
        """
        for beta in (Beta.ONE, Beta.ALPHA):
            for t in (0.5, 1.5, 2.5, 4.0):
                expected = delayed_kernel(0.5, -5.0, 0.5, 1.0, beta.value_for(0.5), t)
                self.assertAlmostEqual(
                    eval_kernel(KernelQuery(EXAMPLE, beta, t)), expected, delta=1e-7,
                    msg=f"beta={beta.value}, t={t}",
                )

    def test_negative_b(self):
        """
        Tests b < 0, where the delay steps alternate in sign
        """
        p = ProblemParams(alpha=0.7, a=-2.0, b=-1.0, tau=0.8)
        for t in (1.0, 2.0):
            expected = delayed_kernel(0.7, -2.0, -1.0, 0.8, 1.0, t)
            self.assertAlmostEqual(eval_kernel(KernelQuery(p, Beta.ONE, t)), expected,
                                   delta=1e-7)

    def test_initial_value(self):
        """
        Tests E_{alpha,1}(t) -> 1 as t -> 0+
        """
        self.assertAlmostEqual(eval_kernel(KernelQuery(EXAMPLE, Beta.ONE, 1e-8)), 1.0,
                               delta=1e-3)

    def test_contour_integral_is_real(self):
        """
        Tests the two contour halves combine to a real value equal to the kernel
        """
        for t in (0.7, 3.3):
            value = contour_integral(EXAMPLE, Beta.ALPHA, t)
            self.assertLess(abs(value.imag), 1e-10)
            self.assertAlmostEqual(value.real, eval_kernel(KernelQuery(EXAMPLE, Beta.ALPHA, t)),
                                   delta=1e-10)

    def test_contour_invariance(self):
        """
        Tests the value does not depend on the contour angle or a fixed arc radius
        """
        t = 3.0
        reference = eval_kernel(KernelQuery(EXAMPLE, Beta.ONE, t))
        for contour in (
            ContourSpec(theta=math.pi / 2 + 0.2),
            ContourSpec(theta=math.pi / 2 + 0.4),
            ContourSpec(mu=1.0),
            ContourSpec(mu=2.0),
        ):
            self.assertAlmostEqual(eval_kernel(KernelQuery(EXAMPLE, Beta.ONE, t), contour),
                                   reference, delta=1e-8, msg=str(contour))

    def test_fixed_arc_misses_pole(self):
        """
        Tests a fixed arc radius below the pole a^(1/alpha)
        """
        p = ProblemParams(alpha=0.5, a=1.0, b=0.0, tau=1.0)
        with self.assertRaises(ContourDegenerate):
            eval_kernel(KernelQuery(p, Beta.ONE, 1.0), ContourSpec(mu=0.5))

    def test_batch_order(self):
        """
        Tests batch values keep the input order
        """
        t_grid = [4.0, 0.5, 2.0]
        batch = eval_kernel_batch(EXAMPLE, Beta.ONE, t_grid)
        single = [eval_kernel(KernelQuery(EXAMPLE, Beta.ONE, t)) for t in t_grid]
        self.assertTrue(np.allclose(batch, single, rtol=0, atol=1e-14))
        self.assertEqual(eval_kernel_batch(EXAMPLE, Beta.ONE, []).size, 0)

    def test_invalid_query(self):
        """
        Tests t <= 0 and unknown beta
        """
        for t in (0.0, -1.0, math.nan):
            with self.assertRaises(DomainError):
                KernelQuery(EXAMPLE, Beta.ONE, t)
        with self.assertRaises(DomainError):
            KernelQuery(EXAMPLE, 0.5, 1.0)
        with self.assertRaises(DomainError):
            eval_kernel_batch(EXAMPLE, Beta.ONE, [1.0, 0.0])


class TestIntegratedKernel(unittest.TestCase):
    """Integrals of E_{alpha,alpha} from 0"""

    def test_first_integral(self):
        """
        Tests the first integral against t^alpha E_{alpha,alpha+1}(a t^alpha) for b = 0
        """
        p = ProblemParams(alpha=0.5, a=-5.0, b=0.0, tau=1.0)
        t_grid = [0.5, 2.0]
        values = integrated_kernel_grid(p, 1, t_grid)
        for t, value in zip(t_grid, values):
            expected = t**0.5 * eval_classical_ml(0.5, 1.5, -5.0 * t**0.5)
            self.assertAlmostEqual(value, expected, delta=1e-9)

    def test_nonpositive_times(self):
        """
        Tests values at t <= 0 are 0 and unsupported orders
        """
        values = integrated_kernel_grid(EXAMPLE, 2, [-1.0, 0.0, 1.0])
        self.assertEqual(values[0], 0.0)
        self.assertEqual(values[1], 0.0)
        self.assertGreater(values[2], 0.0)
        with self.assertRaises(ValueError):
            integrated_kernel_grid(EXAMPLE, 3, [1.0])
