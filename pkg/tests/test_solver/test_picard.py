""" Tests for fracdelay.solver.picard """

import unittest

import numpy as np

from fracdelay.core import (
    HistoryFunction,
    Nonlinearity,
    Scheme,
    example51_histories,
    example51_nonlinearity,
    example51_problem,
)
from fracdelay.error import PicardDiverged
from fracdelay.solver import (
    SolveConfig,
    build_kernel_cache,
    eval_varconst,
    max_deviation,
    solve_abm,
    solve_picard,
)
from fracdelay.utils.fd_debugger import Checkpoints

P = example51_problem()
PHI = HistoryFunction.constant(0.6, P.tau)


class TestSolvePicard(unittest.TestCase):
    """Picard iteration of the representation formula"""

    def test_agrees_with_abm(self):
        """
        Tests the two schemes for the four reference histories: on [0, 5] they
        agree to 2.5e-2 at h = 1/64 and to 5e-3 at h = 1/128; from t = 0.5 on
        they agree to 5e-3 already at h = 1/64
        """
        f = example51_nonlinearity()
        full = {}
        for h in (1 / 64, 1 / 128):
            cfg = SolveConfig(h=h, t_end=5.0)
            cache = build_kernel_cache(P, cfg.h, cfg.n_steps)
            for phi in example51_histories(P.tau):
                picard = solve_picard(P, f, phi, cfg, cache=cache)
                abm = solve_abm(P, f, phi, cfg)
                self.assertEqual(picard.scheme, Scheme.PICARD)
                self.assertGreater(picard.iterations, 1)
                full[h, phi.name] = max_deviation(abm, picard, 0.0, 5.0)
                if h == 1 / 64:
                    self.assertLessEqual(max_deviation(abm, picard, 0.5, 5.0), 5e-3, msg=phi.name)

        for phi in example51_histories(P.tau):
            self.assertLessEqual(full[1 / 64, phi.name], 2.5e-2, msg=phi.name)
            self.assertLessEqual(full[1 / 128, phi.name], 5e-3, msg=phi.name)
            self.assertLess(full[1 / 128, phi.name], full[1 / 64, phi.name], msg=phi.name)

    def test_linear_matches_representation(self):
        """
        Tests f = 0 against pointwise evaluation of the representation formula
        """
        cfg = SolveConfig(h=1 / 128, t_end=5.0)
        picard = solve_picard(P, Nonlinearity.zero(), PHI, cfg)
        self.assertEqual(picard.iterations, 1)
        for t in (1.0, 2.0, 5.0):
            self.assertAlmostEqual(float(picard.at(t)), eval_varconst(P, PHI, None, t), delta=1e-4)

    def test_cache_reuse(self):
        """
        Tests a prebuilt kernel cache gives the same trajectory
        """
        cfg = SolveConfig(h=1 / 32, t_end=2.0)
        f = example51_nonlinearity()
        cache = build_kernel_cache(P, cfg.h, cfg.n_steps)
        self.assertEqual(cache.e1[0], 1.0)
        self.assertEqual(cache.k1.size, cfg.n_steps + 2)
        first = solve_picard(P, f, PHI, cfg, cache=cache)
        second = solve_picard(P, f, PHI, cfg)
        self.assertTrue(np.allclose(first.values, second.values, rtol=0, atol=1e-14))

    def test_untimed_outside_cli(self):
        """
        Tests library solves leave the stage registry empty
        """
        Checkpoints().clear()
        for _ in range(3):
            solve_picard(P, Nonlinearity.zero(), PHI, SolveConfig(h=1 / 16, t_end=1.0))
        self.assertEqual(Checkpoints().checkpoints, [])

    def test_hat_weights(self):
        """
        Tests hat weights vanish for centres beyond the evaluation point
        """
        cache = build_kernel_cache(P, 1 / 16, 8)
        weights = cache.hat_weights(np.array([-2, -1, 0, 1]))
        self.assertEqual(weights[0], 0.0)
        self.assertGreater(weights[2], 0.0)

    def test_iteration_limit(self):
        """
        Tests PicardDiverged when the iteration budget runs out
        """
        cfg = SolveConfig(h=1 / 16, t_end=2.0, picard_max_iters=1)
        with self.assertRaises(PicardDiverged) as context:
            solve_picard(P, example51_nonlinearity(), PHI, cfg)
        self.assertEqual(context.exception.iterations, 1)

    def test_max_deviation_window(self):
        """
        Tests max_deviation without a common window
        """
        cfg = SolveConfig(h=1 / 16, t_end=1.0)
        abm = solve_abm(P, Nonlinearity.zero(), PHI, cfg)
        self.assertEqual(max_deviation(abm, abm), 0.0)
        with self.assertRaises(ValueError):
            max_deviation(abm, abm, 2.0, 3.0)
