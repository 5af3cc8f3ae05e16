""" Tests for fracdelay.solver.config """

import unittest

from fracdelay.error import ConfigError
from fracdelay.solver import SolveConfig


class TestSolveConfig(unittest.TestCase):
    """SolveConfig validation and grid helpers"""

    def test_defaults(self):
        """
        Tests default iteration controls
        """
        cfg = SolveConfig(h=1 / 64, t_end=20.0)
        self.assertEqual(cfg.corrector_iters, 1)
        self.assertEqual(cfg.picard_max_iters, 100)
        self.assertEqual(cfg.n_steps, 1280)
        self.assertEqual(cfg.grid_steps(1.0), 64)
        self.assertEqual(cfg.as_dict()["h"], 1 / 64)

    def test_n_steps_covers_horizon(self):
        """
        Tests the last node is the first at or beyond t_end
        """
        self.assertEqual(SolveConfig(h=0.3, t_end=1.0).n_steps, 4)
        self.assertEqual(SolveConfig(h=0.5, t_end=0.1).n_steps, 1)

    def test_invalid(self):
        """
        Tests each rejected field is named
        """
        for kwargs, field in (
            ({"h": 0.0, "t_end": 1.0}, "h"),
            ({"h": float("nan"), "t_end": 1.0}, "h"),
            ({"h": 0.1, "t_end": -1.0}, "t_end"),
            ({"h": 0.1, "t_end": 1.0, "corrector_iters": 0}, "corrector_iters"),
            ({"h": 0.1, "t_end": 1.0, "picard_tol": 0.0}, "picard_tol"),
            ({"h": 0.1, "t_end": 1.0, "picard_max_iters": 0}, "picard_max_iters"),
        ):
            with self.assertRaises(ConfigError) as context:
                SolveConfig(**kwargs)
            self.assertEqual(context.exception.field, field)

    def test_grid_must_divide_delay(self):
        """
        Tests h that does not divide tau
        """
        with self.assertRaises(ConfigError):
            SolveConfig(h=0.3, t_end=1.0).grid_steps(1.0)
