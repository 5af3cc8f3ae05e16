""" Tests for fracdelay.charfn.locating """

import os
import tempfile
import unittest

import numpy as np

from fracdelay.charfn import (
    DEFAULT_CONFIG,
    ROOT_RESIDUAL_TOL,
    ComplexRegion,
    eval_Q,
    estimate_multiplicity,
    locate_roots,
    newton_polish,
)
from fracdelay.core import ProblemParams, example51_problem
from fracdelay.utils.fd_csv import read_csv


class TestLocating(unittest.TestCase):
    """Root location by subdivision and Newton polishing"""

    def test_empty_region(self):
        """
        Tests the reference problem: no zeros, nothing partial
        """
        p = example51_problem()
        report = locate_roots(p, ComplexRegion.right_half_plane(10.0, 50.0))
        self.assertEqual(report.winding_count, 0)
        self.assertEqual(report.roots, ())
        self.assertFalse(report.partial)

    def test_real_root(self):
        """
        Tests b = 0, a = 1 with its zero at s = 1
        """
        p = ProblemParams(0.5, 1.0, 0.0, 1.0)
        report = locate_roots(p, ComplexRegion.right_half_plane(10.0, 50.0))
        self.assertEqual(report.winding_count, 1)
        self.assertEqual(len(report.roots), 1)
        self.assertAlmostEqual(report.roots[0].value, 1.0, places=10)
        self.assertEqual(report.roots[0].multiplicity, 1)
        self.assertFalse(report.partial)

    def test_conjugate_pairs(self):
        """
        Tests an oscillatory instability: every located zero has its conjugate
        """
        p = ProblemParams(0.9, 0.0, -3.0, 1.0)
        report = locate_roots(p, ComplexRegion.right_half_plane(10.0, 50.0))
        self.assertGreaterEqual(report.winding_count, 2)
        self.assertEqual(report.winding_count % 2, 0)
        self.assertEqual(report.located_count, report.winding_count)
        values = np.array([root.value for root in report.roots])
        for root in report.roots:
            self.assertLessEqual(abs(eval_Q(p, root.value)), ROOT_RESIDUAL_TOL)
            self.assertLess(np.min(np.abs(values - np.conj(root.value))), 1e-10)

    def test_rows_and_csv(self):
        """
        Tests (re, im) ordering of the CSV rows
        """
        p = ProblemParams(0.9, 0.0, -3.0, 1.0)
        report = locate_roots(p, ComplexRegion.right_half_plane(10.0, 50.0))
        rows = report.rows()
        self.assertEqual(rows, sorted(rows, key=lambda row: (row[0], row[1])))
        with tempfile.TemporaryDirectory() as tmp:
            header, written = read_csv(report.write_csv(os.path.join(tmp, "roots.csv")))
        self.assertEqual(header, ["re", "im", "residual", "multiplicity"])
        self.assertEqual(len(written), len(rows))

    def test_upper_region_only(self):
        """
        Tests a region above the axis: conjugates outside it are dropped
        """
        p = ProblemParams(0.9, 0.0, -3.0, 1.0)
        full = locate_roots(p, ComplexRegion.right_half_plane(10.0, 50.0))
        upper = locate_roots(p, ComplexRegion.rectangle(0.0, 10.0, 0.5, 50.0))
        self.assertEqual(2 * upper.located_count, full.located_count)
        self.assertTrue(all(root.value.imag > 0 for root in upper.roots))

    def test_newton_and_multiplicity(self):
        """
        Tests polishing from a nearby start and the simple-root estimate
        """
        p = ProblemParams(0.5, 1.0, 0.0, 1.0)
        root = newton_polish(p, 1.2 + 0.1j, DEFAULT_CONFIG)
        self.assertAlmostEqual(root, 1.0, places=10)
        self.assertEqual(estimate_multiplicity(p, root, DEFAULT_CONFIG), 1)
