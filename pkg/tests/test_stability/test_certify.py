""" Tests for fracdelay.stability.certify and fracdelay.stability.attractivity """

import os
import tempfile
import unittest

from fracdelay.core import (
    HistoryFunction,
    Nonlinearity,
    ProblemParams,
    example51_nonlinearity,
    example51_problem,
)
from fracdelay.error import HypothesisH1Violated
from fracdelay.solver import SolveConfig
from fracdelay.stability import (
    CERTIFIED_NOTE,
    CertifyConfig,
    Verdict,
    certify,
    empirical_attractivity,
    random_histories,
)
from fracdelay.utils import read_csv


class TestCertify(unittest.TestCase):
    """Stability certificates"""

    @classmethod
    def setUpClass(cls):
        cls.verdict = certify(example51_problem(), example51_nonlinearity())

    def test_example_certified(self):
        """
        Tests the reference problem is certified with a positive radius
        """
        verdict = self.verdict
        self.assertIs(verdict.verdict, Verdict.CERTIFIED)
        self.assertTrue(verdict.linear_ok)
        self.assertTrue(verdict.h2_ok)
        self.assertLess(verdict.q, 1.0)
        self.assertGreater(verdict.delta, 0.0)
        self.assertLessEqual(verdict.delta, verdict.epsilon_star)
        self.assertEqual(verdict.rhp_roots, 0)

    def test_record(self):
        """
        Tests the key=value record
        """
        record = self.verdict.record()
        self.assertIn("verdict=CertifiedAsymptoticallyStable\n", record)
        self.assertIn(f"note={CERTIFIED_NOTE}\n", record)
        with tempfile.TemporaryDirectory() as out_dir:
            path = self.verdict.write(os.path.join(out_dir, "verdict.txt"))
            with open(path, encoding="utf-8") as record_file:
                self.assertEqual(record_file.read(), record)

    def test_attractivity_inside_radius(self):
        """
        Tests random histories inside the certified radius all decay
        """
        p = example51_problem()
        phis = random_histories(self.verdict.delta, p.tau, 10, seed=1)
        for phi in phis:
            self.assertLessEqual(phi.sup_norm(), self.verdict.delta * (1 + 1e-12))
        report = empirical_attractivity(p, example51_nonlinearity(), phis,
                                        SolveConfig(h=1 / 64, t_end=40.0))
        self.assertEqual(len(report.entries), 10)
        for entry in report.entries:
            self.assertLessEqual(entry.history_sup, self.verdict.delta * (1 + 1e-12))
        self.assertTrue(report.all_decayed)
        self.assertEqual(report.t_tail, 30.0)

    def test_outside_criterion(self):
        """
        Tests (a, b) = (1, 0) is inconclusive without numeric fields
        """
        verdict = certify(ProblemParams(alpha=0.5, a=1.0, b=0.0, tau=1.0), example51_nonlinearity())
        self.assertIs(verdict.verdict, Verdict.INCONCLUSIVE)
        self.assertFalse(verdict.linear_ok)
        self.assertIsNone(verdict.delta)
        self.assertIn("delta=none\n", verdict.record())
        self.assertNotIn("note=", verdict.record())

    def test_equilibrium_required(self):
        """
        Tests f(0, 0) != 0
        """
        f = Nonlinearity.polynomial([(1.0, 0, 0)])
        with self.assertRaises(HypothesisH1Violated):
            certify(example51_problem(), f, CertifyConfig(check_roots=False))


class TestAttractivity(unittest.TestCase):
    """Empirical attractivity"""

    def test_random_histories(self):
        """
        Tests seeded affine histories inside the ball
        """
        first = random_histories(0.5, 1.0, 4, seed=2)
        second = random_histories(0.5, 1.0, 4, seed=2)
        self.assertEqual([phi.name for phi in first], [phi.name for phi in second])
        for phi in first:
            self.assertLessEqual(phi.sup_norm(), 0.5)

    def test_classical_decay(self):
        """
        Tests f = 0, a = -1, b = 0, phi = 1 decays on a long horizon
        """
        p = ProblemParams(alpha=0.5, a=-1.0, b=0.0, tau=1.0)
        report = empirical_attractivity(p, Nonlinearity.zero(),
                                        [HistoryFunction.constant(1.0, 1.0)],
                                        SolveConfig(h=0.25, t_end=1600.0))
        self.assertTrue(report.all_decayed)
        self.assertLess(report.entries[0].tail_limsup, 0.02)

    def test_blowup_recorded(self):
        """
        Tests a blow-up is recorded as not decayed, and the CSV
        """
        p = ProblemParams(alpha=0.5, a=1.0, b=0.0, tau=1.0)
        phis = [HistoryFunction.constant(1.0, 1.0), HistoryFunction.constant(0.0, 1.0)]
        report = empirical_attractivity(p, Nonlinearity.zero(), phis,
                                        SolveConfig(h=1 / 16, t_end=20.0, overflow_guard=1e3))
        self.assertFalse(report.entries[0].decayed)
        self.assertTrue(report.entries[0].error)
        self.assertAlmostEqual(report.entries[0].history_sup, 1.0)
        self.assertTrue(report.entries[1].decayed)
        self.assertFalse(report.all_decayed)
        with tempfile.TemporaryDirectory() as out_dir:
            header, rows = read_csv(report.write_csv(os.path.join(out_dir, "attractivity.csv")))
        self.assertEqual(header,
                         ["index", "history", "history_sup", "tail_limsup", "decayed", "error"])
        self.assertEqual(len(rows), 2)
