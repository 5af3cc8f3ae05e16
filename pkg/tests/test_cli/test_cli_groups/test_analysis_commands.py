"""
fracdelay | Tests | CLI | ml-eval, roots, stability-map, certify
"""

import filecmp
import os
import re
import tempfile
import unittest

from click.testing import CliRunner

from fracdelay.cli.entry import fracdelay_cli
from fracdelay.mlf import eval_classical_ml
from fracdelay.utils import read_csv


class CommandTestCase(unittest.TestCase):
    """Runs commands into a temporary output directory."""

    command = ""

    def setUp(self):
        self.runner = CliRunner()
        self.tmp = tempfile.TemporaryDirectory()  # pylint: disable=consider-using-with

    def tearDown(self):
        self.tmp.cleanup()

    def invoke(self, *args, out_dir=None):
        out_dir = out_dir or self.tmp.name
        return self.runner.invoke(fracdelay_cli, [self.command, "--out-dir", out_dir, *args])

    def csv(self, name, out_dir=None):
        return read_csv(os.path.join(out_dir or self.tmp.name, name))


class TestMlEvalCommand(CommandTestCase):
    """fracdelay ml-eval"""

    command = "ml-eval"

    def test_values(self):
        """
        Tests printed kernel values for b = 0
        """
        result = self.invoke("--b", "0", "--t", "1", "--t", "2")
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn("E(beta=one)", result.output)
        values = [float(token) for token in re.findall(r"-?\d\.\d{12}e[+-]\d+", result.output)]
        self.assertEqual(len(values), 2)
        self.assertAlmostEqual(values[0], eval_classical_ml(0.5, 1.0, -5.0), delta=1e-8)

    def test_decay(self):
        """
        Tests --decay on the default grid
        """
        result = self.invoke("--beta", "alpha", "--decay")
        self.assertEqual(result.exit_code, 0, result.output)
        header, rows = self.csv("decay.csv")
        self.assertEqual(header, ["t", "kernel_abs", "compensated"])
        self.assertEqual([float(row[0]) for row in rows], [1, 2, 5, 10, 20, 50, 100])
        self.assertNotIn("grow", result.output)

    def test_l1(self):
        """
        Tests --l1 without delay
        """
        result = self.invoke("--b", "0", "--l1")
        self.assertEqual(result.exit_code, 0, result.output)
        _, rows = self.csv("l1.csv")
        self.assertAlmostEqual(float(rows[0][0]), 0.2, delta=0.004)

    def test_errors(self):
        """
        Tests a bad contour angle (usage) and a nonpositive time (numerical)
        """
        self.assertEqual(self.invoke("--theta", "0.5").exit_code, 2)
        self.assertEqual(self.invoke("--beta", "two").exit_code, 2)
        result = self.invoke("--t", "0")
        self.assertEqual(result.exit_code, 1)
        self.assertIn("Error:", result.output)
        self.assertEqual(self.invoke("--a", "1", "--b", "0", "--decay").exit_code, 1)


class TestRootsCommand(CommandTestCase):
    """fracdelay roots"""

    command = "roots"

    def test_stable_problem(self):
        """
        Tests the reference problem has no zeros in the right half-plane
        """
        result = self.invoke()
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn("Winding count: 0", result.output)
        self.assertIn("Right half-plane count: 0 (zero)", result.output)
        self.assertIn("Certificate:", result.output)
        header, rows = self.csv("roots.csv")
        self.assertEqual(header, ["re", "im", "residual", "multiplicity"])
        self.assertEqual(rows, [])

    def test_real_root(self):
        """
        Tests a + b >= 0 gives a located nonnegative real zero
        """
        result = self.invoke("--a", "1", "--b", "1", "--re-hi", "5", "--im-lo", "-20",
                             "--im-hi", "20")
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn("(nonzero)", result.output)
        _, rows = self.csv("roots.csv")
        self.assertTrue(any(float(row[1]) == 0.0 and float(row[0]) > 0 for row in rows))

    def test_bad_region(self):
        """
        Tests an empty rectangle
        """
        self.assertEqual(self.invoke("--re-lo", "5", "--re-hi", "1").exit_code, 2)


class TestStabilityMapCommand(CommandTestCase):
    """fracdelay stability-map"""

    command = "stability-map"

    def test_map(self):
        """
        Tests the classified grid and its tallies
        """
        result = self.invoke("--grid-n", "5")
        self.assertEqual(result.exit_code, 0, result.output)
        header, rows = self.csv("stability_map.csv")
        self.assertEqual(header, ["a", "b", "class"])
        self.assertEqual(len(rows), 25)
        # a = -2: b in {-2, -1, 0, 1} satisfy a <= b < -a
        self.assertEqual([row[2] for row in rows[:5]], ["StableCriterion"] * 4 + ["NonnegativeSum"])
        self.assertIn("StableCriterion: 6", result.output)
        self.assertTrue(os.path.exists(os.path.join(self.tmp.name, "stability_map.svg")))

    def test_verify(self):
        """
        Tests sampled criterion cells have no right half-plane zeros
        """
        result = self.invoke("--grid-n", "5", "--verify", "--verify-samples", "3")
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn("Verified: 3/3", result.output)
        _, rows = self.csv("stability_verify.csv")
        self.assertEqual([row[3] for row in rows], ["true"] * 3)

    def test_deterministic(self):
        """
        Tests two identical runs write byte-identical CSV files
        """
        first = os.path.join(self.tmp.name, "first")
        second = os.path.join(self.tmp.name, "second")
        self.assertEqual(self.invoke("--grid-n", "7", out_dir=first).exit_code, 0)
        self.assertEqual(self.invoke("--grid-n", "7", out_dir=second).exit_code, 0)
        self.assertTrue(filecmp.cmp(os.path.join(first, "stability_map.csv"),
                                    os.path.join(second, "stability_map.csv"), shallow=False))

    def test_bad_range(self):
        """
        Tests lo >= hi and a one-point grid
        """
        self.assertEqual(self.invoke("--a-range", "1", "0").exit_code, 2)
        self.assertEqual(self.invoke("--grid-n", "1").exit_code, 2)


class TestCertifyCommand(CommandTestCase):
    """fracdelay certify"""

    command = "certify"

    def test_inconclusive(self):
        """
        Tests coefficients outside the criterion
        """
        result = self.invoke("--a", "1", "--b", "0", "--samples", "100")
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn("verdict=Inconclusive", result.output)
        with open(os.path.join(self.tmp.name, "verdict.txt"), encoding="utf-8") as verdict_file:
            self.assertIn("linear_ok=false", verdict_file.read())

    def test_attractivity(self):
        """
        Tests the reference problem with an attractivity check
        """
        result = self.invoke("--samples", "1000", "--attractivity", "3", "--h", "0.015625",
                             "--t-end", "40")
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn("verdict=CertifiedAsymptoticallyStable", result.output)
        self.assertIn("Attractivity: 3/3 histories decayed", result.output)
        _, rows = self.csv("attractivity.csv")
        self.assertEqual(len(rows), 3)

    def test_equilibrium_required(self):
        """
        Tests f(0, 0) != 0 exits 1
        """
        result = self.invoke("--f", "polynomial", "--term", "1", "0", "0")
        self.assertEqual(result.exit_code, 1)
        self.assertIn("Error:", result.output)
