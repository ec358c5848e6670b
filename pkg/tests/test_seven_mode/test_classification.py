import numpy as np
import unittest

import models.seven_mode.canonical as canonical
import models.seven_mode.classification as classification
import numerical_methods.multilinear.tensor as tensor
import utils.global_types as global_types
import utils.misc as misc

SevenModeClass = global_types.SevenModeClass

# Row of the table -> label classify7 reports for it.
REPORTED = {
    SevenModeClass.I: SevenModeClass.I,
    SevenModeClass.II: SevenModeClass.II,
    SevenModeClass.III: SevenModeClass.III,
    SevenModeClass.IV: SevenModeClass.IV,
    SevenModeClass.V: SevenModeClass.V,
    SevenModeClass.VI: SevenModeClass.VI_OR_VII,
    SevenModeClass.VII: SevenModeClass.VI_OR_VII,
    SevenModeClass.VIII: SevenModeClass.VIII,
    SevenModeClass.IX: SevenModeClass.IX,
    SevenModeClass.X: SevenModeClass.X,
}


class Table(unittest.TestCase):

    def test_1(self):
        """Canonical rows reproduce the rank of N and the label."""
        for row, reported in REPORTED.items():
            report = classification.classify7(canonical.canonical_state7(row))
            self.assertEqual(report.rank_n, canonical.RANK_N[row])
            self.assertEqual(report.label, reported)

    def test_2(self):
        """Rows survive random SLOCC transformations."""
        rng = np.random.default_rng(70)
        for row in REPORTED:
            t = canonical.canonical_state7(row)
            for _ in range(50):
                s = tensor.SloccMatrix(misc.random_slocc(7, rng))
                report = classification.classify7(tensor.slocc_apply(t, s))
                self.assertEqual(report.rank_n, canonical.RANK_N[row])
                if canonical.RANK_N[row] > 0:
                    self.assertEqual(report.label, REPORTED[row])

    def test_3(self):
        """Rank 0 states are handed to the six-mode ladder."""
        report = classification.classify7(
            canonical.canonical_state7(SevenModeClass.V))
        self.assertIsNotNone(report.delegated)
        self.assertEqual(report.delegated.label,
                         global_types.SixModeClass.GHZ)
        self.assertFalse(report.ambiguous)
        vi = classification.classify7(
            canonical.canonical_state7(SevenModeClass.VI))
        self.assertTrue(vi.ambiguous)
        self.assertEqual(vi.label.label, "VI-or-VII")

    def test_4(self):
        """Without an idle mode, rank 0 stays undecided between I and V."""
        sep = canonical.canonical_state7(SevenModeClass.II)
        s = tensor.SloccMatrix(misc.random_slocc(7, np.random.default_rng(71)))
        report = classification.classify7(tensor.slocc_apply(sep, s))
        self.assertEqual(report.rank_n, 0)
        self.assertEqual(report.label, SevenModeClass.I_TO_V)
        self.assertTrue(report.ambiguous)

    def test_5(self):
        """A generic state is in class X with full rank N."""
        rng = np.random.default_rng(72)
        t = tensor.AntisymTensor(3, 7, misc.random_complex(35, rng))
        report = classification.classify7(t)
        self.assertEqual(report.label, SevenModeClass.X)
        self.assertEqual(report.rank_n, 7)
        self.assertEqual(report.b_eigenvalues.size, 7)


class FromInvariants(unittest.TestCase):

    def test_1(self):
        j_zero = 0j
        cases = [
            (np.eye(7), 1, SevenModeClass.X),
            (np.diag([1, 1, 1, 1, 0, 0, 0]), 0, SevenModeClass.IX),
            (np.diag([1, 1, 0, 0, 0, 0, 0]), 0, SevenModeClass.VIII),
            (np.diag([1, 0, 0, 0, 0, 0, 0]), 0, SevenModeClass.VI_OR_VII),
            (np.zeros((7, 7)), 0, SevenModeClass.I_TO_V),
        ]
        for n, j, label in cases:
            result, rank, _ = classification.classify7_from_invariants(
                j_zero + j, n, 1.0)
            self.assertEqual(result, label)

    def test_2(self):
        """Ranks outside the table are reported with a warning."""
        with self.assertLogs("models.seven_mode.classification",
                             level="WARNING"):
            result, rank, _ = classification.classify7_from_invariants(
                0j, np.diag([1, 1, 1, 0, 0, 0, 0]), 1.0)
        self.assertEqual(rank, 3)
        self.assertEqual(result, SevenModeClass.VIII)

    def test_3(self):
        """Full rank N means class X even when |J| is under the cut."""
        for small in (1.0e-3, 1.0e-6):
            result, rank, _ = classification.classify7_from_invariants(
                0j, small * np.eye(7), 1.0)
            self.assertEqual(rank, 7)
            self.assertEqual(result, SevenModeClass.X)
        n = np.diag([12, 12, 12, 6, 9.0e-8, 9.0e-8, 9.0e-8])
        result, rank, _ = classification.classify7_from_invariants(
            -3.0e-8 + 0j, n, 2.0)
        self.assertEqual(rank, 7)
        self.assertEqual(result, SevenModeClass.X)


if __name__ == '__main__':

    for row in REPORTED:
        report = classification.classify7(canonical.canonical_state7(row))
        print(f"{row.name:5s} J = {report.j:.3f}, rank N = {report.rank_n}, "
              f"reported {report.label.label}")

    unittest.main()
