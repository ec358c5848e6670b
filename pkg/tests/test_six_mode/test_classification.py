import numpy as np
import unittest

import models.cluster.coordinates as coords
import models.cluster.dictionary as dictionary
import models.six_mode.canonical as canonical
import models.six_mode.classification as classification
import numerical_methods.multilinear.tensor as tensor
import utils.errors as errors
import utils.global_types as global_types
import utils.misc as misc

CLASSES = list(global_types.SixModeClass)


class Canonical(unittest.TestCase):

    def test_1(self):
        """Each canonical state lands in its own class."""
        for label in CLASSES:
            report = classification.classify6(canonical.canonical_state6(label))
            self.assertEqual(report.label, label)

    def test_2(self):
        """Classes survive random SLOCC transformations."""
        rng = np.random.default_rng(40)
        for label in CLASSES:
            t = canonical.canonical_state6(label)
            for _ in range(50):
                s = tensor.SloccMatrix(misc.random_slocc(6, rng))
                report = classification.classify6(tensor.slocc_apply(t, s))
                self.assertEqual(report.label, label)

    def test_3(self):
        """A generic state is GHZ."""
        rng = np.random.default_rng(41)
        t = tensor.AntisymTensor(3, 6, misc.random_complex(20, rng))
        self.assertEqual(classification.classify6(t).label,
                         global_types.SixModeClass.GHZ)


class FromCC(unittest.TestCase):

    def test_1(self):
        """Ladder on (X, xi) alone."""
        zero = np.zeros((3, 3))
        cases = [
            (zero, 0, global_types.SixModeClass.SEP),
            (np.diag([1, 0, 0]), 0, global_types.SixModeClass.BISEP),
            (np.diag([1, 1, 0]), 0, global_types.SixModeClass.W),
            (np.eye(3), 0, global_types.SixModeClass.GHZ),
            (zero, 0.5j, global_types.SixModeClass.GHZ),
        ]
        for x, xi, label in cases:
            cc = coords.SixModeCC(x, zero, xi)
            self.assertEqual(classification.classify6_cc(cc), label)

    def test_2(self):
        """CC ladder agrees with the tensor ladder, with and without
        singles."""
        rng = np.random.default_rng(42)
        for label in CLASSES[1:]:
            ci = coords.ci6_from_tensor(canonical.canonical_state6(label))
            cc = dictionary.cc6_from_ci6(ci)
            self.assertEqual(classification.classify6_cc(cc), label)
            dressed = coords.SixModeCC(cc.x, misc.random_complex((3, 3), rng),
                                       cc.xi)
            self.assertEqual(classification.classify6_cc(dressed), label)
            t = coords.tensor_from_ci6(dictionary.ci6_from_cc6(dressed))
            self.assertEqual(classification.classify6(t).label, label)


class State(unittest.TestCase):

    def test_1(self):
        t = canonical.canonical_state6(global_types.SixModeClass.GHZ)
        state = classification.SixModeState(t)
        self.assertAlmostEqual(state.invariant(), 4)
        self.assertEqual(state.classify().label,
                         global_types.SixModeClass.GHZ)
        self.assertEqual(state.scale, 1)
        self.assertEqual(repr(state), "3 fermions, 6 modes state object")
        self.assertFalse(state.is_zero())
        with self.assertRaises(errors.UnsupportedCaseError):
            classification.SixModeState(tensor.AntisymTensor(3, 7))

    def test_2(self):
        """D picks up det(S)^2 under SLOCC."""
        rng = np.random.default_rng(43)
        state = classification.SixModeState(
            tensor.AntisymTensor(3, 6, misc.random_complex(20, rng)))
        s = tensor.SloccMatrix(misc.random_slocc(6, rng))
        moved = state.transformed(s)
        self.assertIsInstance(moved, classification.SixModeState)
        self.assertTrue(misc.relative_error(moved.invariant(),
                                            s.det ** 2 * state.invariant())
                        < 1.0e-10)


if __name__ == '__main__':

    for label in CLASSES:
        report = classification.classify6(canonical.canonical_state6(label))
        print(f"{label.name:6s} D = {report.d:.3f}, |dual| = "
              f"{report.dual_norm:.3f}, |K| = {report.k_norm:.3f}")

    unittest.main()
