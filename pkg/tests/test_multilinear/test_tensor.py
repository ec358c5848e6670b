import itertools
import numpy as np
import unittest
from scipy import linalg

import numerical_methods.multilinear.tensor as tensor
import utils.errors as errors
import utils.misc as misc


class LeviCivita(unittest.TestCase):

    def test_1(self):
        """Signs of a few permutations and zero on repeats."""
        self.assertEqual(tensor.levi_civita((0, 1, 2)), 1)
        self.assertEqual(tensor.levi_civita((1, 0, 2)), -1)
        self.assertEqual(tensor.levi_civita((2, 0, 1)), 1)
        self.assertEqual(tensor.levi_civita((1, 3, 0, 2)), -1)
        self.assertEqual(tensor.levi_civita((0, 0, 1)), 0)

    def test_2(self):
        """Dense symbol contracts to the number of permutations."""
        eps = tensor.levi_civita_tensor(4)
        self.assertEqual(np.sum(eps ** 2), 24)
        self.assertEqual(eps[1, 0, 2, 3], -1)
        self.assertFalse(eps.flags.writeable)


class Storage(unittest.TestCase):

    def test_1(self):
        """Component counts and storage order."""
        self.assertEqual(tensor.AntisymTensor(3, 6).amplitudes.size, 20)
        self.assertEqual(tensor.AntisymTensor(3, 7).amplitudes.size, 35)
        self.assertEqual(tensor.AntisymTensor(4, 8).amplitudes.size, 70)
        self.assertEqual(tensor.canonical_tuples(3, 6)[:2],
                         ((0, 1, 2), (0, 1, 3)))

    def test_2(self):
        """Unsorted keys are stored with the sorting sign."""
        t = tensor.AntisymTensor.from_dict(3, 6, {(2, 0, 1): 2.0,
                                                  (3, 1, 5): 1j})
        self.assertEqual(t[(0, 1, 2)], 2)
        self.assertEqual(t[(1, 3, 5)], -1j)
        self.assertEqual(t[(3, 1, 5)], 1j)
        self.assertEqual(t[(1, 1, 5)], 0)

    def test_3(self):
        """Repeated indices, repeated index sets and out-of-range modes
        are rejected."""
        with self.assertRaises(errors.StateError):
            tensor.AntisymTensor.from_dict(3, 6, {(0, 0, 1): 1})
        with self.assertRaises(errors.StateError):
            tensor.AntisymTensor.from_dict(3, 6, {(0, 1, 2): 1,
                                                  (1, 0, 2): 1})
        with self.assertRaises(errors.StateError):
            tensor.AntisymTensor.from_dict(3, 6, {(0, 1, 6): 1})
        with self.assertRaises(errors.StateError):
            tensor.AntisymTensor(3, 6, [np.nan] * 20)
        with self.assertRaises(errors.StateError):
            tensor.AntisymTensor(3, 6, np.ones(21))

    def test_4(self):
        """The dense array is antisymmetric under every permutation."""
        rng = np.random.default_rng(1)
        t = tensor.AntisymTensor(3, 7, misc.random_complex(35, rng))
        dense = t.dense()
        for perm in itertools.permutations(range(3)):
            sign = tensor.levi_civita(perm)
            self.assertTrue(np.max(np.abs(np.transpose(dense, perm)
                                          - sign * dense)) == 0)
        self.assertTrue(tensor.AntisymTensor.from_dense(dense).distance(t)
                        == 0)

    def test_5(self):
        """Arithmetic and norms."""
        a = tensor.AntisymTensor.basis(6, (0, 1, 2))
        b = tensor.AntisymTensor.basis(6, (3, 4, 5), 2)
        c = 2 * (a + b) - b
        self.assertEqual(c[(0, 1, 2)], 2)
        self.assertEqual(c[(3, 4, 5)], 2)
        self.assertEqual((-c / 2)[(0, 1, 2)], -1)
        self.assertAlmostEqual(c.norm(), np.sqrt(8))
        self.assertEqual(c.max_abs(), 2)
        with self.assertRaises(errors.StateError):
            a + tensor.AntisymTensor(3, 7)

    def test_6(self):
        """Mode relabelling and restriction."""
        t = tensor.AntisymTensor.from_dict(3, 7, {(0, 1, 6): 1,
                                                  (2, 3, 4): 5})
        moved = t.permute_modes((6, 0, 1, 2, 3, 4, 5))
        self.assertEqual(moved[(0, 1, 2)], 1)
        self.assertEqual(moved[(3, 4, 5)], 5)
        restricted = t.restrict(range(6))
        self.assertEqual((restricted.n_fermions, restricted.n_modes), (3, 6))
        self.assertEqual(restricted[(2, 3, 4)], 5)
        self.assertEqual(restricted.max_abs(), 5)
        with self.assertRaises(errors.StateError):
            t.permute_modes((0, 0, 1, 2, 3, 4, 5))

    def test_7(self):
        """with_amplitudes replaces canonical components only."""
        t = tensor.AntisymTensor.basis(6, (0, 1, 2))
        u = t.with_amplitudes({(4, 3, 5): 3})
        self.assertEqual(u[(3, 4, 5)], -3)
        self.assertEqual(u[(0, 1, 2)], 1)
        self.assertEqual(t[(3, 4, 5)], 0)


class Wedge(unittest.TestCase):

    def test_1(self):
        """Wedge of unit vectors is the Slater determinant."""
        e = np.eye(6)
        self.assertEqual(tensor.wedge(e[0], e[1], e[2]).distance(
            tensor.AntisymTensor.basis(6, (0, 1, 2))), 0)
        self.assertEqual(tensor.wedge(e[1], e[0], e[2])[(0, 1, 2)], -1)
        self.assertEqual(tensor.wedge(e[0], e[0], e[2]).max_abs(), 0)

    def test_2(self):
        """SLOCC maps the wedge of v_k to the wedge of S v_k."""
        rng = np.random.default_rng(2)
        rows = misc.random_complex((3, 7), rng)
        s = tensor.SloccMatrix(misc.random_slocc(7, rng))
        lhs = tensor.slocc_apply(tensor.wedge(*rows), s)
        rhs = tensor.wedge(*(s.matrix @ v for v in rows))
        self.assertTrue(lhs.distance(rhs) < 1.0e-12 * rhs.max_abs())


class Slocc(unittest.TestCase):

    def test_1(self):
        """Composition: S2 (S1 psi) = (S2 S1) psi."""
        rng = np.random.default_rng(3)
        t = tensor.AntisymTensor(3, 6, misc.random_complex(20, rng))
        s1 = tensor.SloccMatrix(misc.random_slocc(6, rng))
        s2 = tensor.SloccMatrix(misc.random_slocc(6, rng))
        lhs = tensor.slocc_apply(tensor.slocc_apply(t, s1), s2)
        rhs = tensor.slocc_apply(t, s2 @ s1)
        self.assertTrue(lhs.distance(rhs) < 1.0e-12 * max(1, t.max_abs()))
        back = tensor.slocc_apply(tensor.slocc_apply(t, s1), s1.inverse())
        self.assertTrue(back.distance(t) < 1.0e-12 * max(1, t.max_abs()))

    def test_2(self):
        """Unit triangular matrices have det 1 exactly; singular ones are
        rejected."""
        rng = np.random.default_rng(4)
        upper = np.triu(misc.random_complex((6, 6), rng), 1) + np.eye(6)
        self.assertEqual(tensor.SloccMatrix(upper).det, 1)
        self.assertEqual(tensor.SloccMatrix(upper.T).det, 1)
        general = misc.random_complex((6, 6), rng)
        self.assertAlmostEqual(tensor.SloccMatrix(general).det,
                               linalg.det(general))
        with self.assertRaises(errors.StateError):
            tensor.SloccMatrix(np.ones((6, 6)))
        with self.assertRaises(errors.StateError):
            tensor.slocc_apply(tensor.AntisymTensor(3, 6),
                               tensor.SloccMatrix(np.eye(7)))


if __name__ == '__main__':

    rng = np.random.default_rng(0)
    t = tensor.AntisymTensor(3, 6, misc.random_complex(20, rng))
    for _ in range(5):
        s = tensor.SloccMatrix(misc.random_slocc(6, rng))
        print(f"|det S| = {abs(s.det):.3f}, "
              f"|S psi| / |psi| = {tensor.slocc_apply(t, s).norm() / t.norm():.3f}")

    unittest.main()
