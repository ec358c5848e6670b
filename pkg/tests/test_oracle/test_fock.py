import numpy as np
import unittest

import numerical_methods.multilinear.tensor as tensor
import numerical_methods.oracle.fock as fock
import utils.errors as errors
import utils.global_types as global_types
import utils.misc as misc

CREATE = global_types.FermionOp.CREATE
ANNIHILATE = global_types.FermionOp.ANNIHILATE


class ModeOperators(unittest.TestCase):

    def test_1(self):
        """Canonical anticommutators on every basis vector of 4 modes."""
        for v in fock.basis_vectors(4):
            for mu in range(4):
                for nu in range(4):
                    self.assertEqual(
                        fock.anticommutator_residual(v, mu, nu), 0)

    def test_2(self):
        """p^0 p^1 |0> and p^1 p^0 |0> differ by a sign."""
        v01 = fock.FockVector.slater(4, [0, 1])
        v10 = fock.FockVector.slater(4, [1, 0])
        self.assertEqual(v01[0b0011], 1)
        self.assertEqual(v10[0b0011], -1)
        self.assertTrue((v01 + v10).is_zero())
        self.assertTrue(fock.apply_mode_op(v01, CREATE, 1).is_zero())
        self.assertEqual(v01.sectors(), frozenset({2}))

    def test_3(self):
        with self.assertRaises(errors.StateError):
            fock.apply_mode_op(fock.FockVector.vacuum(3), CREATE, 3)
        with self.assertRaises(errors.StateError):
            fock.FockVector(3, {0b1000: 1})


class TensorBridge(unittest.TestCase):

    def test_1(self):
        """Tensor amplitudes become bitstring coefficients and back."""
        rng = np.random.default_rng(5)
        t = tensor.AntisymTensor(3, 7, misc.random_complex(35, rng))
        v = fock.fock_from_tensor(t)
        self.assertEqual(len(v), 35)
        self.assertEqual(v[0b1000011], t[(0, 1, 6)])
        self.assertEqual(fock.tensor_from_fock(v, 3).distance(t), 0)

    def test_2(self):
        """Other particle sectors are ignored when reading a tensor."""
        v = fock.FockVector.vacuum(6) + fock.FockVector.slater(6, [0, 1, 2])
        t = fock.tensor_from_fock(v, 3)
        self.assertEqual(t[(0, 1, 2)], 1)
        self.assertEqual(t.norm(), 1)


class Cluster(unittest.TestCase):

    def test_1(self):
        """p^2 n_0 p^3 n_1 p^{01}|0> = p^{23}|0>."""
        op = fock.ClusterOperator.from_pairs(4, [0, 1],
                                             [(1, (2, 3), (0, 1))])
        result = op.apply(fock.FockVector.slater(4, [0, 1]))
        self.assertTrue((result - fock.FockVector.slater(4, [2, 3]))
                        .is_zero())

    def test_2(self):
        """Single excitation: e^{y p^2 n_0} p^{01}|0>."""
        y = 0.5 - 2j
        op = fock.ClusterOperator.from_pairs(4, [0, 1], [(y, (2,), (0,))])
        state = fock.exp_cluster(fock.FockVector.slater(4, [0, 1]), op)
        t = fock.tensor_from_fock(state, 2)
        self.assertEqual(t[(0, 1)], 1)
        self.assertEqual(t[(2, 1)], y)
        self.assertEqual(len(state), 2)

    def test_3(self):
        """Operator algebra and the excitation check."""
        t1 = fock.ClusterOperator.from_pairs(4, [0, 1], [(1, (2,), (0,))])
        t2 = fock.ClusterOperator.from_pairs(4, [0, 1], [(2, (3,), (1,))])
        self.assertEqual(len((t1 + 3 * t2).monomials), 2)
        self.assertEqual((t1 + 3 * t2).monomials[1].coefficient, 6)
        self.assertTrue(t1.is_excitation())
        backwards = fock.ClusterOperator.from_pairs(4, [0, 1],
                                                    [(1, (0,), (2,))])
        self.assertFalse(backwards.is_excitation())
        with self.assertRaises(errors.StateError):
            fock.exp_cluster(fock.FockVector.slater(4, [0, 1]), backwards)
        with self.assertRaises(errors.StateError):
            t1 + fock.ClusterOperator.from_pairs(4, [0, 2], [])
        with self.assertRaises(errors.StateError):
            t1.add_pairs(1, (2, 3), (0,))


if __name__ == '__main__':

    v = fock.FockVector.slater(6, [0, 1, 2])
    for mu in range(6):
        w = fock.apply_mode_op(v, ANNIHILATE, mu)
        print(mu, sorted(w.items()))

    unittest.main()
