import numpy as np
import unittest

import models.cluster.coordinates as coords
import models.cluster.dictionary as dictionary
import models.six_mode.canonical as canonical
import models.six_mode.covariants as covariants
import numerical_methods.multilinear.tensor as tensor
import utils.errors as errors
import utils.global_types as global_types
import utils.misc as misc


class Quartic(unittest.TestCase):

    def test_1(self):
        """D(p^{123} + p^{456}) = 1 and D of the canonical GHZ state is 4."""
        t = tensor.AntisymTensor.from_dict(3, 6, {(0, 1, 2): 1,
                                                  (3, 4, 5): 1})
        self.assertAlmostEqual(covariants.quartic_d(t), 1)
        k = covariants.covariant_k(t)
        self.assertTrue(np.max(np.abs(k - np.diag([1, 1, 1, -1, -1, -1])))
                        < 1.0e-14)
        ghz = canonical.canonical_state6(global_types.SixModeClass.GHZ)
        self.assertAlmostEqual(covariants.quartic_d(ghz), 4)

    def test_2(self):
        """Tensor, CI and CC forms of D agree."""
        rng = np.random.default_rng(50)
        for _ in range(10):
            t = tensor.AntisymTensor(3, 6, misc.random_complex(20, rng))
            d = covariants.quartic_d(t)
            ci = coords.ci6_from_tensor(t)
            self.assertTrue(misc.relative_error(covariants.quartic_d_ci(ci), d)
                            < 1.0e-10)
            normalized = coords.ci6_from_tensor(t / t[(0, 1, 2)])
            cc = dictionary.cc6_from_ci6(normalized)
            self.assertTrue(misc.relative_error(
                covariants.quartic_d_cc(cc) * t[(0, 1, 2)] ** 4, d)
                            < 1.0e-9)

    def test_3(self):
        """K^2 = D I for six modes."""
        rng = np.random.default_rng(51)
        t = tensor.AntisymTensor(3, 6, misc.random_complex(20, rng))
        k = covariants.covariant_k(t)
        d = covariants.quartic_d(t)
        self.assertTrue(misc.relative_error(k @ k, d * np.eye(6)) < 1.0e-10)

    def test_4(self):
        with self.assertRaises(errors.UnsupportedCaseError):
            covariants.covariant_k(tensor.AntisymTensor(3, 7))

    def test_5(self):
        """D(S psi) = det(S)^2 D(psi)."""
        rng = np.random.default_rng(54)
        t = tensor.AntisymTensor(3, 6, misc.random_complex(20, rng))
        d = covariants.quartic_d(t)
        for _ in range(100):
            s = tensor.SloccMatrix(misc.random_slocc(6, rng))
            moved = covariants.quartic_d(tensor.slocc_apply(t, s))
            self.assertTrue(misc.relative_error(moved, s.det ** 2 * d)
                            < 1.0e-9)


class Dual(unittest.TestCase):

    def test_1(self):
        """Dual of p^{123} + p^{456} is p^{123} - p^{456}."""
        t = tensor.AntisymTensor.from_dict(3, 6, {(0, 1, 2): 1,
                                                  (3, 4, 5): 1})
        dual = covariants.dual_tensor(t)
        self.assertEqual(dual[(0, 1, 2)], 1)
        self.assertEqual(dual[(3, 4, 5)], -1)
        self.assertAlmostEqual(dual.norm() ** 2, 2)

    def test_2(self):
        """The dual state is K acting on psi, divided by 3."""
        rng = np.random.default_rng(52)
        for _ in range(5):
            t = tensor.AntisymTensor(3, 6, misc.random_complex(20, rng))
            dual = covariants.dual_tensor(t)
            k_psi = covariants.k_action(covariants.covariant_k(t), t) / 3
            self.assertTrue(dual.distance(k_psi) < 1.0e-10 * dual.max_abs())

    def test_3(self):
        """dual(S psi) = det(S) S dual(psi)."""
        rng = np.random.default_rng(53)
        t = tensor.AntisymTensor(3, 6, misc.random_complex(20, rng))
        s = tensor.SloccMatrix(misc.random_slocc(6, rng))
        lhs = covariants.dual_tensor(tensor.slocc_apply(t, s))
        rhs = s.det * tensor.slocc_apply(covariants.dual_tensor(t), s)
        self.assertTrue(lhs.distance(rhs) < 1.0e-10 * rhs.max_abs())

    def test_4(self):
        """The dual vanishes on BISEP, the Q polynomials only on SEP."""
        bisep = coords.ci6_from_tensor(
            canonical.canonical_state6(global_types.SixModeClass.BISEP))
        self.assertEqual(
            np.max(np.abs(covariants.dual_state(bisep).as_array())), 0)
        self.assertTrue(max(np.max(np.abs(q))
                            for q in covariants.q_polynomials(bisep)) > 0)
        sep = coords.ci6_from_tensor(
            canonical.canonical_state6(global_types.SixModeClass.SEP))
        for q in covariants.q_polynomials(sep):
            self.assertEqual(np.max(np.abs(q)), 0)
        w = coords.ci6_from_tensor(
            canonical.canonical_state6(global_types.SixModeClass.W))
        self.assertTrue(
            np.max(np.abs(covariants.dual_state(w).as_array())) > 0)


if __name__ == '__main__':

    rng = np.random.default_rng(0)
    t = tensor.AntisymTensor(3, 6, misc.random_complex(20, rng))
    k = covariants.covariant_k(t)
    print("Eigenvalues of K:", np.round(np.linalg.eigvals(k), 6))
    print("sqrt(D):", np.sqrt(covariants.quartic_d(t)))

    unittest.main()
