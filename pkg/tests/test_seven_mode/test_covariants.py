import numpy as np
import unittest

import models.perturbation.ghz_like as ghz_like
import models.seven_mode.classification as classification
import models.seven_mode.covariants as covariants
import numerical_methods.multilinear.tensor as tensor
import utils.errors as errors
import utils.misc as misc


class Invariant(unittest.TestCase):

    def test_1(self):
        """J(Psi_-) = 1 and Det B = J^3."""
        psi = ghz_like.psi_minus()
        _, n, l_matrix = covariants.covariants7(psi)
        j = covariants.j_from_covariants(n, l_matrix)
        self.assertTrue(abs(j - 1) < 1.0e-12)
        self.assertTrue(covariants.j_cube_residual(j, n) < 1.0e-12)
        self.assertTrue(abs(covariants.invariant_j(psi) - j) == 0)

    def test_2(self):
        """J(S psi) = det(S)^3 J(psi)."""
        rng = np.random.default_rng(60)
        t = tensor.AntisymTensor(3, 7, misc.random_complex(35, rng))
        j = covariants.invariant_j(t)
        for _ in range(100):
            s = tensor.SloccMatrix(misc.random_slocc(7, rng))
            moved = covariants.invariant_j(tensor.slocc_apply(t, s))
            self.assertTrue(misc.relative_error(moved, s.det ** 3 * j)
                            < 1.0e-9)

    def test_3(self):
        """N and L are symmetric; Det B = J^3 on a random state."""
        rng = np.random.default_rng(61)
        t = tensor.AntisymTensor(3, 7, misc.random_complex(35, rng))
        _, n, l_matrix = covariants.covariants7(t)
        self.assertTrue(np.max(np.abs(n - n.T)) == 0)
        self.assertTrue(np.max(np.abs(l_matrix - l_matrix.T)) == 0)
        j = covariants.j_from_covariants(n, l_matrix)
        self.assertTrue(covariants.j_cube_residual(j, n)
                        < 1.0e-9 * max(1.0, abs(j) ** 3))
        self.assertTrue(np.max(np.abs(covariants.b_matrix(n) + n / 6)) == 0)

    def test_4(self):
        with self.assertRaises(errors.UnsupportedCaseError):
            covariants.covariants7(tensor.AntisymTensor(3, 6))


class State(unittest.TestCase):

    def test_1(self):
        state = classification.SevenModeState(ghz_like.psi_minus())
        self.assertTrue(abs(state.invariant() - 1) < 1.0e-12)
        self.assertTrue(state.cube_residual() < 1.0e-12)
        self.assertEqual(state.b_matrix.shape, (7, 7))
        self.assertEqual(repr(state), "3 fermions, 7 modes state object")
        with self.assertRaises(errors.UnsupportedCaseError):
            classification.SevenModeState(tensor.AntisymTensor(3, 6))


if __name__ == '__main__':

    rng = np.random.default_rng(0)
    t = tensor.AntisymTensor(3, 7, misc.random_complex(35, rng))
    _, n, l_matrix = covariants.covariants7(t)
    j = covariants.j_from_covariants(n, l_matrix)
    print("J =", j)
    print("|J^3 - Det B| =", covariants.j_cube_residual(j, n))

    unittest.main()
