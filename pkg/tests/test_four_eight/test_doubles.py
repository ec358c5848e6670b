import numpy as np
import unittest

import models.four_eight.doubles as doubles
import numerical_methods.multilinear.tensor as tensor
import utils.errors as errors
import utils.misc as misc


class Amplitudes(unittest.TestCase):

    def test_1(self):
        """Pair sorting signs and both antisymmetries of the full array."""
        t = doubles.DoublesAmplitudes48.from_dict({(1, 0, 2, 3): 2.0})
        self.assertEqual(t.matrix[0, 5], -2)
        full = t.full()
        self.assertEqual(full[0, 1, 2, 3], -2)
        self.assertEqual(full[1, 0, 2, 3], 2)
        self.assertEqual(full[1, 0, 3, 2], -2)
        self.assertEqual(np.count_nonzero(full), 4)

    def test_2(self):
        with self.assertRaises(errors.StateError):
            doubles.DoublesAmplitudes48.from_dict({(0, 0, 1, 2): 1})
        with self.assertRaises(errors.StateError):
            doubles.DoublesAmplitudes48.from_dict({(0, 1, 2, 3): 1,
                                                   (1, 0, 3, 2): 1})
        with self.assertRaises(errors.StateError):
            doubles.DoublesAmplitudes48(np.ones((4, 4)))
        with self.assertRaises(errors.StateError):
            doubles.DoublesAmplitudes48(np.full((6, 6), np.inf))


class State(unittest.TestCase):

    def test_1(self):
        """The expanded formula reproduces e^{T2} in Fock space."""
        rng = np.random.default_rng(110)
        for _ in range(3):
            t = doubles.DoublesAmplitudes48.random(rng)
            fock_state = doubles.t2_state_48(t)
            formula = doubles.t2_state_48_formula(t)
            self.assertTrue(fock_state.distance(formula)
                            < 1.0e-12 * fock_state.max_abs())
            self.assertTrue(misc.relative_error(
                fock_state[doubles.VIRTUAL],
                doubles.quadruple_coefficient_formula(t)) < 1.0e-12)

    def test_2(self):
        """A single double replaces the occupied pair by the virtual
        pair with the sign of (k, l, i, j)."""
        t = doubles.DoublesAmplitudes48.from_dict({(0, 1, 0, 1): 3})
        state = doubles.t2_state_48(t)
        self.assertEqual(state[(0, 1, 2, 3)], 1)
        self.assertEqual(state[(2, 3, 4, 5)], 3)
        self.assertEqual(state[doubles.VIRTUAL], 0)


class ClosedOrbit(unittest.TestCase):

    def test_1(self):
        """Quadruple coefficient is a^2 + .. + f^2 on the closed orbit."""
        params = doubles.ClosedOrbitParams(1, 2j, 0.5, -1, 3, 0.25)
        t = doubles.closed_orbit_doubles(params)
        expected = np.sum(params.as_array() ** 2)
        self.assertTrue(abs(doubles.quadruple_coefficient_formula(t)
                            - expected) < 1.0e-12)
        self.assertTrue(abs(params.constraint_residual()
                            - (expected - 1)) < 1.0e-12)

    def test_2(self):
        """With the constraint the state lies in span(P1..P7) with
        coordinates (1, -d, b, -c, f, -e, -a)."""
        rng = np.random.default_rng(111)
        for _ in range(5):
            params = doubles.random_closed_orbit_params(rng)
            self.assertTrue(abs(params.constraint_residual()) < 1.0e-12)
            state = doubles.t2_state_48(doubles.closed_orbit_doubles(params))
            residual, coordinates = doubles.subspace_membership(state)
            self.assertTrue(residual < 1.0e-12)
            self.assertTrue(misc.relative_error(
                coordinates, doubles.expected_p_coordinates(params))
                            < 1.0e-10)

    def test_3(self):
        """The sign pattern (1, 1, -1, -1, 1, 1) leaves the span."""
        rng = np.random.default_rng(112)
        params = doubles.random_closed_orbit_params(rng,
                                                    doubles.MIXED_PATTERN)
        self.assertTrue(abs(params.constraint_residual(
            doubles.MIXED_PATTERN)) < 1.0e-12)
        state = doubles.t2_state_48(doubles.closed_orbit_doubles(params))
        residual, _ = doubles.subspace_membership(state)
        self.assertTrue(residual > 1.0e-6)

    def test_4(self):
        """P basis vectors are orthonormal up to a factor 2."""
        basis = np.column_stack([p.amplitudes for p in doubles.p_basis()])
        self.assertTrue(np.max(np.abs(basis.T @ basis - 2 * np.eye(7))) == 0)

    def test_5(self):
        with self.assertRaises(errors.UnsupportedCaseError):
            doubles.subspace_membership(tensor.AntisymTensor(3, 7))
        with self.assertRaises(errors.StateError):
            doubles.subspace_membership(tensor.AntisymTensor(4, 8))


if __name__ == '__main__':

    rng = np.random.default_rng(0)
    for pattern in (doubles.FOCK_PATTERN, doubles.MIXED_PATTERN):
        params = doubles.random_closed_orbit_params(rng, pattern)
        state = doubles.t2_state_48(doubles.closed_orbit_doubles(params))
        residual, _ = doubles.subspace_membership(state)
        print(f"pattern {pattern}: residual {residual:.3e}")

    unittest.main()
