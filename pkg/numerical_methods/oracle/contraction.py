import itertools
import numpy as np

import numerical_methods.multilinear.tensor as tensor
import utils.errors as errors
import utils.global_types as global_types


def _brute_k(psi: np.ndarray) -> np.ndarray:
    """K^mu_nu = (1/12) eps^{mu r1..r5} psi_{nu r1 r2} psi_{r3 r4 r5};
    the free lower index nu is kept as an array axis."""
    k = np.zeros((6, 6), dtype=complex)
    for mu in range(6):
        rest = [r for r in range(6) if r != mu]
        for perm in itertools.permutations(rest):
            sign = tensor.levi_civita((mu,) + perm)
            k[mu, :] += sign * psi[:, perm[0], perm[1]] \
                * psi[perm[2], perm[3], perm[4]]
    return k / 12


def _brute_m(psi: np.ndarray) -> np.ndarray:
    """(M^I)^J_K = (1/12) eps^{I J A1..A5} Psi_{K A1 A2} Psi_{A3 A4 A5}."""
    m = np.zeros((7, 7, 7), dtype=complex)
    for i, j in itertools.permutations(range(7), 2):
        rest = [r for r in range(7) if r not in (i, j)]
        for perm in itertools.permutations(rest):
            sign = tensor.levi_civita((i, j) + perm)
            m[i, j, :] += sign * psi[:, perm[0], perm[1]] \
                * psi[perm[2], perm[3], perm[4]]
    return m / 12


def _brute_n(psi: np.ndarray) -> np.ndarray:
    """N_IJ = (1/24) eps^{A1..A7} Psi_{I A1 A2} Psi_{J A3 A4}
    Psi_{A5 A6 A7}."""
    n = np.zeros((7, 7), dtype=complex)
    for perm in itertools.permutations(range(7)):
        sign = tensor.levi_civita(perm)
        n += sign * np.outer(psi[:, perm[0], perm[1]],
                             psi[:, perm[2], perm[3]]) \
            * psi[perm[4], perm[5], perm[6]]
    return n / 24


def _brute_l(m: np.ndarray) -> np.ndarray:
    """L^IJ = (M^I)^{A1}_{A2} (M^J)^{A2}_{A1}, summed term by term."""
    size = m.shape[0]
    l_matrix = np.zeros((size, size), dtype=complex)
    for i, j in itertools.product(range(size), repeat=2):
        total = 0j
        for a1, a2 in itertools.product(range(size), repeat=2):
            total += m[i, a1, a2] * m[j, a2, a1]
        l_matrix[i, j] = total
    return l_matrix


def brute_covariant(t: tensor.AntisymTensor,
                    which: global_types.Covariant) -> np.ndarray:
    """Covariant by direct summation over Levi-Civita index assignments,
    repeated indices skipped. K needs 3 fermions in 6 modes, M, N and L
    need 3 fermions in 7 modes."""
    if which is global_types.Covariant.K:
        expected = (3, 6)
    else:
        expected = (3, 7)
    if (t.n_fermions, t.n_modes) != expected:
        raise errors.UnsupportedCaseError(
            f"Covariant {which.name} is defined for {expected}, "
            f"got ({t.n_fermions}, {t.n_modes}).")
    psi = t.dense()
    if which is global_types.Covariant.K:
        return _brute_k(psi)
    if which is global_types.Covariant.N:
        return _brute_n(psi)
    m = _brute_m(psi)
    if which is global_types.Covariant.M:
        return m
    return _brute_l(m)
