import numpy as np
from scipy import linalg
from typing import Tuple

import numerical_methods.multilinear.tensor as tensor
import utils.errors as errors

# Tr(N L) = J * 2^4 * 3^2 * 7
J_NORMALIZATION = 1008


def _check(t: tensor.AntisymTensor):
    if (t.n_fermions, t.n_modes) != (3, 7):
        raise errors.UnsupportedCaseError(
            f"Seven-mode covariants need (3, 7), got "
            f"({t.n_fermions}, {t.n_modes}).")


def covariants7(t: tensor.AntisymTensor) \
        -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(M, N, L) with
        (M^I)^J_K = (1/12) eps^{I J A1..A5} Psi_{K A1 A2} Psi_{A3 A4 A5},
        N_IJ = (1/24) eps^{A1..A7} Psi_{I A1 A2} Psi_{J A3 A4} Psi_{A5 A6 A7},
        L^IJ = (M^I)^{A1}_{A2} (M^J)^{A2}_{A1}.
    N and L are symmetrized.
    """
    _check(t)
    psi = t.dense()
    eps = tensor.levi_civita_tensor(7)
    partial = np.tensordot(eps, psi, axes=([4, 5, 6], [0, 1, 2]))
    m = np.einsum("ijab,kab->ijk", partial, psi) / 12
    n = np.einsum("iab,jcd,abcd->ij", psi, psi, partial, optimize=True) / 24
    l_matrix = np.einsum("iab,jba->ij", m, m)
    return m, (n + n.T) / 2, (l_matrix + l_matrix.T) / 2


def invariant_j(t: tensor.AntisymTensor) -> complex:
    """J = Tr(N L) / 1008."""
    _, n, l_matrix = covariants7(t)
    return j_from_covariants(n, l_matrix)


def j_from_covariants(n: np.ndarray,
                      l_matrix: np.ndarray) -> complex:
    return complex(np.sum(n * l_matrix) / J_NORMALIZATION)


def b_matrix(n: np.ndarray) -> np.ndarray:
    """B = -N / 6."""
    return -n / 6


def j_cube_residual(j: complex,
                    n: np.ndarray) -> float:
    """|J^3 - Det B|, compared on cubes to stay clear of cube-root
    branches."""
    return float(abs(j ** 3 - linalg.det(b_matrix(n))))
