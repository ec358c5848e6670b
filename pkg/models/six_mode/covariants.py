import numpy as np
from typing import Tuple

import models.cluster.coordinates as coords
import numerical_methods.multilinear.matrix3 as matrix3
import numerical_methods.multilinear.tensor as tensor
import utils.errors as errors


def _check(t: tensor.AntisymTensor):
    if (t.n_fermions, t.n_modes) != (3, 6):
        raise errors.UnsupportedCaseError(
            f"Six-mode covariants need (3, 6), got "
            f"({t.n_fermions}, {t.n_modes}).")


def covariant_k(t: tensor.AntisymTensor) -> np.ndarray:
    """K^mu_nu = (1/12) eps^{mu r1..r5} psi_{nu r1 r2} psi_{r3 r4 r5},
    returned as K[mu, nu]."""
    _check(t)
    psi = t.dense()
    eps = tensor.levi_civita_tensor(6)
    partial = np.tensordot(eps, psi, axes=([3, 4, 5], [0, 1, 2]))
    return np.einsum("mab,nab->mn", partial, psi) / 12


def quartic_d(t: tensor.AntisymTensor) -> complex:
    """D = Tr(K^2) / 6."""
    k = covariant_k(t)
    return complex(np.trace(k @ k) / 6)


def quartic_d_ci(ci: coords.SixModeCI) -> complex:
    """D = 4 [kappa^2 - Tr(A^# B^#) + alpha Det A + beta Det B] with
    2 kappa = alpha beta - Tr(A B)."""
    kappa = (ci.alpha * ci.beta - np.trace(ci.a @ ci.b)) / 2
    return complex(4 * (kappa ** 2
                        - np.trace(matrix3.adjugate(ci.a)
                                   @ matrix3.adjugate(ci.b))
                        + ci.alpha * matrix3.det3(ci.a)
                        + ci.beta * matrix3.det3(ci.b)))


def quartic_d_cc(cc: coords.SixModeCC) -> complex:
    """D = xi^2 + 4 Det X; Y drops out."""
    return complex(cc.xi ** 2 + 4 * matrix3.det3(cc.x))


def dual_state(ci: coords.SixModeCI) -> coords.SixModeCI:
    """Cubic dual state in CI coordinates. alpha need not be 1."""
    kappa = (ci.alpha * ci.beta - np.trace(ci.a @ ci.b)) / 2
    a_sharp = matrix3.adjugate(ci.a)
    b_sharp = matrix3.adjugate(ci.b)
    alpha = 2 * ci.alpha * kappa + 2 * matrix3.det3(ci.b)
    a = 2 * (ci.beta * b_sharp - 2 * matrix3.cross(ci.b, a_sharp)) \
        - 2 * kappa * ci.a
    beta = -2 * ci.beta * kappa - 2 * matrix3.det3(ci.a)
    b = -2 * (ci.alpha * a_sharp - 2 * matrix3.cross(ci.a, b_sharp)) \
        + 2 * kappa * ci.b
    return coords.SixModeCI(alpha, a, b, beta)


def dual_tensor(t: tensor.AntisymTensor) -> tensor.AntisymTensor:
    _check(t)
    return coords.tensor_from_ci6(dual_state(coords.ci6_from_tensor(t)))


def k_action(k: np.ndarray,
             t: tensor.AntisymTensor) -> tensor.AntisymTensor:
    """K acting as a derivation on the lower indices of psi."""
    psi = t.dense()
    dense = np.einsum("lm,lnr->mnr", k, psi) \
        + np.einsum("ln,mlr->mnr", k, psi) \
        + np.einsum("lr,mnl->mnr", k, psi)
    return tensor.AntisymTensor.from_dense(dense)


def q_polynomials(ci: coords.SixModeCI) \
        -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Quadratic polynomials vanishing exactly when K does:
    Q1 = alpha beta I - A B, Q2 = A^# - beta B, Q3 = B^# - alpha A."""
    q1 = ci.alpha * ci.beta * np.eye(3) - ci.a @ ci.b
    q2 = matrix3.adjugate(ci.a) - ci.beta * ci.b
    q3 = matrix3.adjugate(ci.b) - ci.alpha * ci.a
    return q1, q2, q3
