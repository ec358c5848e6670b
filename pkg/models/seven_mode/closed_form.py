"""Closed forms for J and for the covariants N, L in CC coordinates with
vanishing singles (Y = V = 0)."""
import numpy as np
from typing import Tuple

import models.cluster.coordinates as coords
import models.cluster.dictionary as dictionary
import models.six_mode.covariants as six_covariants
import numerical_methods.multilinear.matrix3 as matrix3
import numerical_methods.multilinear.pfaffian as pfaffian
import numerical_methods.multilinear.tensor as tensor
import numerical_methods.oracle.fock as fock
import utils.config as config
import utils.errors as errors
import utils.global_types as global_types


def require_singles_free(cc: coords.SevenModeCC):
    if not cc.is_singles_free():
        raise errors.PreconditionError(
            "Closed forms need Y = V = 0; remove singles first.")


def g_matrix(cc: coords.SevenModeCC) -> np.ndarray:
    """G = (Z X + X^T Z^T) / 2."""
    zx = cc.z @ cc.x
    return (zx + zx.T) / 2


def invariant_j_cc(cc: coords.SevenModeCC) -> complex:
    """J = -Det G - Det(U X + xi Z^T) / (4 xi), expanded so that the
    division by xi disappears (Det U X = 0):
    J = -Det G - [Tr((UX)^# Z^T) + xi Tr(UX (Z^T)^#) + xi^2 Det Z] / 4.
    """
    require_singles_free(cc)
    ux = cc.u_matrix @ cc.x
    zt = cc.z.T
    bracket = np.trace(matrix3.adjugate(ux) @ zt) \
        + cc.xi * np.trace(ux @ matrix3.adjugate(zt)) \
        + cc.xi ** 2 * matrix3.det3(zt)
    return complex(-matrix3.det3(g_matrix(cc)) - bracket / 4)


def invariant_j_cc_literal(cc: coords.SevenModeCC) -> complex:
    """Unexpanded form; only meaningful for xi away from 0."""
    require_singles_free(cc)
    if cc.xi == 0:
        raise errors.PreconditionError("Literal form divides by xi.")
    return complex(-matrix3.det3(g_matrix(cc))
                   - matrix3.det3(cc.u_matrix @ cc.x + cc.xi * cc.z.T)
                   / (4 * cc.xi))


def invariant_j_alt(cc: coords.SevenModeCC) -> complex:
    """J = w^T G w - u^T H u / 4 - Det Z (xi^2 + 4 Det X) / 4
    - xi Tr(U X (Z^T)^#) / 4 with w the vector of the antisymmetric part
    of Z X and H the symmetric part of Z^T X^#."""
    require_singles_free(cc)
    zx = cc.z @ cc.x
    w = matrix3.vector_from_antisym((zx - zx.T) / 2)
    zx_sharp = cc.z.T @ matrix3.adjugate(cc.x)
    h = (zx_sharp + zx_sharp.T) / 2
    u = cc.u
    return complex(w @ g_matrix(cc) @ w
                   - u @ h @ u / 4
                   - matrix3.det3(cc.z)
                   * (cc.xi ** 2 + 4 * matrix3.det3(cc.x)) / 4
                   - cc.xi * np.trace(cc.u_matrix @ cc.x
                                      @ matrix3.adjugate(cc.z.T)) / 4)


def nl_from_cc(cc: coords.SevenModeCC) -> Tuple[np.ndarray, np.ndarray]:
    """N and L assembled block by block from (xi, X, Z, U).

    Index layout: occupied 0..2 (i, j), virtual 3..5 (a, b), extra 6.
    """
    require_singles_free(cc)
    eps = tensor.levi_civita_tensor(3)
    x, z, xi = cc.x, cc.z, cc.xi
    u_mat, u = cc.u_matrix, cc.u
    zx = z @ x
    zt_sharp = matrix3.adjugate(z.T)
    x_zt_sharp = x @ zt_sharp
    zt_x_sharp = z.T @ matrix3.adjugate(x)
    ux = u_mat @ x
    zu = z @ u
    eps_zx = np.einsum("ijk,jk->i", eps, zx)

    n = np.zeros((7, 7), dtype=complex)
    n[:3, :3] = 3 * (zx + zx.T)
    n[3:6, 3:6] = -3 * (zt_x_sharp + zt_x_sharp.T)
    n[6, 6] = -6 * matrix3.det3(z)
    n[3:6, :3] = 3 * (ux + xi * z.T)
    n[:3, 3:6] = n[3:6, :3].T
    n[:3, 6] = n[6, :3] = 3 * zu
    n[3:6, 6] = n[6, 3:6] = -3 * np.einsum("abc,bc->a", eps, x_zt_sharp)

    l_matrix = np.zeros((7, 7), dtype=complex)
    zx_sharp = matrix3.adjugate(zx)
    l_matrix[:3, :3] = -6 * (zx_sharp + zx_sharp.T) \
        - 3 * (np.einsum("ikl,jmn,km,ln->ij", eps, eps, zx, zx.T)
               + np.einsum("ikl,jmn,km,ln->ij", eps, eps, zx.T, zx))
    l_matrix[3:6, 3:6] = 12 * (x_zt_sharp + x_zt_sharp.T) + 6 * np.outer(u, u)
    l_matrix[6, 6] = 6 * (xi ** 2 + 4 * matrix3.det3(x))
    l_matrix[3:6, :3] = 12 * np.einsum("ijk,aj,k->ai", eps, x, zu) \
        + 6 * np.outer(u, eps_zx) - 12 * xi * matrix3.adjugate(z)
    l_matrix[:3, 3:6] = l_matrix[3:6, :3].T
    l_matrix[:3, 6] = l_matrix[6, :3] = \
        6 * xi * eps_zx - 6 * np.einsum("ijk,ab,aj,bk->i", eps, u_mat, x, x)
    l_matrix[3:6, 6] = l_matrix[6, 3:6] = \
        -6 * xi * u + 12 * np.einsum("abc,bc->a", eps, zt_x_sharp)
    return n, l_matrix


def omega_matrix(cc: coords.SevenModeCC) -> np.ndarray:
    """6x6 antisymmetric omega with blocks E = V, D = Z, F = U."""
    omega = np.zeros((6, 6), dtype=complex)
    omega[:3, :3] = cc.v_matrix
    omega[:3, 3:] = cc.z
    omega[3:, :3] = -cc.z.T
    omega[3:, 3:] = cc.u_matrix
    return omega


def omega_annihilates(cc: coords.SevenModeCC,
                      tol: config.Tolerance = config.DEFAULT_TOLERANCE) \
        -> bool:
    """Whether omega^ = (1/2) omega^{mu nu} n_nu n_mu annihilates the
    six-mode part psi (as a state in seven modes). Evaluated in Fock
    space."""
    psi = coords.tensor_from_ci6(dictionary.ci6_from_cc6(cc.six_mode))
    v = fock.fock_from_tensor(psi)
    omega = omega_matrix(cc)
    result = fock.FockVector(psi.n_modes)
    annihilate = global_types.FermionOp.ANNIHILATE
    for mu in range(6):
        for nu in range(mu + 1, 6):
            if omega[mu, nu] != 0:
                term = fock.apply_mode_op(
                    fock.apply_mode_op(v, annihilate, mu), annihilate, nu)
                result = result + complex(omega[mu, nu]) * term
    scale = max(1.0, psi.max_abs()) * max(1.0, np.max(np.abs(omega)))
    return result.is_zero(tol.tau * scale)


def factorization_residual(cc: coords.SevenModeCC) -> float:
    """|J - Pf(omega) D(psi) / 4| in the regime Y = V = U = 0 with Z X
    symmetric."""
    require_singles_free(cc)
    zx = cc.z @ cc.x
    scale = max(1.0, float(np.max(np.abs(zx))))
    if np.any(cc.u_matrix) \
            or np.max(np.abs(zx - zx.T)) > config.DEFAULT_TAU * scale:
        raise errors.PreconditionError(
            "Factorization needs U = 0 and Z X symmetric.")
    j = invariant_j_cc(cc)
    pf = pfaffian.pfaffian6(omega_matrix(cc))
    d = six_covariants.quartic_d_cc(cc.six_mode)
    return float(abs(j - pf * d / 4))
