import logging
import numpy as np

import models.cluster.coordinates as coords
import numerical_methods.multilinear.matrix3 as matrix3
import utils.errors as errors

logger = logging.getLogger(__name__)

# |alpha - 1| above this is not intermediate normalization.
NORMALIZATION_TOL = 1.0e-12


def _require_normalized(alpha: complex):
    if abs(alpha - 1) > NORMALIZATION_TOL:
        raise errors.NormalizationError(
            f"CI/CC dictionary needs alpha = 1, got {alpha}. "
            "Normalize the state by its reference amplitude first.")
    if alpha != 1:
        logger.debug("alpha differs from 1 by %.3e; treated as 1.",
                     abs(alpha - 1))


def cc6_from_ci6(ci: coords.SixModeCI) -> coords.SixModeCC:
    """Y = B, X = A - B^#, xi = beta - Det B - Tr(X B)."""
    _require_normalized(ci.alpha)
    x = ci.a - matrix3.adjugate(ci.b)
    xi = ci.beta - matrix3.det3(ci.b) - np.trace(x @ ci.b)
    return coords.SixModeCC(x, ci.b, xi)


def ci6_from_cc6(cc: coords.SixModeCC) -> coords.SixModeCI:
    """B = Y, A = Y^# + X, beta = Det Y + Tr(X Y) + xi."""
    beta = matrix3.det3(cc.y) + np.trace(cc.x @ cc.y) + cc.xi
    return coords.SixModeCI(1, matrix3.adjugate(cc.y) + cc.x, cc.y, beta)


def _yz_block(y: np.ndarray,
              z: np.ndarray) -> np.ndarray:
    m = y.T @ z
    return m - m.T


def cc7_from_ci7(ci: coords.SevenModeCI) -> coords.SevenModeCC:
    _require_normalized(ci.alpha)
    b_sharp = matrix3.adjugate(ci.b)
    x = ci.a - b_sharp
    z = ci.d - ci.e @ ci.b
    xi = ci.beta - np.trace(x @ ci.b) - matrix3.det3(ci.b)
    v = matrix3.vector_from_antisym(ci.e)
    u_matrix = ci.f - _yz_block(ci.b, z) \
        - matrix3.antisym_from_vector((x + b_sharp) @ v)
    return coords.SevenModeCC(x, ci.b, xi, z, ci.e, u_matrix)


def ci7_from_cc7(cc: coords.SevenModeCC) -> coords.SevenModeCI:
    """Seven-mode dictionary:
        B = Y, A = X + Y^#, beta = xi + Tr(X Y) + Det Y,
        D = Z + V Y, E = V, F = U + (Y^T Z - Z^T Y) + [(X + Y^#) v].
    """
    six = ci6_from_cc6(cc.six_mode)
    d = cc.z + cc.v_matrix @ cc.y
    f = f_block(cc)
    return coords.SevenModeCI(1, six.a, six.b, six.beta, d, cc.v_matrix, f)


def f_block(cc: coords.SevenModeCC) -> np.ndarray:
    return cc.u_matrix + _yz_block(cc.y, cc.z) \
        + matrix3.antisym_from_vector(
            (cc.x + matrix3.adjugate(cc.y)) @ cc.v)


def f_block_alternative_sign(cc: coords.SevenModeCC) -> np.ndarray:
    """F with the Z-Y term entering as Z^T Y - Y^T Z. Disagrees with the
    cluster exponential as soon as Y and Z are both nonzero; kept to
    document the sign choice."""
    return cc.u_matrix - _yz_block(cc.y, cc.z) \
        + matrix3.antisym_from_vector(
            (cc.x + matrix3.adjugate(cc.y)) @ cc.v)


def cc_from_ci(ci: (coords.SixModeCI, coords.SevenModeCI)) \
        -> (coords.SixModeCC, coords.SevenModeCC):
    if isinstance(ci, coords.SevenModeCI):
        return cc7_from_ci7(ci)
    return cc6_from_ci6(ci)


def ci_from_cc(cc: (coords.SixModeCC, coords.SevenModeCC)) \
        -> (coords.SixModeCI, coords.SevenModeCI):
    if isinstance(cc, coords.SevenModeCC):
        return ci7_from_cc7(cc)
    return ci6_from_cc6(cc)
