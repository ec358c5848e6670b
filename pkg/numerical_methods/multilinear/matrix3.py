import numpy as np

import utils.errors as errors


def _check_3x3(m: np.ndarray):
    if m.shape != (3, 3):
        raise errors.StateError(f"Expected 3x3 matrix, got shape {m.shape}.")


def det3(m: np.ndarray) -> complex:
    """Determinant as the triple product of the rows."""
    m = np.asarray(m)
    _check_3x3(m)
    return complex(np.dot(m[0], np.cross(m[1], m[2])))


def adjugate(m: np.ndarray) -> np.ndarray:
    """Adjugate M^# with M M^# = M^# M = Det(M) I.

    The rows of the cofactor matrix are cross products of pairs of rows.
    """
    m = np.asarray(m)
    _check_3x3(m)
    cofactor = np.array([np.cross(m[1], m[2]),
                         np.cross(m[2], m[0]),
                         np.cross(m[0], m[1])])
    return cofactor.T


def cross(a: np.ndarray,
          b: np.ndarray) -> np.ndarray:
    """Polarization A x B = ((A + B)^# - A^# - B^#) / 2."""
    return (adjugate(a + b) - adjugate(a) - adjugate(b)) / 2


def det_sum_residual(a: np.ndarray,
                     b: np.ndarray) -> float:
    """|Det(A + B) - Det A - Tr(A^# B) - Tr(A B^#) - Det B|."""
    expansion = det3(a) + np.trace(adjugate(a) @ b) \
        + np.trace(a @ adjugate(b)) + det3(b)
    return float(abs(det3(a + b) - expansion))


def antisym_from_vector(v: np.ndarray) -> np.ndarray:
    """[v]_{ij} = eps_{ijk} v^k."""
    v = np.asarray(v)
    if v.shape != (3,):
        raise errors.StateError(f"Expected 3-vector, got shape {v.shape}.")
    zero = np.zeros((), dtype=v.dtype)
    return np.array([[zero, v[2], -v[1]],
                     [-v[2], zero, v[0]],
                     [v[1], -v[0], zero]])


def vector_from_antisym(m: np.ndarray) -> np.ndarray:
    """v^i = eps^{ijk} M_jk / 2; inverse of antisym_from_vector on
    antisymmetric input."""
    m = np.asarray(m)
    _check_3x3(m)
    return np.array([m[1, 2] - m[2, 1],
                     m[2, 0] - m[0, 2],
                     m[0, 1] - m[1, 0]]) / 2


def check_antisymmetric(m: np.ndarray,
                        tau: float,
                        name: str = "matrix") -> np.ndarray:
    """Return the antisymmetric part of m, raising StateError when m is
    not antisymmetric up to tau relative to its largest entry."""
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise errors.StateError(f"{name} should be square.")
    scale = max(1.0, float(np.max(np.abs(m), initial=0.0)))
    if np.max(np.abs(m + m.T), initial=0.0) > tau * scale:
        raise errors.StateError(f"{name} should be antisymmetric.")
    return (m - m.T) / 2
