import logging
import numpy as np
from typing import Optional, Tuple

import models.cluster.coordinates as coords
import numerical_methods.multilinear.matrix3 as matrix3
import numerical_methods.multilinear.tensor as tensor
import utils.config as config
import utils.errors as errors

logger = logging.getLogger(__name__)


def suggest_reference(t: tensor.AntisymTensor) -> Tuple[int, ...]:
    """Mode order that moves the largest amplitude to the reference
    position (0, 1, .., n-1)."""
    position = int(np.argmax(np.abs(t.amplitudes)))
    best = t.index_tuples[position]
    return best + tuple(mu for mu in range(t.n_modes) if mu not in best)


def _check_reference(t: tensor.AntisymTensor,
                     split: coords.ModeSplit,
                     tol: config.Tolerance) -> complex:
    reference = t[split.occupied]
    if abs(reference) <= tol.tau * t.max_abs() or reference == 0:
        suggestion = suggest_reference(t) if t.max_abs() > 0 else None
        raise errors.ReferenceDeficientError(
            f"Reference amplitude psi_{split.occupied} vanishes.",
            suggestion)
    return reference


def normalize(t: tensor.AntisymTensor,
              split: Optional[coords.ModeSplit] = None,
              tol: config.Tolerance = config.DEFAULT_TOLERANCE) \
        -> Tuple[tensor.AntisymTensor, complex]:
    """Divide by the reference amplitude; returns (t / scale, scale)."""
    split = split or coords.ModeSplit.standard(t.n_fermions, t.n_modes)
    scale = _check_reference(t, split, tol)
    if scale != 1:
        logger.warning("Rescaling state by reference amplitude %s.", scale)
    return t / scale, scale


def _single_excitation(split: coords.ModeSplit,
                       position: int,
                       virtual: int) -> Tuple[int, ...]:
    occupied = list(split.occupied)
    occupied[position] = virtual
    return tuple(occupied)


def singles_matrix(t: tensor.AntisymTensor,
                   split: Optional[coords.ModeSplit] = None,
                   tol: config.Tolerance = config.DEFAULT_TOLERANCE) \
        -> np.ndarray:
    """Y[i, a]: amplitude of the reference with occupied mode i replaced
    by virtual mode a, divided by the reference amplitude."""
    split = split or coords.ModeSplit.standard(t.n_fermions, t.n_modes)
    reference = _check_reference(t, split, tol)
    y = np.zeros((len(split.occupied), len(split.virtual)), dtype=complex)
    for i, k in np.ndindex(*y.shape):
        y[i, k] = t[_single_excitation(split, i, split.virtual[k])]
    return y / reference


def triangular_slocc(lam: np.ndarray,
                     split: coords.ModeSplit) -> tensor.SloccMatrix:
    """S = I with S[virtual a, occupied i] = lam[i, a]; det S = 1."""
    lam = np.asarray(lam, dtype=complex)
    s = np.eye(split.n_modes, dtype=complex)
    for i, k in np.ndindex(*lam.shape):
        s[split.virtual[k], split.occupied[i]] = lam[i, k]
    return tensor.SloccMatrix(s)


def triangular_transform(ci: coords.SixModeCI,
                         lam: np.ndarray) -> coords.SixModeCI:
    """Closed form of slocc_apply(t, triangular_slocc(lam)) on six-mode
    CI coordinates:
        B' = B + alpha L, A' = A + 2 B x L + alpha L^#,
        beta' = beta + Tr(A L) + Tr(B L^#) + alpha Det L.
    """
    lam = np.asarray(lam, dtype=complex)
    lam_sharp = matrix3.adjugate(lam)
    b = ci.b + ci.alpha * lam
    a = ci.a + 2 * matrix3.cross(ci.b, lam) + ci.alpha * lam_sharp
    beta = ci.beta + np.trace(ci.a @ lam) + np.trace(ci.b @ lam_sharp) \
        + ci.alpha * matrix3.det3(lam)
    return coords.SixModeCI(ci.alpha, a, b, beta)


def remove_singles(t: tensor.AntisymTensor,
                   split: Optional[coords.ModeSplit] = None,
                   tol: config.Tolerance = config.DEFAULT_TOLERANCE) \
        -> Tuple[tensor.AntisymTensor, tensor.SloccMatrix]:
    """Unit triangular S removing the singles coordinates (Y, and V in
    seven modes). Returns (slocc_apply(t, S), S) with the singles
    amplitudes of the result set to zero exactly."""
    split = split or coords.ModeSplit.standard(t.n_fermions, t.n_modes)
    y = singles_matrix(t, split, tol)
    s = triangular_slocc(-y, split)
    transformed = tensor.slocc_apply(t, s)
    singles = {_single_excitation(split, i, split.virtual[k]): 0
               for i, k in np.ndindex(*y.shape)}
    residual = max(abs(transformed[idx]) for idx in singles)
    logger.debug("Singles residual zeroed after removal: %.3e", residual)
    return transformed.with_amplitudes(singles), s


def brueckner_state(y: np.ndarray) -> tensor.AntisymTensor:
    """e^{T1} p^{123}|0>: the Slater determinant of the orbitals
    e_i + Y[i, a] e_a."""
    y = np.asarray(y, dtype=complex)
    n_occupied, n_virtual = y.shape
    orbitals = np.hstack([np.eye(n_occupied), y])
    return tensor.wedge(*orbitals)
