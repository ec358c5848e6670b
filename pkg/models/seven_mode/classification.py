import logging
import numpy as np
from dataclasses import dataclass
from scipy import linalg
from typing import Optional, Tuple

import models.seven_mode.covariants as covariants
import models.six_mode.classification as six_classification
import models.system as system
import numerical_methods.multilinear.tensor as tensor
import utils.config as config
import utils.global_types as global_types
import utils.misc as misc

logger = logging.getLogger(__name__)

_BY_RANK = {
    4: global_types.SevenModeClass.IX,
    2: global_types.SevenModeClass.VIII,
    1: global_types.SevenModeClass.VI_OR_VII,
}


@dataclass(frozen=True)
class SevenClassReport:
    label: global_types.SevenModeClass
    j: complex
    rank_n: int
    singular_values: np.ndarray
    b_eigenvalues: np.ndarray
    ambiguous: bool
    scale: float
    tol: config.Tolerance
    delegated: Optional[six_classification.SixClassReport] = None


def classify7_from_invariants(j: complex,
                              n: np.ndarray,
                              scale: float,
                              tol: config.Tolerance = config.DEFAULT_TOLERANCE) \
        -> Tuple[global_types.SevenModeClass, int, np.ndarray]:
    """Label from J and the rank of N alone. Rank 0 comes back as
    I_TO_V; telling rows I..V apart needs the state itself."""
    rank, sv = misc.numerical_rank(n, tol.rank, tol.tau * scale ** 3)
    if sv.size and sv[0] > 0:
        nearest = np.min(np.abs(np.log10(sv[sv > 0] / (tol.rank * sv[0]))))
        if nearest < np.log10(config.AMBIGUITY_BAND):
            logger.warning("Rank of N decided within a factor %.0e of the "
                           "cut.", config.AMBIGUITY_BAND)
    # Det B = J^3: full rank N means J != 0 even when |J| is below the
    # degree-7 threshold.
    if rank == 7:
        return global_types.SevenModeClass.X, rank, sv
    if abs(j) > tol.tau * scale ** 7:
        logger.warning("J = %s is nonzero but rank(N) = %d.", j, rank)
        return global_types.SevenModeClass.X, rank, sv
    if rank == 0:
        return global_types.SevenModeClass.I_TO_V, rank, sv
    if rank in _BY_RANK:
        return _BY_RANK[rank], rank, sv
    # Ranks 3, 5 and 6 do not occur with J = 0.
    label = global_types.SevenModeClass.IX if rank > 4 \
        else global_types.SevenModeClass.VIII
    logger.warning("Unexpected rank(N) = %d with J = 0; reporting %s.",
                   rank, label.name)
    return label, rank, sv


def _idle_mode(t: tensor.AntisymTensor,
               tau: float) -> Optional[int]:
    """A mode no amplitude above tau involves, if any."""
    psi = np.abs(t.dense())
    for mode in range(t.n_modes):
        if np.max(psi[mode]) <= tau:
            return mode
    return None


def classify7(t: tensor.AntisymTensor,
              tol: config.Tolerance = config.DEFAULT_TOLERANCE) \
        -> SevenClassReport:
    """Class X when J is nonzero, else by rank(N): 4 IX, 2 VIII,
    1 VI-or-VII. Rank 0 states are handed to the six-mode ladder when a
    mode is idle in the given basis."""
    scale = t.max_abs()
    _, n, l_matrix = covariants.covariants7(t)
    j = covariants.j_from_covariants(n, l_matrix)
    label, rank, sv = classify7_from_invariants(j, n, scale, tol)
    b_eigenvalues = linalg.eigvals(covariants.b_matrix(n))
    delegated = None
    if label is global_types.SevenModeClass.I_TO_V:
        if scale <= tol.tau:
            label = global_types.SevenModeClass.I
        else:
            mode = _idle_mode(t, tol.tau * scale)
            if mode is not None:
                keep = [mu for mu in range(7) if mu != mode]
                delegated = six_classification.classify6(t.restrict(keep),
                                                         tol)
                label = global_types.SIX_TO_SEVEN[delegated.label]
    ambiguous = label in (global_types.SevenModeClass.VI_OR_VII,
                          global_types.SevenModeClass.I_TO_V)
    logger.debug("classify7: J=%s rank(N)=%d -> %s", j, rank, label.label)
    return SevenClassReport(label, j, rank, sv, b_eigenvalues, ambiguous,
                            scale, tol, delegated)


class SevenModeState(system.FermionSystem):
    """Three fermions in seven modes."""

    n_modes = 7

    def __init__(self,
                 state: tensor.AntisymTensor,
                 tol: config.Tolerance = config.DEFAULT_TOLERANCE):
        super().__init__(state, tol)
        self._covariants = None

    @property
    def system_name(self) -> global_types.SystemName:
        return global_types.SystemName.THREE_IN_SEVEN

    @property
    def covariants(self) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """(M, N, L)."""
        if self._covariants is None:
            self._covariants = covariants.covariants7(self.state)
        return self._covariants

    @property
    def b_matrix(self) -> np.ndarray:
        return covariants.b_matrix(self.covariants[1])

    def invariant(self) -> complex:
        """Septic invariant J."""
        _, n, l_matrix = self.covariants
        return covariants.j_from_covariants(n, l_matrix)

    def cube_residual(self) -> float:
        return covariants.j_cube_residual(self.invariant(),
                                          self.covariants[1])

    def classify(self) -> SevenClassReport:
        return classify7(self.state, self.tol)
