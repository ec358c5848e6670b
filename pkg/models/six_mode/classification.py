import logging
import numpy as np
from dataclasses import dataclass
from typing import Tuple

import models.cluster.coordinates as coords
import models.six_mode.covariants as covariants
import models.system as system
import numerical_methods.multilinear.matrix3 as matrix3
import numerical_methods.multilinear.tensor as tensor
import utils.config as config
import utils.global_types as global_types

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SixClassReport:
    label: global_types.SixModeClass
    d: complex
    dual_norm: float
    k_norm: float
    q_norms: Tuple[float, float, float]
    scale: float
    tol: config.Tolerance


def _max_abs(*arrays) -> float:
    return max(float(np.max(np.abs(np.asarray(a)), initial=0.0))
               for a in arrays)


def _ladder(d: complex,
            dual_norm: float,
            k_norm: float,
            scale: float,
            tau: float) -> global_types.SixModeClass:
    if abs(d) > tau * scale ** 4:
        return global_types.SixModeClass.GHZ
    if dual_norm > tau * scale ** 3:
        return global_types.SixModeClass.W
    if k_norm > tau * scale ** 2:
        return global_types.SixModeClass.BISEP
    if scale > tau:
        return global_types.SixModeClass.SEP
    return global_types.SixModeClass.NULL


def classify6(t: tensor.AntisymTensor,
              tol: config.Tolerance = config.DEFAULT_TOLERANCE) \
        -> SixClassReport:
    """Orbit ladder GHZ > W > BISEP > SEP > NULL decided by D, the dual
    state and K, each against tau * scale ** degree."""
    scale = t.max_abs()
    k = covariants.covariant_k(t)
    d = complex(np.trace(k @ k) / 6)
    ci = coords.ci6_from_tensor(t)
    dual = covariants.dual_state(ci)
    dual_norm = _max_abs(dual.as_array())
    q_norms = tuple(_max_abs(q) for q in covariants.q_polynomials(ci))
    k_norm = _max_abs(k)
    label = _ladder(d, dual_norm, k_norm, scale, tol.tau)
    logger.debug("classify6: D=%s |dual|=%.3e |K|=%.3e scale=%.3e -> %s",
                 d, dual_norm, k_norm, scale, label.name)
    return SixClassReport(label, d, dual_norm, k_norm, q_norms, scale, tol)


def classify6_cc(cc: coords.SixModeCC,
                 tol: config.Tolerance = config.DEFAULT_TOLERANCE) \
        -> global_types.SixModeClass:
    """Class from the CC coordinates alone; Y plays no role. The
    reduced dual state is (xi, -xi X, -2 X^#, -xi^2 - 2 Det X) and the
    reduced quadratic polynomials are (xi I, X^#, -X)."""
    x, xi = cc.x, cc.xi
    scale = max(1.0, abs(xi), _max_abs(x))
    x_sharp = matrix3.adjugate(x)
    det_x = matrix3.det3(x)
    d = xi ** 2 + 4 * det_x
    dual_norm = _max_abs(xi, xi * x, 2 * x_sharp, xi ** 2 + 2 * det_x)
    k_norm = _max_abs(xi, x_sharp, x)
    return _ladder(d, dual_norm, k_norm, scale, tol.tau)


class SixModeState(system.FermionSystem):
    """Three fermions in six modes."""

    n_modes = 6

    def __init__(self,
                 state: tensor.AntisymTensor,
                 tol: config.Tolerance = config.DEFAULT_TOLERANCE):
        super().__init__(state, tol)
        self._k = None
        self._report = None

    @property
    def system_name(self) -> global_types.SystemName:
        return global_types.SystemName.THREE_IN_SIX

    @property
    def covariant_k(self) -> np.ndarray:
        if self._k is None:
            self._k = covariants.covariant_k(self.state)
        return self._k

    def invariant(self) -> complex:
        """Quartic invariant D."""
        return complex(np.trace(self.covariant_k @ self.covariant_k) / 6)

    def dual(self) -> tensor.AntisymTensor:
        return covariants.dual_tensor(self.state)

    def classify(self) -> SixClassReport:
        if self._report is None:
            self._report = classify6(self.state, self.tol)
        return self._report
