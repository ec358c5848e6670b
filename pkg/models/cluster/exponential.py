import itertools
import numpy as np
from typing import Optional, Tuple

import models.cluster.coordinates as coords
import numerical_methods.multilinear.tensor as tensor
import numerical_methods.oracle.fock as fock


def _doubles(x: np.ndarray) -> np.ndarray:
    """T[b, c, j, k] = eps_abc eps^ijk X[a, i] over the virtual triple."""
    eps = tensor.levi_civita_tensor(3)
    return np.einsum("abc,ijk,ai->bcjk", eps, eps, x)


def cluster_operators6(cc: coords.SixModeCC,
                       split: Optional[coords.ModeSplit] = None) \
        -> Tuple[fock.ClusterOperator, ...]:
    """(T1, T2, T3) as sums of pair products p^a n_i p^b n_j ..:
    T1 = Y[i, a] p^a n_i, T2 over a<b, i<j with the doubles of X,
    T3 = xi p^1bar n_1 p^2bar n_2 p^3bar n_3."""
    split = split or coords.ModeSplit.standard(3, 6)
    occ, virt = split.occupied, split.virtual
    n_modes = split.n_modes
    t1 = fock.ClusterOperator.from_pairs(
        n_modes, occ, [(cc.y[i, a], (virt[a],), (occ[i],))
                       for i, a in np.ndindex(3, 3)])
    doubles = _doubles(cc.x)
    t2 = fock.ClusterOperator.from_pairs(
        n_modes, occ, [(doubles[a, b, i, j], (virt[a], virt[b]),
                        (occ[i], occ[j]))
                       for a, b in itertools.combinations(range(3), 2)
                       for i, j in itertools.combinations(range(3), 2)])
    t3 = fock.ClusterOperator.from_pairs(
        n_modes, occ, [(cc.xi, virt[:3], occ)])
    return t1, t2, t3


def cluster_operators7(cc: coords.SevenModeCC,
                       split: Optional[coords.ModeSplit] = None) \
        -> Tuple[fock.ClusterOperator, ...]:
    """Seven-mode cluster operators. Beyond the six-mode terms: singles
    v^i into the extra mode, doubles eps^ijk Z[k, a] on (a, 7) pairs and
    triples U[a, b] on (a, b, 7)."""
    split = split or coords.ModeSplit.standard(3, 7)
    occ, virt = split.occupied, split.virtual
    extra = virt[3]
    n_modes = split.n_modes
    t1, t2, t3 = cluster_operators6(cc.six_mode, split)
    v = cc.v
    eps = tensor.levi_civita_tensor(3)
    z_doubles = np.einsum("ijk,ka->aij", eps, cc.z)
    t1 = t1 + fock.ClusterOperator.from_pairs(
        n_modes, occ, [(v[i], (extra,), (occ[i],)) for i in range(3)])
    t2 = t2 + fock.ClusterOperator.from_pairs(
        n_modes, occ, [(z_doubles[a, i, j], (virt[a], extra),
                        (occ[i], occ[j]))
                       for a in range(3)
                       for i, j in itertools.combinations(range(3), 2)])
    t3 = t3 + fock.ClusterOperator.from_pairs(
        n_modes, occ, [(cc.u_matrix[a, b], (virt[a], virt[b], extra), occ)
                       for a, b in itertools.combinations(range(3), 2)])
    return t1, t2, t3


def cluster_operators(cc: (coords.SixModeCC, coords.SevenModeCC),
                      split: Optional[coords.ModeSplit] = None) \
        -> Tuple[fock.ClusterOperator, ...]:
    if isinstance(cc, coords.SevenModeCC):
        return cluster_operators7(cc, split)
    return cluster_operators6(cc, split)


def cc_exponential_state(cc: (coords.SixModeCC, coords.SevenModeCC),
                         split: Optional[coords.ModeSplit] = None) \
        -> tensor.AntisymTensor:
    """e^{T1 + T2 + T3} applied to the reference determinant, evaluated
    in Fock space."""
    t1, t2, t3 = cluster_operators(cc, split)
    reference = fock.FockVector.slater(t1.n_modes, sorted(t1.occupied))
    state = fock.exp_cluster(reference, t1 + t2 + t3)
    return fock.tensor_from_fock(state, 3)
