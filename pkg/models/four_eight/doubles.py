"""Doubles-only coupled-cluster states of four fermions in eight modes.

Occupied modes are 0..3 and virtual modes 4..7. Doubles amplitudes
T[a, b, i, j] use local indices: a, b count virtual modes (a = 0 is
mode 4) and i, j count occupied ones.
"""
import itertools
import logging
import numpy as np
from dataclasses import dataclass
from scipy import linalg
from typing import Dict, Optional, Sequence, Tuple

import numerical_methods.multilinear.tensor as tensor
import numerical_methods.oracle.fock as fock
import utils.errors as errors

logger = logging.getLogger(__name__)

N_FERMIONS = 4
N_MODES = 8
OCCUPIED = (0, 1, 2, 3)
VIRTUAL = (4, 5, 6, 7)

# Index pairs (a, b) with a < b in the storage order of the 6x6 block.
PAIRS = tuple(itertools.combinations(range(4), 2))
_PAIR_POSITION = {pair: pos for pos, pair in enumerate(PAIRS)}

# Sign patterns s of s1 a^2 + s2 b^2 + ... + s6 f^2 = 1; the quadruple
# coefficient of the Fock expansion follows FOCK_PATTERN.
FOCK_PATTERN = (1, 1, 1, 1, 1, 1)
MIXED_PATTERN = (1, 1, -1, -1, 1, 1)


def _complement(pair: Tuple[int, int]) -> Tuple[int, int]:
    return tuple(k for k in range(4) if k not in pair)


class DoublesAmplitudes48:
    """Doubles T_{ab}^{ij}, antisymmetric in (a, b) and in (i, j).

    Stored as a 6x6 matrix over the pairs a < b (rows) and i < j
    (columns); the full four-index array is generated on demand.
    """

    def __init__(self,
                 matrix: Optional[np.ndarray] = None):
        if matrix is None:
            matrix = np.zeros((6, 6), dtype=complex)
        matrix = np.array(matrix, dtype=complex)
        if matrix.shape != (6, 6):
            raise errors.StateError(
                f"Doubles block should be 6x6, got {matrix.shape}.")
        if not np.all(np.isfinite(matrix)):
            raise errors.StateError("Doubles should be finite.")
        matrix.setflags(write=False)
        self._matrix = matrix

    @classmethod
    def from_dict(cls,
                  values: Dict[Tuple[int, int, int, int], complex]) \
            -> "DoublesAmplitudes48":
        """Keys (a, b, i, j); the sign of sorting each pair is applied."""
        matrix = np.zeros((6, 6), dtype=complex)
        seen = set()
        for (a, b, i, j), value in values.items():
            virtual_pair, occupied_pair = tuple(sorted((a, b))), \
                tuple(sorted((i, j)))
            if virtual_pair not in _PAIR_POSITION \
                    or occupied_pair not in _PAIR_POSITION:
                raise errors.StateError(
                    f"Bad doubles index {(a, b, i, j)}.")
            key = (virtual_pair, occupied_pair)
            if key in seen:
                raise errors.StateError(
                    f"Doubles index {(a, b, i, j)} given twice.")
            seen.add(key)
            sign = tensor.levi_civita((a, b)) * tensor.levi_civita((i, j))
            matrix[_PAIR_POSITION[virtual_pair],
                   _PAIR_POSITION[occupied_pair]] = sign * value
        return cls(matrix)

    @classmethod
    def random(cls,
               rng: np.random.Generator) -> "DoublesAmplitudes48":
        return cls(rng.standard_normal((6, 6))
                   + 1j * rng.standard_normal((6, 6)))

    @property
    def matrix(self) -> np.ndarray:
        return self._matrix

    def __repr__(self):
        return "DoublesAmplitudes48 object"

    def full(self) -> np.ndarray:
        """T[a, b, i, j] with both antisymmetries."""
        t = np.zeros((4, 4, 4, 4), dtype=complex)
        for (a, b), row in zip(PAIRS, self._matrix):
            for (i, j), value in zip(PAIRS, row):
                t[a, b, i, j] = t[b, a, j, i] = value
                t[b, a, i, j] = t[a, b, j, i] = -value
        return t


@dataclass(frozen=True)
class ClosedOrbitParams:
    a: complex
    b: complex
    c: complex
    d: complex
    e: complex
    f: complex

    def as_array(self) -> np.ndarray:
        return np.array([self.a, self.b, self.c, self.d, self.e, self.f],
                        dtype=complex)

    def constraint_residual(self,
                            pattern: Sequence[int] = FOCK_PATTERN) \
            -> complex:
        return closed_orbit_constraint(self, pattern)


def closed_orbit_constraint(params: ClosedOrbitParams,
                            pattern: Sequence[int] = FOCK_PATTERN) \
        -> complex:
    """sum_k pattern[k] * params[k]^2 - 1."""
    return complex(np.sum(np.asarray(pattern) * params.as_array() ** 2) - 1)


def closed_orbit_doubles(params: ClosedOrbitParams) -> DoublesAmplitudes48:
    """T_{1b2b}^{12} = T_{3b4b}^{34} = a, T_{1b2b}^{34} = T_{3b4b}^{12} = b,
    T_{1b3b}^{13} = T_{2b4b}^{24} = c, T_{2b4b}^{13} = T_{1b3b}^{24} = d,
    T_{1b4b}^{14} = T_{2b3b}^{23} = e, T_{2b3b}^{14} = T_{1b4b}^{23} = f."""
    p = params
    return DoublesAmplitudes48.from_dict({
        (0, 1, 0, 1): p.a, (2, 3, 2, 3): p.a,
        (0, 1, 2, 3): p.b, (2, 3, 0, 1): p.b,
        (0, 2, 0, 2): p.c, (1, 3, 1, 3): p.c,
        (1, 3, 0, 2): p.d, (0, 2, 1, 3): p.d,
        (0, 3, 0, 3): p.e, (1, 2, 1, 2): p.e,
        (1, 2, 0, 3): p.f, (0, 3, 1, 2): p.f,
    })


def random_closed_orbit_params(rng: np.random.Generator,
                               pattern: Sequence[int] = FOCK_PATTERN) \
        -> ClosedOrbitParams:
    """Random complex (a..e); f solves the constraint for pattern."""
    values = rng.standard_normal(5) + 1j * rng.standard_normal(5)
    rest = 1 - np.sum(np.asarray(pattern[:5]) * values ** 2)
    f = np.sqrt(rest / pattern[5] + 0j)
    return ClosedOrbitParams(*values, f)


def t2_operator(doubles: DoublesAmplitudes48) -> fock.ClusterOperator:
    """T2 = sum over a < b, i < j of T_{ab}^{ij} p^a n_i p^b n_j."""
    terms = []
    for (a, b), row in zip(PAIRS, doubles.matrix):
        for (i, j), value in zip(PAIRS, row):
            terms.append((value, (VIRTUAL[a], VIRTUAL[b]),
                          (OCCUPIED[i], OCCUPIED[j])))
    return fock.ClusterOperator.from_pairs(N_MODES, OCCUPIED, terms)


def t2_state_48(doubles: DoublesAmplitudes48) -> tensor.AntisymTensor:
    """e^{T2} p^{1234}|0> evaluated in Fock space; the series stops at
    T2^2 / 2."""
    reference = fock.FockVector.slater(N_MODES, OCCUPIED)
    state = fock.exp_cluster(reference, t2_operator(doubles))
    return fock.tensor_from_fock(state, N_FERMIONS)


def quadruple_coefficient_formula(doubles: DoublesAmplitudes48) -> complex:
    """(1/4)(T_ab^12 T_cd^34 - T_ab^13 T_cd^24 + T_ab^14 T_cd^23) eps^abcd."""
    t = doubles.full()
    eps = tensor.levi_civita_tensor(4)
    total = 0j
    for (i, j), sign in (((0, 1), 1), ((0, 2), -1), ((0, 3), 1)):
        k, l = _complement((i, j))
        total += sign * np.einsum("abcd,ab,cd->", eps, t[:, :, i, j],
                                  t[:, :, k, l])
    return complex(total / 4)


def t2_state_48_formula(doubles: DoublesAmplitudes48) \
        -> tensor.AntisymTensor:
    """Reference + T2|ref> + T2^2/2 |ref> from the expanded formulas: the
    pair (i, j) is replaced by (a, b) with the sign of (k, l, i, j)."""
    values = {OCCUPIED: 1}
    for (a, b), row in zip(PAIRS, doubles.matrix):
        for (i, j), value in zip(PAIRS, row):
            k, l = _complement((i, j))
            values[(k, l, VIRTUAL[a], VIRTUAL[b])] = \
                tensor.levi_civita((k, l, i, j)) * value
    values[VIRTUAL] = quadruple_coefficient_formula(doubles)
    return tensor.AntisymTensor.from_dict(N_FERMIONS, N_MODES, values)


def p_basis() -> Tuple[tensor.AntisymTensor, ...]:
    """P1..P7 applied to the vacuum."""
    terms = [
        {(0, 1, 2, 3): 1, (4, 5, 6, 7): 1},
        {(0, 2, 4, 6): 1, (1, 3, 5, 7): 1},
        {(0, 1, 4, 5): 1, (2, 3, 6, 7): 1},
        {(0, 2, 5, 7): 1, (1, 3, 4, 6): 1},
        {(0, 3, 4, 7): 1, (1, 2, 5, 6): 1},
        {(0, 3, 5, 6): -1, (1, 2, 4, 7): -1},
        {(0, 1, 6, 7): -1, (2, 3, 4, 5): -1},
    ]
    return tuple(tensor.AntisymTensor.from_dict(N_FERMIONS, N_MODES, values)
                 for values in terms)


def expected_p_coordinates(params: ClosedOrbitParams) -> np.ndarray:
    """Coordinates of the closed-orbit state on P1..P7 when the constraint
    holds: (1, -d, b, -c, f, -e, -a)."""
    p = params
    return np.array([1, -p.d, p.b, -p.c, p.f, -p.e, -p.a], dtype=complex)


def subspace_membership(t: tensor.AntisymTensor) \
        -> Tuple[float, np.ndarray]:
    """Least-squares projection on span(P1..P7); returns the relative
    residual and the seven coordinates."""
    if (t.n_fermions, t.n_modes) != (N_FERMIONS, N_MODES):
        raise errors.UnsupportedCaseError(
            f"Subspace test needs (4, 8), got {(t.n_fermions, t.n_modes)}.")
    norm = t.norm()
    if norm == 0:
        raise errors.StateError("Zero state has no subspace projection.")
    basis = np.column_stack([p.amplitudes for p in p_basis()])
    coordinates, _, _, _ = linalg.lstsq(basis, t.amplitudes)
    residual = float(np.linalg.norm(t.amplitudes - basis @ coordinates)
                     / norm)
    logger.debug("P-subspace residual %.3e", residual)
    return residual, coordinates
