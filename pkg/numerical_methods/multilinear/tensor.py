import functools
import itertools
import logging
import numpy as np
from scipy import linalg
from scipy.special import comb
from typing import Dict, Iterator, Optional, Sequence, Tuple

import utils.config as config
import utils.errors as errors

logger = logging.getLogger(__name__)


def levi_civita(indices: Sequence[int]) -> int:
    """Sign of the permutation sorting indices; 0 on repeated indices."""
    indices = tuple(indices)
    if len(set(indices)) < len(indices):
        return 0
    inversions = sum(1 for a, b in itertools.combinations(indices, 2)
                     if a > b)
    return -1 if inversions % 2 else 1


@functools.lru_cache(maxsize=None)
def levi_civita_tensor(rank: int) -> np.ndarray:
    """Dense Levi-Civita symbol with rank indices running over rank
    values. Read-only, cached per rank."""
    eps = np.zeros((rank,) * rank)
    for perm in itertools.permutations(range(rank)):
        eps[perm] = levi_civita(perm)
    eps.setflags(write=False)
    return eps


@functools.lru_cache(maxsize=None)
def canonical_tuples(n_fermions: int,
                     n_modes: int) -> Tuple[Tuple[int, ...], ...]:
    """Strictly increasing index tuples in storage order."""
    return tuple(itertools.combinations(range(n_modes), n_fermions))


@functools.lru_cache(maxsize=None)
def _position_map(n_fermions: int,
                  n_modes: int) -> Dict[Tuple[int, ...], int]:
    tuples = canonical_tuples(n_fermions, n_modes)
    return {idx: pos for pos, idx in enumerate(tuples)}


class AntisymTensor:
    """Totally antisymmetric complex amplitude tensor of n fermions over
    N modes, i.e. the state (1/n!) psi_{mu1..mun} p^{mu1}..p^{mun}|0>.

    Only strictly increasing index tuples are stored, in the order of
    itertools.combinations(range(N), n). Mode indices are 0-based.
    Instances are immutable.
    """

    def __init__(self,
                 n_fermions: int,
                 n_modes: int,
                 amplitudes: Optional[np.ndarray] = None):
        if n_fermions < 1 or n_modes < n_fermions:
            raise errors.StateError(
                f"Invalid fermion/mode numbers ({n_fermions}, {n_modes}).")
        size = int(comb(n_modes, n_fermions, exact=True))
        if amplitudes is None:
            amplitudes = np.zeros(size, dtype=complex)
        else:
            amplitudes = np.array(amplitudes, dtype=complex).ravel()
        if amplitudes.size != size:
            raise errors.StateError(
                f"Expected {size} amplitudes for ({n_fermions}, {n_modes}), "
                f"got {amplitudes.size}.")
        if not np.all(np.isfinite(amplitudes)):
            raise errors.StateError("Amplitudes should be finite.")
        amplitudes.setflags(write=False)
        self._n_fermions = n_fermions
        self._n_modes = n_modes
        self._amplitudes = amplitudes
        self._dense = None

    @classmethod
    def from_dict(cls,
                  n_fermions: int,
                  n_modes: int,
                  values: Dict[Tuple[int, ...], complex]) \
            -> "AntisymTensor":
        """Build from {index tuple: amplitude}. Tuples may come in any
        order; the amplitude is then stored with the sign of the sorting
        permutation. Each index set may appear once."""
        positions = _position_map(n_fermions, n_modes)
        amplitudes = np.zeros(len(positions), dtype=complex)
        seen = set()
        for indices, value in values.items():
            indices = tuple(int(i) for i in indices)
            if len(indices) != n_fermions:
                raise errors.StateError(
                    f"Index tuple {indices} should have length {n_fermions}.")
            if any(i < 0 or i >= n_modes for i in indices):
                raise errors.StateError(
                    f"Index tuple {indices} out of range 0..{n_modes - 1}.")
            sign = levi_civita(indices)
            if sign == 0:
                raise errors.StateError(
                    f"Repeated index in tuple {indices}.")
            key = tuple(sorted(indices))
            if key in seen:
                raise errors.StateError(
                    f"Index set {key} given more than once.")
            seen.add(key)
            amplitudes[positions[key]] = sign * complex(value)
        return cls(n_fermions, n_modes, amplitudes)

    @classmethod
    def from_dense(cls,
                   dense: np.ndarray) -> "AntisymTensor":
        """Read the canonical components of a dense antisymmetric array.
        Antisymmetry is assumed, not checked."""
        n_fermions = dense.ndim
        n_modes = dense.shape[0]
        tuples = canonical_tuples(n_fermions, n_modes)
        amplitudes = np.array([dense[idx] for idx in tuples], dtype=complex)
        return cls(n_fermions, n_modes, amplitudes)

    @classmethod
    def basis(cls,
              n_modes: int,
              indices: Sequence[int],
              value: complex = 1) -> "AntisymTensor":
        """Single Slater determinant p^{i1}..p^{in}|0> (times value)."""
        return cls.from_dict(len(indices), n_modes, {tuple(indices): value})

    @property
    def n_fermions(self) -> int:
        return self._n_fermions

    @property
    def n_modes(self) -> int:
        return self._n_modes

    @property
    def amplitudes(self) -> np.ndarray:
        return self._amplitudes

    @property
    def index_tuples(self) -> Tuple[Tuple[int, ...], ...]:
        return canonical_tuples(self._n_fermions, self._n_modes)

    def __repr__(self):
        return f"AntisymTensor({self._n_fermions}, {self._n_modes}) object"

    def __getitem__(self,
                    indices: Sequence[int]) -> complex:
        sign = levi_civita(indices)
        if sign == 0:
            return 0j
        key = tuple(sorted(indices))
        return sign * self._amplitudes[
            _position_map(self._n_fermions, self._n_modes)[key]]

    def items(self,
              include_zero: bool = False) \
            -> Iterator[Tuple[Tuple[int, ...], complex]]:
        for idx, value in zip(self.index_tuples, self._amplitudes):
            if include_zero or value != 0:
                yield idx, complex(value)

    def dense(self) -> np.ndarray:
        """Full antisymmetric array of shape (N,) * n. Read-only, cached."""
        if self._dense is None:
            dense = np.zeros((self._n_modes,) * self._n_fermions,
                             dtype=complex)
            perms = [(p, levi_civita(p)) for p in
                     itertools.permutations(range(self._n_fermions))]
            for idx, value in self.items():
                for perm, sign in perms:
                    dense[tuple(idx[k] for k in perm)] = sign * value
            dense.setflags(write=False)
            self._dense = dense
        return self._dense

    def with_amplitudes(self,
                        values: Dict[Tuple[int, ...], complex]) \
            -> "AntisymTensor":
        """Copy with the given canonical amplitudes replaced."""
        positions = _position_map(self._n_fermions, self._n_modes)
        amplitudes = self._amplitudes.copy()
        for indices, value in values.items():
            sign = levi_civita(indices)
            if sign == 0:
                raise errors.StateError(f"Repeated index in tuple {indices}.")
            amplitudes[positions[tuple(sorted(indices))]] = sign * value
        return AntisymTensor(self._n_fermions, self._n_modes, amplitudes)

    def permute_modes(self,
                      order: Sequence[int]) -> "AntisymTensor":
        """Relabel modes so that new mode k is old mode order[k]."""
        order = tuple(order)
        if sorted(order) != list(range(self._n_modes)):
            raise errors.StateError(f"{order} is not a permutation.")
        dense = self.dense()
        for axis in range(self._n_fermions):
            dense = np.take(dense, order, axis=axis)
        return AntisymTensor.from_dense(dense)

    def restrict(self,
                 modes: Sequence[int]) -> "AntisymTensor":
        """Tensor on the sub-space spanned by modes (kept in the given
        order); amplitudes involving other modes are dropped."""
        dense = self.dense()[np.ix_(*([list(modes)] * self._n_fermions))]
        return AntisymTensor.from_dense(dense)

    def max_abs(self) -> float:
        return float(np.max(np.abs(self._amplitudes), initial=0.0))

    def norm(self) -> float:
        return float(np.linalg.norm(self._amplitudes))

    def _check_compatible(self,
                          other: "AntisymTensor"):
        if (self._n_fermions, self._n_modes) \
                != (other.n_fermions, other.n_modes):
            raise errors.StateError(
                "Tensors of different shape: "
                f"({self._n_fermions}, {self._n_modes}) and "
                f"({other.n_fermions}, {other.n_modes}).")

    def __add__(self,
                other: "AntisymTensor") -> "AntisymTensor":
        self._check_compatible(other)
        return AntisymTensor(self._n_fermions, self._n_modes,
                             self._amplitudes + other.amplitudes)

    def __sub__(self,
                other: "AntisymTensor") -> "AntisymTensor":
        self._check_compatible(other)
        return AntisymTensor(self._n_fermions, self._n_modes,
                             self._amplitudes - other.amplitudes)

    def __neg__(self) -> "AntisymTensor":
        return AntisymTensor(self._n_fermions, self._n_modes,
                             -self._amplitudes)

    def __mul__(self,
                scalar: complex) -> "AntisymTensor":
        return AntisymTensor(self._n_fermions, self._n_modes,
                             complex(scalar) * self._amplitudes)

    __rmul__ = __mul__

    def __truediv__(self,
                    scalar: complex) -> "AntisymTensor":
        return AntisymTensor(self._n_fermions, self._n_modes,
                             self._amplitudes / complex(scalar))

    def distance(self,
                 other: "AntisymTensor") -> float:
        """Largest absolute amplitude difference."""
        self._check_compatible(other)
        return float(np.max(np.abs(self._amplitudes - other.amplitudes),
                            initial=0.0))


def wedge(*vectors: np.ndarray) -> AntisymTensor:
    """Exterior product v1 ^ .. ^ vn of one-particle vectors, i.e. the
    Slater determinant p(v1)..p(vn)|0> with p(v) = v_mu p^mu."""
    rows = np.array(vectors, dtype=complex)
    n_fermions, n_modes = rows.shape
    amplitudes = [linalg.det(rows[:, idx])
                  for idx in canonical_tuples(n_fermions, n_modes)]
    return AntisymTensor(n_fermions, n_modes, np.array(amplitudes))


class SloccMatrix:
    """Invertible N x N complex matrix acting on every tensor index.

    The determinant is evaluated once; for triangular matrices it is the
    product of the diagonal, so unit triangular matrices have det 1
    exactly.
    """

    def __init__(self,
                 matrix: np.ndarray,
                 tol: config.Tolerance = config.DEFAULT_TOLERANCE):
        matrix = np.array(matrix, dtype=complex)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise errors.StateError(
                f"SLOCC matrix should be square, got shape {matrix.shape}.")
        if not np.all(np.isfinite(matrix)):
            raise errors.StateError("SLOCC matrix should be finite.")
        if np.all(np.tril(matrix, -1) == 0) \
                or np.all(np.triu(matrix, 1) == 0):
            det = complex(np.prod(np.diag(matrix)))
        else:
            det = complex(linalg.det(matrix))
        scale = np.max(np.abs(matrix))
        if abs(det) <= tol.inv * scale ** matrix.shape[0]:
            raise errors.StateError(
                f"SLOCC matrix is not invertible (|det| = {abs(det):.3e}).")
        matrix.setflags(write=False)
        self._matrix = matrix
        self._det = det

    @property
    def matrix(self) -> np.ndarray:
        return self._matrix

    @property
    def det(self) -> complex:
        return self._det

    @property
    def size(self) -> int:
        return self._matrix.shape[0]

    def __repr__(self):
        return f"SloccMatrix({self.size}) object"

    def __matmul__(self,
                   other: "SloccMatrix") -> "SloccMatrix":
        return SloccMatrix(self._matrix @ other.matrix)

    def inverse(self) -> "SloccMatrix":
        return SloccMatrix(linalg.inv(self._matrix))


def slocc_apply(t: AntisymTensor,
                s: SloccMatrix) -> AntisymTensor:
    """psi'_{mu nu rho} = S_mu^mu' S_nu^nu' S_rho^rho' psi_{mu' nu' rho'},
    n-fold for n fermions."""
    if s.size != t.n_modes:
        raise errors.StateError(
            f"SLOCC matrix of size {s.size} acting on {t.n_modes} modes.")
    logger.debug("SLOCC action with det S = %s on (%d, %d).", s.det,
                 t.n_fermions, t.n_modes)
    dense = np.array(t.dense())
    for axis in range(t.n_fermions):
        dense = np.moveaxis(np.tensordot(s.matrix, dense, axes=([1], [axis])),
                            0, axis)
    return AntisymTensor.from_dense(dense)
