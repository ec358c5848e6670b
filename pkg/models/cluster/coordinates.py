import numpy as np
from dataclasses import dataclass, field
from typing import Optional, Tuple

import numerical_methods.multilinear.matrix3 as matrix3
import numerical_methods.multilinear.tensor as tensor
import utils.config as config
import utils.errors as errors


def _mat3(value, name: str) -> np.ndarray:
    value = np.array(value, dtype=complex)
    if value.shape != (3, 3):
        raise errors.StateError(f"{name} should be 3x3, got {value.shape}.")
    if not np.all(np.isfinite(value)):
        raise errors.StateError(f"{name} should be finite.")
    value.setflags(write=False)
    return value


def _antisym3(value, name: str) -> np.ndarray:
    value = matrix3.check_antisymmetric(_mat3(value, name),
                                        config.DEFAULT_TAU, name)
    value.setflags(write=False)
    return value


@dataclass(frozen=True)
class ModeSplit:
    """Occupied (reference) and virtual modes, 0-based."""
    occupied: Tuple[int, ...]
    virtual: Tuple[int, ...]

    def __post_init__(self):
        modes = sorted(self.occupied + self.virtual)
        if modes != list(range(len(modes))):
            raise errors.StateError(
                f"Occupied {self.occupied} and virtual {self.virtual} "
                "modes should be disjoint and cover 0..N-1.")

    @classmethod
    def standard(cls,
                 n_fermions: int,
                 n_modes: int) -> "ModeSplit":
        return cls(tuple(range(n_fermions)),
                   tuple(range(n_fermions, n_modes)))

    @property
    def n_fermions(self) -> int:
        return len(self.occupied)

    @property
    def n_modes(self) -> int:
        return len(self.occupied) + len(self.virtual)


# eq=False: coordinate blocks are numpy arrays.
@dataclass(frozen=True, eq=False)
class SixModeCI:
    """CI coordinates (alpha, A, B, beta) of 3 fermions in 6 modes.

    A[a, i] holds doubles, B[i, a] singles (occupied row, virtual column).
    """
    alpha: complex
    a: np.ndarray
    b: np.ndarray
    beta: complex

    def __post_init__(self):
        object.__setattr__(self, "alpha", complex(self.alpha))
        object.__setattr__(self, "beta", complex(self.beta))
        object.__setattr__(self, "a", _mat3(self.a, "A"))
        object.__setattr__(self, "b", _mat3(self.b, "B"))

    def as_array(self) -> np.ndarray:
        return np.concatenate([[self.alpha], self.a.ravel(),
                               self.b.ravel(), [self.beta]])


@dataclass(frozen=True, eq=False)
class SixModeCC:
    """CC coordinates (eta, X, Y, xi): T1 ~ Y, T2 ~ X, T3 ~ xi."""
    x: np.ndarray
    y: np.ndarray
    xi: complex
    eta: complex = 1

    def __post_init__(self):
        object.__setattr__(self, "xi", complex(self.xi))
        object.__setattr__(self, "eta", complex(self.eta))
        object.__setattr__(self, "x", _mat3(self.x, "X"))
        object.__setattr__(self, "y", _mat3(self.y, "Y"))
        if self.eta != 1:
            raise errors.NormalizationError("CC coordinates need eta = 1.")

    def as_array(self) -> np.ndarray:
        return np.concatenate([[self.eta], self.x.ravel(),
                               self.y.ravel(), [self.xi]])


@dataclass(frozen=True, eq=False)
class SevenModeCI:
    """CI coordinates of 3 fermions in 7 modes. D[k, a] = Psi_{k a 7},
    E[j, k] = Psi_{j k 7}, F[a, b] = Psi_{a b 7}."""
    alpha: complex
    a: np.ndarray
    b: np.ndarray
    beta: complex
    d: np.ndarray
    e: np.ndarray
    f: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "alpha", complex(self.alpha))
        object.__setattr__(self, "beta", complex(self.beta))
        object.__setattr__(self, "a", _mat3(self.a, "A"))
        object.__setattr__(self, "b", _mat3(self.b, "B"))
        object.__setattr__(self, "d", _mat3(self.d, "D"))
        object.__setattr__(self, "e", _antisym3(self.e, "E"))
        object.__setattr__(self, "f", _antisym3(self.f, "F"))

    @property
    def six_mode(self) -> SixModeCI:
        return SixModeCI(self.alpha, self.a, self.b, self.beta)

    def as_array(self) -> np.ndarray:
        return np.concatenate([[self.alpha], self.a.ravel(), self.b.ravel(),
                               [self.beta], self.d.ravel(), self.e.ravel(),
                               self.f.ravel()])


@dataclass(frozen=True, eq=False)
class SevenModeCC:
    """CC coordinates of 3 fermions in 7 modes with antisymmetric
    V = [v] (singles into the extra mode) and U = [u] (triples)."""
    x: np.ndarray
    y: np.ndarray
    xi: complex
    z: np.ndarray
    v_matrix: np.ndarray = field(default_factory=lambda: np.zeros((3, 3)))
    u_matrix: np.ndarray = field(default_factory=lambda: np.zeros((3, 3)))
    eta: complex = 1

    def __post_init__(self):
        object.__setattr__(self, "xi", complex(self.xi))
        object.__setattr__(self, "eta", complex(self.eta))
        object.__setattr__(self, "x", _mat3(self.x, "X"))
        object.__setattr__(self, "y", _mat3(self.y, "Y"))
        object.__setattr__(self, "z", _mat3(self.z, "Z"))
        object.__setattr__(self, "v_matrix", _antisym3(self.v_matrix, "V"))
        object.__setattr__(self, "u_matrix", _antisym3(self.u_matrix, "U"))
        if self.eta != 1:
            raise errors.NormalizationError("CC coordinates need eta = 1.")

    @classmethod
    def from_vectors(cls,
                     x: np.ndarray,
                     y: np.ndarray,
                     xi: complex,
                     z: np.ndarray,
                     v: Optional[np.ndarray] = None,
                     u: Optional[np.ndarray] = None) -> "SevenModeCC":
        v = np.zeros(3) if v is None else v
        u = np.zeros(3) if u is None else u
        return cls(x, y, xi, z,
                   matrix3.antisym_from_vector(np.asarray(v, dtype=complex)),
                   matrix3.antisym_from_vector(np.asarray(u, dtype=complex)))

    @property
    def v(self) -> np.ndarray:
        return matrix3.vector_from_antisym(self.v_matrix)

    @property
    def u(self) -> np.ndarray:
        return matrix3.vector_from_antisym(self.u_matrix)

    @property
    def six_mode(self) -> SixModeCC:
        return SixModeCC(self.x, self.y, self.xi)

    def is_singles_free(self) -> bool:
        return not np.any(self.y) and not np.any(self.v_matrix)

    def as_array(self) -> np.ndarray:
        return np.concatenate([[self.eta, self.xi], self.x.ravel(),
                               self.y.ravel(), self.z.ravel(),
                               self.v_matrix.ravel(), self.u_matrix.ravel()])


def _cyclic(k: int) -> Tuple[int, int]:
    return (k + 1) % 3, (k + 2) % 3


def _check_shape(t: tensor.AntisymTensor,
                 n_modes: int):
    if (t.n_fermions, t.n_modes) != (3, n_modes):
        raise errors.UnsupportedCaseError(
            f"Expected 3 fermions in {n_modes} modes, got "
            f"({t.n_fermions}, {t.n_modes}).")


def ci6_from_tensor(t: tensor.AntisymTensor) -> SixModeCI:
    """Read (alpha, A, B, beta): B[i, a] = psi_{(i+1)(i+2) a} and
    A[a, i] = psi_{(a+1)(a+2) i} with cyclic occupied and virtual
    labels respectively."""
    _check_shape(t, 6)
    b = np.zeros((3, 3), dtype=complex)
    a = np.zeros((3, 3), dtype=complex)
    for i, k in np.ndindex(3, 3):
        j1, j2 = _cyclic(i)
        b[i, k] = t[(j1, j2, 3 + k)]
        c1, c2 = _cyclic(k)
        a[k, i] = t[(3 + c1, 3 + c2, i)]
    return SixModeCI(t[(0, 1, 2)], a, b, t[(3, 4, 5)])


def _six_mode_values(ci: SixModeCI) -> dict:
    values = {(0, 1, 2): ci.alpha, (3, 4, 5): ci.beta}
    for i, k in np.ndindex(3, 3):
        j1, j2 = _cyclic(i)
        values[(j1, j2, 3 + k)] = ci.b[i, k]
        c1, c2 = _cyclic(k)
        values[(3 + c1, 3 + c2, i)] = ci.a[k, i]
    return values


def tensor_from_ci6(ci: SixModeCI) -> tensor.AntisymTensor:
    return tensor.AntisymTensor.from_dict(3, 6, _six_mode_values(ci))


def ci7_from_tensor(t: tensor.AntisymTensor) -> SevenModeCI:
    _check_shape(t, 7)
    six = ci6_from_tensor(t.restrict(range(6)))
    psi = t.dense()
    return SevenModeCI(six.alpha, six.a, six.b, six.beta,
                       psi[0:3, 3:6, 6], psi[0:3, 0:3, 6], psi[3:6, 3:6, 6])


def tensor_from_ci7(ci: SevenModeCI) -> tensor.AntisymTensor:
    values = _six_mode_values(ci.six_mode)
    for i, k in np.ndindex(3, 3):
        values[(i, 3 + k, 6)] = ci.d[i, k]
        if i < k:
            values[(i, k, 6)] = ci.e[i, k]
            values[(3 + i, 3 + k, 6)] = ci.f[i, k]
    return tensor.AntisymTensor.from_dict(3, 7, values)


def ci_from_tensor(t: tensor.AntisymTensor) -> (SixModeCI, SevenModeCI):
    """CI coordinates of a 3-fermion state in 6 or 7 modes."""
    if (t.n_fermions, t.n_modes) == (3, 6):
        return ci6_from_tensor(t)
    if (t.n_fermions, t.n_modes) == (3, 7):
        return ci7_from_tensor(t)
    raise errors.UnsupportedCaseError(
        f"CI coordinates exist for (3, 6) and (3, 7), got "
        f"({t.n_fermions}, {t.n_modes}).")


def kahler_decompose(t: tensor.AntisymTensor) \
        -> Tuple[tensor.AntisymTensor, np.ndarray]:
    """Split a 7-mode state as |psi> + (1/2) omega_{mu nu} p^{mu nu 7}|0>
    with psi living on the first six modes."""
    _check_shape(t, 7)
    return t.restrict(range(6)), np.array(t.dense()[:6, :6, 6])


def kahler_compose(psi: tensor.AntisymTensor,
                   omega: np.ndarray) -> tensor.AntisymTensor:
    _check_shape(psi, 6)
    omega = matrix3.check_antisymmetric(omega, config.DEFAULT_TAU, "omega")
    values = {idx: value for idx, value in psi.items()}
    for mu in range(6):
        for nu in range(mu + 1, 6):
            values[(mu, nu, 6)] = omega[mu, nu]
    return tensor.AntisymTensor.from_dict(3, 7, values)
