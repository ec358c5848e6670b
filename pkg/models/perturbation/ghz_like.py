import cmath
import numpy as np
from dataclasses import dataclass
from typing import Optional

import models.cluster.coordinates as coords
import numerical_methods.multilinear.matrix3 as matrix3
import numerical_methods.multilinear.tensor as tensor
import utils.errors as errors
import utils.global_types as global_types

# Terms shared by both bases: p^{1 1bar 4bar} + p^{2 2bar 4bar}
# + p^{3 3bar 4bar}.
_KAHLER_TERMS = {(0, 3, 6): 1, (1, 4, 6): 1, (2, 5, 6): 1}


@dataclass(frozen=True, eq=False)
class TriplesPerturbation:
    """chi = xi p^{1bar 2bar 3bar} + u^1 p^{2bar 3bar 4bar}
    + u^2 p^{3bar 1bar 4bar} + u^3 p^{1bar 2bar 4bar}."""
    xi: complex
    u: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "xi", complex(self.xi))
        u = np.array(self.u, dtype=complex)
        if u.shape != (3,):
            raise errors.StateError(f"u should be a 3-vector, got {u.shape}.")
        if not (np.all(np.isfinite(u)) and cmath.isfinite(self.xi)):
            raise errors.StateError("Perturbation should be finite.")
        u.setflags(write=False)
        object.__setattr__(self, "u", u)

    @classmethod
    def zero(cls) -> "TriplesPerturbation":
        return cls(0, np.zeros(3))

    @property
    def q_squared(self) -> complex:
        """Q^2 = xi^2 + u.u (no complex conjugation)."""
        return complex(self.xi ** 2 + self.u @ self.u)

    @property
    def u_matrix(self) -> np.ndarray:
        return matrix3.antisym_from_vector(self.u)

    def as_array(self) -> np.ndarray:
        return np.concatenate([[self.xi], self.u])


def psi_minus() -> tensor.AntisymTensor:
    """p^{123} - p^{1 2bar 3bar} - p^{2 3bar 1bar} - p^{3 1bar 2bar}
    + p^{1 1bar 4bar} + p^{2 2bar 4bar} + p^{3 3bar 4bar}."""
    values = {(0, 1, 2): 1, (0, 4, 5): -1, (1, 5, 3): -1, (2, 3, 4): -1}
    values.update(_KAHLER_TERMS)
    return tensor.AntisymTensor.from_dict(3, 7, values)


def psi_plus() -> tensor.AntisymTensor:
    values = {(0, 1, 2): 1, (0, 4, 5): 1, (1, 5, 3): 1, (2, 3, 4): 1}
    values.update(_KAHLER_TERMS)
    return tensor.AntisymTensor.from_dict(3, 7, values)


def base_state(base: global_types.Base) -> tensor.AntisymTensor:
    if base is global_types.Base.MINUS:
        return psi_minus()
    return psi_plus()


def chi(p: TriplesPerturbation) -> tensor.AntisymTensor:
    return tensor.AntisymTensor.from_dict(
        3, 7, {(3, 4, 5): p.xi, (4, 5, 6): p.u[0],
               (5, 3, 6): p.u[1], (3, 4, 6): p.u[2]})


def perturb(base: global_types.Base,
            p: TriplesPerturbation) -> tensor.AntisymTensor:
    """Phi = Psi_base + chi(p)."""
    return base_state(base) + chi(p)


def cc_coordinates(base: global_types.Base,
                   p: Optional[TriplesPerturbation] = None) \
        -> coords.SevenModeCC:
    """(xi, X, Y, Z, V, U) = (xi, -+I, 0, I, 0, [u]); minus base has
    X = -I."""
    p = p or TriplesPerturbation.zero()
    sign = -1 if base is global_types.Base.MINUS else 1
    return coords.SevenModeCC(sign * np.eye(3), np.zeros((3, 3)), p.xi,
                              np.eye(3), np.zeros((3, 3)), p.u_matrix)


def b_matrix_phi_minus(p: TriplesPerturbation) -> np.ndarray:
    """[[I, -(xi I + U)/2, -u/2], [-(xi I - U)/2, I, 0], [-u^T/2, 0, 1]]."""
    return _b_matrix(1, p.xi * np.eye(3) + p.u_matrix, p.u)


def b_matrix_phi_plus(p: TriplesPerturbation) -> np.ndarray:
    """[[-I, -(xi I - U)/2, -u/2], [-(xi I + U)/2, I, 0], [-u^T/2, 0, 1]]."""
    return _b_matrix(-1, p.xi * np.eye(3) - p.u_matrix, p.u)


def _b_matrix(occupied_sign: int,
              coupling: np.ndarray,
              u: np.ndarray) -> np.ndarray:
    b = np.eye(7, dtype=complex)
    b[:3, :3] *= occupied_sign
    b[:3, 3:6] = -coupling / 2
    b[3:6, :3] = -coupling.T / 2
    b[:3, 6] = b[6, :3] = -u / 2
    return b


def b_matrix_closed(base: global_types.Base,
                    p: TriplesPerturbation) -> np.ndarray:
    if base is global_types.Base.MINUS:
        return b_matrix_phi_minus(p)
    return b_matrix_phi_plus(p)


def expected_spectrum(base: global_types.Base,
                      p: TriplesPerturbation) -> np.ndarray:
    """Minus: 1 -+ Q/2 (three each) and 1; plus: -+sqrt(1 + Q^2/4)
    (three each) and 1."""
    if base is global_types.Base.MINUS:
        half = cmath.sqrt(p.q_squared) / 2
        low, high = 1 - half, 1 + half
    else:
        root = cmath.sqrt(1 + p.q_squared / 4)
        low, high = -root, root
    return np.array([low] * 3 + [high] * 3 + [1], dtype=complex)


def j_closed(base: global_types.Base,
             p: TriplesPerturbation) -> complex:
    """Minus: 1 - Q^2/4; plus: -(1 + Q^2/4)."""
    if base is global_types.Base.MINUS:
        return 1 - p.q_squared / 4
    return -(1 + p.q_squared / 4)


def diagonalizer(p: TriplesPerturbation) -> np.ndarray:
    """Complex orthogonal S with S^T B(Phi_-) S = diag((1 - Q/2) I,
    (1 + Q/2) I, 1). Needs Q != 0."""
    q = cmath.sqrt(p.q_squared)
    if q == 0:
        raise errors.PreconditionError("Diagonalizer needs Q != 0.")
    root2 = np.sqrt(2)
    eye = np.eye(3)
    top = p.xi * eye - p.u_matrix
    s = np.zeros((7, 7), dtype=complex)
    s[:3, :3] = s[:3, 3:6] = q * eye
    s[3:6, :3] = top
    s[3:6, 3:6] = -top
    s[3:6, 6] = root2 * p.u
    s[6, :3] = p.u
    s[6, 3:6] = -p.u
    s[6, 6] = -root2 * p.xi
    return s / (root2 * q)


def conifold_residual(p: TriplesPerturbation,
                      q0: float) -> complex:
    """xi^2 + u.u - q0^2; the transition locus of Phi_- is q0 = 2."""
    return p.q_squared - q0 ** 2
