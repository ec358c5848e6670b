import numpy as np
from scipy import linalg
from scipy.optimize import linear_sum_assignment
from scipy.stats import unitary_group
from typing import Optional, Tuple


def random_complex(shape: (int, Tuple[int, ...]),
                   rng: np.random.Generator) -> np.ndarray:
    """Complex array with independent standard normal real and
    imaginary parts."""
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def random_slocc(size: int,
                 rng: np.random.Generator,
                 spread: float = 0.5) -> np.ndarray:
    """Well-conditioned random element of GL(size, C):
    U1 * diag(exp(s)) * U2 with s uniform in [-spread, spread] and
    U1, U2 Haar unitary. The condition number is at most exp(2 * spread).
    """
    u1 = unitary_group.rvs(size, random_state=rng)
    u2 = unitary_group.rvs(size, random_state=rng)
    s = np.exp(rng.uniform(-spread, spread, size))
    return u1 @ np.diag(s) @ u2


def numerical_rank(matrix: np.ndarray,
                   cut: float,
                   floor: float = 0.0) -> Tuple[int, np.ndarray]:
    """Number of singular values above cut * sigma_max (and above floor),
    together with the singular values in decreasing order."""
    sv = linalg.svdvals(matrix)
    if sv.size == 0 or sv[0] <= floor:
        return 0, sv
    return int(np.sum(sv > max(cut * sv[0], floor))), sv


def match_spectra(computed: np.ndarray,
                  expected: np.ndarray) -> float:
    """Largest deviation after optimally pairing two eigenvalue lists."""
    computed = np.asarray(computed, dtype=complex)
    expected = np.asarray(expected, dtype=complex)
    if computed.shape != expected.shape:
        raise ValueError("Spectra should have the same length.")
    cost = np.abs(computed[:, np.newaxis] - expected[np.newaxis, :])
    rows, cols = linear_sum_assignment(cost)
    return float(np.max(cost[rows, cols], initial=0.0))


def relative_error(value: (complex, np.ndarray),
                   reference: (complex, np.ndarray),
                   floor: Optional[float] = 1.0) -> float:
    """max |value - reference| / max(floor, max |reference|)."""
    value = np.asarray(value)
    reference = np.asarray(reference)
    diff = np.max(np.abs(value - reference), initial=0.0)
    scale = np.max(np.abs(reference), initial=0.0)
    return float(diff / max(floor, scale))
