import numpy as np
from typing import Iterator, List, Sequence, Tuple

import numerical_methods.multilinear.matrix3 as matrix3
import utils.config as config
import utils.errors as errors


def perfect_matchings(indices: Sequence[int]) \
        -> Iterator[Tuple[int, List[Tuple[int, int]]]]:
    """Signed perfect matchings of an even index list, pairing the first
    index with each of the others in turn."""
    indices = list(indices)
    if not indices:
        yield 1, []
        return
    first = indices[0]
    for pos in range(1, len(indices)):
        rest = indices[1:pos] + indices[pos + 1:]
        sign = 1 if pos % 2 == 1 else -1
        for sub_sign, pairs in perfect_matchings(rest):
            yield sign * sub_sign, [(first, indices[pos])] + pairs


def pfaffian(omega: np.ndarray,
             tol: config.Tolerance = config.DEFAULT_TOLERANCE) -> complex:
    """Pfaffian of an even-dimensional antisymmetric matrix (up to 6x6)
    as a sum over perfect matchings. Pf^2 = Det."""
    omega = matrix3.check_antisymmetric(omega, tol.tau, "omega")
    size = omega.shape[0]
    if size % 2 or size > 6:
        raise errors.StateError(f"Pfaffian implemented for sizes 2, 4, 6; "
                         f"got {size}.")
    total = 0j
    for sign, pairs in perfect_matchings(range(size)):
        term = complex(sign)
        for i, j in pairs:
            term *= omega[i, j]
        total += term
    return total


def pfaffian6(omega: np.ndarray,
              tol: config.Tolerance = config.DEFAULT_TOLERANCE) -> complex:
    """Pfaffian of a 6x6 antisymmetric matrix (15 matchings)."""
    if np.shape(omega) != (6, 6):
        raise errors.StateError(
            f"Expected 6x6 matrix, got {np.shape(omega)}.")
    return pfaffian(omega, tol)
