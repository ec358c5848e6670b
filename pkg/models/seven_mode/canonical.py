import numpy as np
from typing import Dict

import numerical_methods.multilinear.tensor as tensor
import utils.global_types as global_types

# Table rank of N for each row I..X.
RANK_N = {
    global_types.SevenModeClass.I: 0,
    global_types.SevenModeClass.II: 0,
    global_types.SevenModeClass.III: 0,
    global_types.SevenModeClass.IV: 0,
    global_types.SevenModeClass.V: 0,
    global_types.SevenModeClass.VI: 1,
    global_types.SevenModeClass.VII: 1,
    global_types.SevenModeClass.VIII: 2,
    global_types.SevenModeClass.IX: 4,
    global_types.SevenModeClass.X: 7,
}


def e_basis() -> Dict[str, np.ndarray]:
    """One-particle vectors E^k = p^k + i p^{k+3}, E^kbar = p^k - i p^{k+3}
    (k = 1, 2, 3) and E^4bar = i p^7, keyed "1".."3", "1b".."4b"."""
    basis = {}
    for k in range(3):
        plus = np.zeros(7, dtype=complex)
        plus[k], plus[k + 3] = 1, 1j
        basis[str(k + 1)] = plus
        basis[f"{k + 1}b"] = np.conj(plus)
    extra = np.zeros(7, dtype=complex)
    extra[6] = 1j
    basis["4b"] = extra
    return basis


def _e(*labels: str) -> tensor.AntisymTensor:
    basis = e_basis()
    return tensor.wedge(*[basis[label] for label in labels])


def _kahler_part() -> tensor.AntisymTensor:
    """(E^{1 1b} + E^{2 2b} + E^{3 3b}) E^{4b}."""
    return _e("1", "1b", "4b") + _e("2", "2b", "4b") + _e("3", "3b", "4b")


def canonical_state7(label: global_types.SevenModeClass) \
        -> tensor.AntisymTensor:
    """Representative of row I..X of the seven-mode table."""
    sep = _e("1", "2", "3")
    bisep = sep + _e("1", "2b", "3b")
    w = _e("1", "2", "3b") + _e("1", "2b", "3") + _e("1b", "2", "3")
    ghz = sep + _e("1b", "2b", "3b")
    rows = {
        global_types.SevenModeClass.I: tensor.AntisymTensor(3, 7),
        global_types.SevenModeClass.II: sep,
        global_types.SevenModeClass.III: bisep,
        global_types.SevenModeClass.IV: w,
        global_types.SevenModeClass.V: ghz,
    }
    if label in rows:
        return rows[label]
    above = {
        global_types.SevenModeClass.VI: tensor.AntisymTensor(3, 7),
        global_types.SevenModeClass.VII: sep,
        global_types.SevenModeClass.VIII: bisep,
        global_types.SevenModeClass.IX: w,
        global_types.SevenModeClass.X: ghz,
    }
    if label not in above:
        raise ValueError(f"No canonical form for {label.label}.")
    return _kahler_part() + above[label]
