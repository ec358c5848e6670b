import numerical_methods.multilinear.tensor as tensor
import utils.global_types as global_types

# Terms of p^{123} + p^{1 2bar 3bar} + p^{1bar 2 3bar} + p^{1bar 2bar 3};
# SEP keeps the first term, BISEP two, W three, GHZ all four.
_TERMS = [(0, 1, 2), (0, 4, 5), (3, 1, 5), (3, 4, 2)]

_N_TERMS = {
    global_types.SixModeClass.NULL: 0,
    global_types.SixModeClass.SEP: 1,
    global_types.SixModeClass.BISEP: 2,
    global_types.SixModeClass.W: 3,
    global_types.SixModeClass.GHZ: 4,
}


def canonical_state6(label: global_types.SixModeClass) \
        -> tensor.AntisymTensor:
    """Representative of a six-mode SLOCC class."""
    return tensor.AntisymTensor.from_dict(
        3, 6, {term: 1 for term in _TERMS[:_N_TERMS[label]]})
