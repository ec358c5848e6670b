from typing import Optional, Tuple


class StateError(ValueError):
    """Malformed tensor, coordinate set or matrix."""


class ReferenceDeficientError(StateError):
    """The reference amplitude psi_{12..n} vanishes."""

    def __init__(self,
                 message: str,
                 suggested_permutation: Optional[Tuple[int, ...]] = None):
        if suggested_permutation is not None:
            message += (" A mode permutation with nonzero reference "
                        f"amplitude: {suggested_permutation}.")
        super().__init__(message)
        self.suggested_permutation = suggested_permutation


class NormalizationError(StateError):
    """Dictionaries require intermediate normalization (alpha = 1)."""


class StateFileError(StateError):
    """Problems reading or validating a JSON state file."""


class UnsupportedCaseError(ValueError):
    """Fermion and mode numbers outside the supported set."""


class PreconditionError(ValueError):
    """A closed form was called outside its regime."""
