import abc
import numpy as np

import numerical_methods.multilinear.tensor as tensor
import utils.config as config
import utils.errors as errors


class FermionSystem(metaclass=abc.ABCMeta):
    """Abstract few-fermion state with SLOCC covariants and a class
    ladder."""

    n_fermions: int = 3
    n_modes: int = 0

    def __init__(self,
                 state: tensor.AntisymTensor,
                 tol: config.Tolerance = config.DEFAULT_TOLERANCE):
        if (state.n_fermions, state.n_modes) \
                != (self.n_fermions, self.n_modes):
            raise errors.UnsupportedCaseError(
                f"{self.__class__.__name__} needs "
                f"({self.n_fermions}, {self.n_modes}), got "
                f"({state.n_fermions}, {state.n_modes}).")
        self.state = state
        self.tol = tol

    def __repr__(self):
        return f"{self.system_name.value} state object"

    @property
    @abc.abstractmethod
    def system_name(self):
        pass

    @property
    def scale(self) -> float:
        """Largest amplitude magnitude; witnesses of degree k are
        compared with tol.tau * scale ** k."""
        return self.state.max_abs()

    @abc.abstractmethod
    def invariant(self) -> complex:
        """Relative SLOCC invariant of the system."""
        pass

    @abc.abstractmethod
    def classify(self):
        """Entanglement class report."""
        pass

    def transformed(self,
                    s: tensor.SloccMatrix) -> "FermionSystem":
        """Same system type holding slocc_apply(state, s)."""
        return self.__class__(tensor.slocc_apply(self.state, s), self.tol)

    def is_zero(self) -> bool:
        return not np.any(self.state.amplitudes)
