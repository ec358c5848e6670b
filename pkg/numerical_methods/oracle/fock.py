import math
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, \
    Sequence, Tuple

import numerical_methods.multilinear.tensor as tensor
import utils.errors as errors
import utils.global_types as global_types


class FockVector:
    """Vector in the fermionic Fock space of n_modes modes.

    Basis states are occupation bitstrings: bit mu set means mode mu is
    occupied, and the bitstring stands for p^{mu1} p^{mu2}..|0> with
    mu1 < mu2 < ... Zero coefficients are never stored.
    """

    def __init__(self,
                 n_modes: int,
                 coefficients: Optional[Dict[int, complex]] = None):
        self._n_modes = n_modes
        self._coefficients = {}
        if coefficients:
            for state, value in coefficients.items():
                if state < 0 or state >> n_modes:
                    raise errors.StateError(
                        f"Occupation pattern {state:b} exceeds "
                        f"{n_modes} modes.")
                if value != 0:
                    self._coefficients[state] = complex(value)

    @classmethod
    def vacuum(cls,
               n_modes: int) -> "FockVector":
        return cls(n_modes, {0: 1})

    @classmethod
    def slater(cls,
               n_modes: int,
               modes: Iterable[int]) -> "FockVector":
        """p^{mu1}..p^{mun}|0> with the modes applied right to left."""
        v = cls.vacuum(n_modes)
        for mode in reversed(list(modes)):
            v = apply_mode_op(v, global_types.FermionOp.CREATE, mode)
        return v

    @property
    def n_modes(self) -> int:
        return self._n_modes

    def __repr__(self):
        return f"FockVector({self._n_modes}) object"

    def items(self) -> Iterator[Tuple[int, complex]]:
        return iter(self._coefficients.items())

    def __getitem__(self,
                    state: int) -> complex:
        return self._coefficients.get(state, 0j)

    def __len__(self):
        return len(self._coefficients)

    def sectors(self) -> FrozenSet[int]:
        """Particle numbers present in the vector."""
        return frozenset(bin(state).count("1")
                         for state in self._coefficients)

    def __add__(self,
                other: "FockVector") -> "FockVector":
        coefficients = dict(self._coefficients)
        for state, value in other.items():
            coefficients[state] = coefficients.get(state, 0j) + value
        return FockVector(self._n_modes, coefficients)

    def __sub__(self,
                other: "FockVector") -> "FockVector":
        return self + (-1) * other

    def __mul__(self,
                scalar: complex) -> "FockVector":
        return FockVector(self._n_modes,
                          {s: scalar * v for s, v in self.items()})

    __rmul__ = __mul__

    def norm(self) -> float:
        return math.sqrt(sum(abs(v) ** 2 for _, v in self.items()))

    def is_zero(self,
                atol: float = 0.0) -> bool:
        return all(abs(v) <= atol for _, v in self.items())


def apply_mode_op(v: FockVector,
                  kind: global_types.FermionOp,
                  mode: int) -> FockVector:
    """Apply p^mode (create) or n_mode (annihilate) with the sign
    (-1)^(number of occupied modes below mode)."""
    if not 0 <= mode < v.n_modes:
        raise errors.StateError(f"Mode {mode} out of range.")
    bit = 1 << mode
    result = {}
    for state, value in v.items():
        occupied = bool(state & bit)
        if (kind is global_types.FermionOp.CREATE) == occupied:
            continue
        sign = -1 if bin(state & (bit - 1)).count("1") % 2 else 1
        result[state ^ bit] = sign * value
    return FockVector(v.n_modes, result)


def fock_from_tensor(t: tensor.AntisymTensor) -> FockVector:
    """(1/n!) psi_{mu..} p^mu..|0> written on occupation bitstrings."""
    coefficients = {}
    for indices, value in t.items():
        coefficients[sum(1 << mu for mu in indices)] = value
    return FockVector(t.n_modes, coefficients)


def tensor_from_fock(v: FockVector,
                     n_fermions: int) -> tensor.AntisymTensor:
    """Read the n_fermions sector of v as an antisymmetric tensor;
    other sectors are ignored."""
    values = {}
    for state, value in v.items():
        modes = tuple(mu for mu in range(v.n_modes) if state >> mu & 1)
        if len(modes) == n_fermions:
            values[modes] = value
    return tensor.AntisymTensor.from_dict(n_fermions, v.n_modes, values)


@dataclass(frozen=True)
class Monomial:
    """coefficient * p^{c1}..p^{ck} n_{a1}..n_{al} (normal order)."""
    coefficient: complex
    creations: Tuple[int, ...]
    annihilations: Tuple[int, ...]

    def apply(self,
              v: FockVector) -> FockVector:
        for mode in reversed(self.annihilations):
            v = apply_mode_op(v, global_types.FermionOp.ANNIHILATE, mode)
        for mode in reversed(self.creations):
            v = apply_mode_op(v, global_types.FermionOp.CREATE, mode)
        return self.coefficient * v


class ClusterOperator:
    """Sum of normal-ordered monomials acting on a Fock space with a
    fixed set of occupied (reference) modes."""

    def __init__(self,
                 n_modes: int,
                 occupied: Sequence[int],
                 monomials: Optional[List[Monomial]] = None):
        self._n_modes = n_modes
        self._occupied = frozenset(occupied)
        self._monomials = [m for m in (monomials or [])
                           if m.coefficient != 0]

    @property
    def n_modes(self) -> int:
        return self._n_modes

    @property
    def occupied(self) -> FrozenSet[int]:
        return self._occupied

    @property
    def monomials(self) -> List[Monomial]:
        return list(self._monomials)

    def __repr__(self):
        return f"ClusterOperator({len(self._monomials)} terms) object"

    def add_pairs(self,
                  coefficient: complex,
                  creations: Sequence[int],
                  annihilations: Sequence[int]):
        """Append coefficient * p^{a1} n_{i1} p^{a2} n_{i2}.. after
        moving it to normal order, which costs (-1)^(k(k-1)/2)."""
        k = len(creations)
        if len(annihilations) != k:
            raise errors.StateError("Pair product needs equally many "
                                    "creations and annihilations.")
        sign = -1 if (k * (k - 1) // 2) % 2 else 1
        if coefficient != 0:
            self._monomials.append(Monomial(sign * complex(coefficient),
                                            tuple(creations),
                                            tuple(annihilations)))

    @classmethod
    def from_pairs(cls,
                   n_modes: int,
                   occupied: Sequence[int],
                   terms: Iterable[Tuple[complex, Sequence[int],
                                         Sequence[int]]]) \
            -> "ClusterOperator":
        op = cls(n_modes, occupied)
        for coefficient, creations, annihilations in terms:
            op.add_pairs(coefficient, creations, annihilations)
        return op

    def __add__(self,
                other: "ClusterOperator") -> "ClusterOperator":
        if self._n_modes != other.n_modes \
                or self._occupied != other.occupied:
            raise errors.StateError("Cluster operators on different "
                                    "mode splits.")
        return ClusterOperator(self._n_modes, sorted(self._occupied),
                               self._monomials + other.monomials)

    def __mul__(self,
                scalar: complex) -> "ClusterOperator":
        return ClusterOperator(
            self._n_modes, sorted(self._occupied),
            [Monomial(scalar * m.coefficient, m.creations, m.annihilations)
             for m in self._monomials])

    __rmul__ = __mul__

    def is_excitation(self) -> bool:
        """True when every monomial only annihilates occupied modes and
        creates virtual ones."""
        return all(set(m.annihilations) <= self._occupied
                   and not set(m.creations) & self._occupied
                   for m in self._monomials)

    def apply(self,
              v: FockVector) -> FockVector:
        result = FockVector(v.n_modes)
        for monomial in self._monomials:
            result = result + monomial.apply(v)
        return result


def exp_cluster(v: FockVector,
                op: ClusterOperator) -> FockVector:
    """e^T v by the power series, which terminates since excitation
    operators are nilpotent on a finite Fock space."""
    if not op.is_excitation():
        raise errors.StateError("Only excitation operators (occupied to "
                                "virtual) can be exponentiated.")
    result = v
    term = v
    for k in range(1, op.n_modes + 2):
        term = (1 / k) * op.apply(term)
        if term.is_zero():
            return result
        result = result + term
    raise errors.StateError("Cluster power series did not terminate.")


def anticommutator_residual(v: FockVector,
                            create_mode: int,
                            annihilate_mode: int) -> float:
    """|| (p^mu n_nu + n_nu p^mu - delta) v ||."""
    create = global_types.FermionOp.CREATE
    annihilate = global_types.FermionOp.ANNIHILATE
    lhs = apply_mode_op(apply_mode_op(v, annihilate, annihilate_mode),
                        create, create_mode) \
        + apply_mode_op(apply_mode_op(v, create, create_mode),
                        annihilate, annihilate_mode)
    if create_mode == annihilate_mode:
        lhs = lhs - v
    return lhs.norm()


def basis_vectors(n_modes: int) -> Iterator[FockVector]:
    """Every occupation-number basis vector."""
    for state in range(1 << n_modes):
        yield FockVector(n_modes, {state: 1})


