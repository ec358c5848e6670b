from enum import Enum


class CoordinateKind(Enum):
    CI = 1
    CC = 2


class SixModeClass(Enum):
    NULL = 0
    SEP = 1
    BISEP = 2
    W = 3
    GHZ = 4


class SevenModeClass(Enum):
    I = 1
    II = 2
    III = 3
    IV = 4
    V = 5
    VI = 6
    VII = 7
    VIII = 8
    IX = 9
    X = 10
    VI_OR_VII = 11
    I_TO_V = 12

    @property
    def label(self) -> str:
        if self is SevenModeClass.VI_OR_VII:
            return "VI-or-VII"
        if self is SevenModeClass.I_TO_V:
            return "I-V (delegated)"
        return self.name


class Base(Enum):
    MINUS = 1
    PLUS = 2


class Suite(Enum):
    ALL = "all"
    SIX = "six"
    SEVEN = "seven"
    PERTURB = "perturb"
    FOUR8 = "four8"


# Six-mode classes sit inside the seven-mode table as rows I..V.
SIX_TO_SEVEN = {
    SixModeClass.NULL: SevenModeClass.I,
    SixModeClass.SEP: SevenModeClass.II,
    SixModeClass.BISEP: SevenModeClass.III,
    SixModeClass.W: SevenModeClass.IV,
    SixModeClass.GHZ: SevenModeClass.V,
}


class FermionOp(Enum):
    CREATE = 1
    ANNIHILATE = 2


class Covariant(Enum):
    K = 1
    M = 2
    N = 3
    L = 4


class SystemName(Enum):
    THREE_IN_SIX = "3 fermions, 6 modes"
    THREE_IN_SEVEN = "3 fermions, 7 modes"
    FOUR_IN_EIGHT = "4 fermions, 8 modes"
