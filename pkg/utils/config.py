from dataclasses import dataclass

VERSION = "0.1.0"

# Relative tolerance of the classification ladders.
DEFAULT_TAU = 1.0e-9

# Singular values below RANK_CUT * sigma_max count as zero.
DEFAULT_RANK_CUT = 1.0e-9

# |det S| must exceed INV_CUT * (max |S_ij|)^N.
DEFAULT_INV_CUT = 1.0e-12

# Rank decisions closer than this factor to the cut are logged.
AMBIGUITY_BAND = 1.0e3


@dataclass(frozen=True)
class Tolerance:
    """Tolerances used by classification and rank decisions.

    - tau: relative threshold for polynomial witnesses, compared with
      tau * scale ** degree
    - rank: relative singular value cut
    - inv: invertibility threshold of SLOCC matrices
    """
    tau: float = DEFAULT_TAU
    rank: float = DEFAULT_RANK_CUT
    inv: float = DEFAULT_INV_CUT

    def __post_init__(self):
        for name in ("tau", "rank", "inv"):
            value = getattr(self, name)
            if not value > 0:
                raise ValueError(f"Tolerance {name} should be positive, "
                                 f"got {value}.")


DEFAULT_TOLERANCE = Tolerance()
