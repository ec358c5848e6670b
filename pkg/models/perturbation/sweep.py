import csv
import logging
import numpy as np
import re
from dataclasses import dataclass
from scipy import linalg
from typing import Iterable, List, TextIO

import models.perturbation.ghz_like as ghz_like
import models.seven_mode.classification as classification
import models.seven_mode.closed_form as closed_form
import models.seven_mode.covariants as covariants
import utils.config as config
import utils.errors as errors
import utils.global_types as global_types

logger = logging.getLogger(__name__)

CSV_HEADER = ["xi_re", "xi_im", "u1_re", "u1_im", "u2_re", "u2_im",
              "u3_re", "u3_im", "q2_re", "q2_im", "j_re", "j_im",
              "rank_n", "class"]

_GRID_NAMES = ("xi", "u1", "u2", "u3")
_GRID_ITEM = re.compile(r"^\s*(xi|u1|u2|u3)\s*=\s*(.+?)\s*$")


@dataclass(frozen=True, eq=False)
class SweepRecord:
    point: ghz_like.TriplesPerturbation
    q_squared: complex
    j: complex
    rank_n: int
    label: global_types.SevenModeClass
    b_eigenvalues: np.ndarray

    def csv_row(self) -> List[str]:
        values = []
        for z in list(self.point.as_array()) + [self.q_squared, self.j]:
            values += [repr(float(z.real)), repr(float(z.imag))]
        return values + [str(self.rank_n), self.label.label]


def sweep(base: global_types.Base,
          path: Iterable[ghz_like.TriplesPerturbation],
          tol: config.Tolerance = config.DEFAULT_TOLERANCE) \
        -> List[SweepRecord]:
    """Classify Psi_base + chi(p) along path with full tensors."""
    records = []
    for idx, p in enumerate(path):
        report = classification.classify7(ghz_like.perturb(base, p), tol)
        records.append(SweepRecord(p, p.q_squared, report.j, report.rank_n,
                                   report.label, report.b_eigenvalues))
        logger.debug("sweep point %d: Q^2=%s J=%s rank=%d", idx,
                     p.q_squared, report.j, report.rank_n)
    return records


def sweep_fast(base: global_types.Base,
               path: Iterable[ghz_like.TriplesPerturbation],
               tol: config.Tolerance = config.DEFAULT_TOLERANCE) \
        -> List[SweepRecord]:
    """Same records from the closed forms of J and B, without building
    covariants."""
    records = []
    for p in path:
        j = ghz_like.j_closed(base, p)
        b = ghz_like.b_matrix_closed(base, p)
        scale = max(1.0, float(np.max(np.abs(p.as_array()))))
        label, rank, _ = classification.classify7_from_invariants(
            j, -6 * b, scale, tol)
        records.append(SweepRecord(p, p.q_squared, j, rank, label,
                                   linalg.eigvals(b)))
    return records


def j_three_ways(base: global_types.Base,
                 p: ghz_like.TriplesPerturbation) -> np.ndarray:
    """J from Tr(N L), from the Q^2 formula and from the CC closed form."""
    return np.array([
        covariants.invariant_j(ghz_like.perturb(base, p)),
        ghz_like.j_closed(base, p),
        closed_form.invariant_j_cc(ghz_like.cc_coordinates(base, p))])


def sample_sphere(radius: float,
                  n_samples: int,
                  rng: np.random.Generator) \
        -> List[ghz_like.TriplesPerturbation]:
    """Real (xi, u) uniform on the 3-sphere of the given radius."""
    points = rng.standard_normal((n_samples, 4))
    points *= radius / np.linalg.norm(points, axis=1)[:, np.newaxis]
    return [ghz_like.TriplesPerturbation(x[0], x[1:]) for x in points]


def _parse_value(text: str) -> np.ndarray:
    parts = text.split(":")
    try:
        if len(parts) == 1:
            return np.array([complex(parts[0].replace(" ", ""))])
        if len(parts) == 3:
            start, stop, step = (float(x) for x in parts)
            if step <= 0 or stop < start:
                raise errors.StateError(f"Bad range '{text}'.")
            count = int(np.floor((stop - start) / step + 1.0e-9)) + 1
            return start + step * np.arange(count)
    except ValueError as exc:
        raise errors.StateError(f"Bad grid value '{text}'.") from exc
    raise errors.StateError(f"Bad grid value '{text}'; use v or "
                            "start:stop:step.")


def parse_grid(spec: str) -> List[ghz_like.TriplesPerturbation]:
    """Cartesian grid from e.g. "xi=0:3:0.1,u1=0.5". Unnamed
    coordinates are zero; ranges include stop."""
    axes = {name: np.zeros(1) for name in _GRID_NAMES}
    seen = set()
    for item in spec.split(","):
        match = _GRID_ITEM.match(item)
        if match is None:
            raise errors.StateError(f"Bad grid item '{item}'.")
        name, value = match.groups()
        if name in seen:
            raise errors.StateError(f"Grid coordinate {name} repeated.")
        seen.add(name)
        axes[name] = _parse_value(value)
    grid = np.meshgrid(*(axes[name] for name in _GRID_NAMES),
                       indexing="ij")
    flat = [g.ravel() for g in grid]
    return [ghz_like.TriplesPerturbation(xi, [u1, u2, u3])
            for xi, u1, u2, u3 in zip(*flat)]


def write_csv(records: Iterable[SweepRecord],
              stream: TextIO):
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for record in records:
        writer.writerow(record.csv_row())
