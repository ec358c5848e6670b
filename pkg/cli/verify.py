"""Self-checks run by the verify command. Every check reports a residual
and the tolerance it is held to."""
import logging
import numpy as np
from dataclasses import dataclass
from scipy import linalg
from typing import Callable, Dict, List

import models.cluster.coordinates as coords
import models.cluster.dictionary as dictionary
import models.four_eight.doubles as doubles
import models.perturbation.ghz_like as ghz_like
import models.perturbation.sweep as sweep
import models.seven_mode.canonical as canonical7
import models.seven_mode.classification as classification7
import models.seven_mode.closed_form as closed_form
import models.seven_mode.covariants as covariants7
import models.six_mode.canonical as canonical6
import models.six_mode.classification as classification6
import models.six_mode.covariants as covariants6
import numerical_methods.multilinear.tensor as tensor
import numerical_methods.oracle.contraction as contraction
import utils.config as config
import utils.global_types as global_types
import utils.misc as misc

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CheckResult:
    name: str
    residual: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return bool(self.residual <= self.tolerance)


@dataclass(frozen=True)
class Trials:
    """Number of random draws per check."""
    slocc: int = 5
    scaling: int = 10
    round_trips: int = 20
    j_forms: int = 5
    nl_blocks: int = 5
    factorization: int = 20
    spectrum: int = 10
    sphere: int = 10
    protection: int = 1000


QUICK = Trials()

ACCEPTANCE = Trials(slocc=50, scaling=100, round_trips=500, j_forms=500,
                    nl_blocks=200, factorization=200, spectrum=200,
                    sphere=100, protection=10000)


def _flag(name: str,
          ok: bool) -> CheckResult:
    """Pass/fail check without a natural residual."""
    return CheckResult(name, 0.0 if ok else 1.0, 0.5)


def random_cc7(rng: np.random.Generator,
               singles: bool = True,
               triples: bool = True) -> coords.SevenModeCC:
    """Random seven-mode CC coordinates; Y and v vanish unless singles,
    u vanishes unless triples."""
    zero = np.zeros(3)
    return coords.SevenModeCC.from_vectors(
        misc.random_complex((3, 3), rng),
        misc.random_complex((3, 3), rng) if singles else np.zeros((3, 3)),
        misc.random_complex((), rng),
        misc.random_complex((3, 3), rng),
        misc.random_complex(3, rng) if singles else zero,
        misc.random_complex(3, rng) if triples else zero)


def factorization_cc(rng: np.random.Generator) -> coords.SevenModeCC:
    """Y = V = U = 0 and Z X symmetric: X = Z^-1 G with G symmetric."""
    z = misc.random_complex((3, 3), rng)
    g = misc.random_complex((3, 3), rng)
    x = linalg.solve(z, g + g.T)
    return coords.SevenModeCC(x, np.zeros((3, 3)),
                              misc.random_complex((), rng), z)


def six_mode_checks(rng: np.random.Generator,
                    tol: config.Tolerance,
                    trials: Trials = QUICK) -> List[CheckResult]:
    checks = []
    for label in global_types.SixModeClass:
        state = canonical6.canonical_state6(label)
        got = classification6.classify6(state, tol).label
        checks.append(_flag(f"six: canonical {label.name}", got is label))
        mismatches = 0
        if label is not global_types.SixModeClass.NULL:
            for _ in range(trials.slocc):
                s = tensor.SloccMatrix(misc.random_slocc(6, rng))
                moved = tensor.slocc_apply(state, s)
                mismatches += \
                    classification6.classify6(moved, tol).label is not label
        checks.append(CheckResult(f"six: {label.name} under SLOCC",
                                  float(mismatches), 0.0))
    ghz_cl = tensor.AntisymTensor.from_dict(3, 6, {(0, 1, 2): 1,
                                                   (3, 4, 5): 1})
    checks.append(CheckResult("six: D(p123 + p456) = 1",
                              abs(covariants6.quartic_d(ghz_cl) - 1), 1e-12))
    t = tensor.AntisymTensor(3, 6, misc.random_complex(20, rng))
    k = covariants6.covariant_k(t)
    brute = contraction.brute_covariant(t, global_types.Covariant.K)
    checks.append(CheckResult("six: K against brute force",
                              misc.relative_error(k, brute), 1e-10))
    ci = coords.ci6_from_tensor(t)
    checks.append(CheckResult(
        "six: D in CI coordinates",
        misc.relative_error(covariants6.quartic_d_ci(ci),
                            covariants6.quartic_d(t)), 1e-10))
    worst = 0.0
    for _ in range(trials.scaling):
        s = tensor.SloccMatrix(misc.random_slocc(6, rng))
        d_moved = covariants6.quartic_d(tensor.slocc_apply(t, s))
        worst = max(worst, misc.relative_error(
            d_moved, s.det ** 2 * covariants6.quartic_d(t)))
    checks.append(CheckResult("six: D scales by Det^2", worst, 1e-8))
    worst = 0.0
    for _ in range(trials.round_trips):
        cc = coords.SixModeCC(misc.random_complex((3, 3), rng),
                              misc.random_complex((3, 3), rng),
                              misc.random_complex((), rng))
        back = dictionary.cc6_from_ci6(coords.ci6_from_tensor(
            coords.tensor_from_ci6(dictionary.ci6_from_cc6(cc))))
        worst = max(worst, misc.relative_error(back.as_array(),
                                               cc.as_array()))
    checks.append(CheckResult("six: CC -> tensor -> CC", worst, 1e-10))
    return checks


def seven_mode_checks(rng: np.random.Generator,
                      tol: config.Tolerance,
                      trials: Trials = QUICK) -> List[CheckResult]:
    checks = []
    psi_minus = ghz_like.psi_minus()
    _, n, l_matrix = covariants7.covariants7(psi_minus)
    j = covariants7.j_from_covariants(n, l_matrix)
    checks.append(CheckResult("seven: J(Psi-) = 1 from Tr(N L)",
                              abs(j - 1), 1e-10))
    checks.append(CheckResult("seven: J(Psi-)^3 = Det B",
                              covariants7.j_cube_residual(j, n), 1e-10))
    j_cc = closed_form.invariant_j_cc(
        ghz_like.cc_coordinates(global_types.Base.MINUS))
    checks.append(CheckResult("seven: J(Psi-) = 1 in CC form",
                              abs(j_cc - 1), 1e-10))
    for label, rank in canonical7.RANK_N.items():
        report = classification7.classify7(
            canonical7.canonical_state7(label), tol)
        expected = global_types.SevenModeClass.VI_OR_VII \
            if label in (global_types.SevenModeClass.VI,
                         global_types.SevenModeClass.VII) else label
        checks.append(_flag(f"seven: row {label.name} rank {rank}",
                            report.rank_n == rank
                            and report.label is expected))
        state = canonical7.canonical_state7(label)
        mismatches = 0
        for _ in range(trials.slocc):
            s = tensor.SloccMatrix(misc.random_slocc(7, rng))
            moved = classification7.classify7(tensor.slocc_apply(state, s),
                                              tol)
            mismatches += moved.rank_n != rank
        checks.append(CheckResult(f"seven: row {label.name} rank under "
                                  "SLOCC", float(mismatches), 0.0))
    t = tensor.AntisymTensor(3, 7, misc.random_complex(35, rng))
    worst = 0.0
    for _ in range(trials.scaling):
        s = tensor.SloccMatrix(misc.random_slocc(7, rng))
        worst = max(worst, misc.relative_error(
            covariants7.invariant_j(tensor.slocc_apply(t, s)),
            s.det ** 3 * covariants7.invariant_j(t)))
    checks.append(CheckResult("seven: J scales by Det^3", worst, 1e-8))
    worst = 0.0
    for _ in range(trials.round_trips):
        cc = random_cc7(rng)
        back = dictionary.cc_from_ci(coords.ci7_from_tensor(
            coords.tensor_from_ci7(dictionary.ci7_from_cc7(cc))))
        worst = max(worst, misc.relative_error(back.as_array(),
                                               cc.as_array()))
    checks.append(CheckResult("seven: CC -> tensor -> CC", worst, 1e-10))
    worst = 0.0
    for _ in range(trials.j_forms):
        cc = random_cc7(rng, singles=False)
        state = coords.tensor_from_ci7(dictionary.ci7_from_cc7(cc))
        worst = max(worst, misc.relative_error(
            closed_form.invariant_j_cc(cc), covariants7.invariant_j(state)))
    checks.append(CheckResult("seven: closed-form J against Tr(N L)",
                              worst, 1e-9))
    worst = 0.0
    for _ in range(trials.nl_blocks):
        cc = random_cc7(rng, singles=False)
        n_closed, l_closed = closed_form.nl_from_cc(cc)
        state = coords.tensor_from_ci7(dictionary.ci7_from_cc7(cc))
        _, n, l_matrix = covariants7.covariants7(state)
        worst = max(worst, misc.relative_error(n_closed, n),
                    misc.relative_error(l_closed, l_matrix))
    checks.append(CheckResult("seven: closed-form N and L", worst, 1e-9))
    worst = 0.0
    for _ in range(trials.factorization):
        cc = factorization_cc(rng)
        worst = max(worst, closed_form.factorization_residual(cc)
                    / max(1.0, abs(closed_form.invariant_j_cc(cc))))
    checks.append(CheckResult("seven: J = Pf(omega) D / 4", worst, 1e-9))
    return checks


def perturbation_checks(rng: np.random.Generator,
                        tol: config.Tolerance,
                        trials: Trials = QUICK) -> List[CheckResult]:
    checks = []
    minus, plus = global_types.Base.MINUS, global_types.Base.PLUS
    worst = 0.0
    for _ in range(trials.spectrum):
        p = ghz_like.TriplesPerturbation(misc.random_complex((), rng),
                                         misc.random_complex(3, rng))
        _, n, _ = covariants7.covariants7(ghz_like.perturb(minus, p))
        worst = max(worst, misc.match_spectra(
            linalg.eigvals(covariants7.b_matrix(n)),
            ghz_like.expected_spectrum(minus, p)))
    checks.append(CheckResult("perturb: B spectrum of Phi-", worst, 1e-8))
    records = sweep.sweep(minus, sweep.sample_sphere(2.0, trials.sphere, rng),
                          tol)
    off = sum(r.rank_n != 4 or r.label is not global_types.SevenModeClass.IX
              for r in records)
    checks.append(CheckResult("perturb: Phi- on Q = 2 is IX, rank 4",
                              float(off), 0.0))
    records = sweep.sweep(minus, sweep.sample_sphere(2 + 3e-8, trials.sphere,
                                                     rng), tol)
    off = sum(r.rank_n != 7 or r.label is not global_types.SevenModeClass.X
              for r in records)
    checks.append(CheckResult("perturb: Phi- at Q = 2 + 3e-8 is X, rank 7",
                              float(off), 0.0))
    count = trials.protection
    points = [ghz_like.TriplesPerturbation(radius * p.xi, radius * p.u)
              for p, radius in zip(sweep.sample_sphere(1.0, count, rng),
                                   rng.uniform(0, 5, count))]
    records = sweep.sweep_fast(plus, points, tol)
    left = sum(r.label is not global_types.SevenModeClass.X for r in records)
    checks.append(CheckResult("perturb: Phi+ stays in class X",
                              float(left), 0.0))
    worst = max((misc.relative_error(
        closed_form.invariant_j_cc(ghz_like.cc_coordinates(plus, p)),
        -(1 + p.q_squared / 4)) for p in points), default=0.0)
    checks.append(CheckResult("perturb: J(Phi+) = -(1 + Q^2/4)", worst,
                              1e-10))
    special = classification7.classify7(
        ghz_like.perturb(plus, ghz_like.TriplesPerturbation(2j, [0, 0, 0])),
        tol)
    checks.append(_flag("perturb: Phi+ at (2i, 0, 0, 0) has J = 0, rank 4",
                        special.rank_n == 4 and abs(special.j) < 1e-10))
    return checks


def four_eight_checks(rng: np.random.Generator,
                      tol: config.Tolerance,
                      trials: Trials = QUICK) -> List[CheckResult]:
    checks = []
    worst_residual = worst_formula = worst_coordinates = 0.0
    for _ in range(5):
        params = doubles.random_closed_orbit_params(rng)
        amplitudes = doubles.closed_orbit_doubles(params)
        state = doubles.t2_state_48(amplitudes)
        residual, coordinates = doubles.subspace_membership(state)
        worst_residual = max(worst_residual, residual)
        worst_formula = max(worst_formula, state.distance(
            doubles.t2_state_48_formula(amplitudes)))
        worst_coordinates = max(worst_coordinates, misc.relative_error(
            coordinates, doubles.expected_p_coordinates(params)))
    checks.append(CheckResult("four8: closed orbit in P-span",
                              worst_residual, 1e-10))
    checks.append(CheckResult("four8: expansion formula against Fock",
                              worst_formula, 1e-10))
    checks.append(CheckResult("four8: P-coordinates", worst_coordinates,
                              1e-10))
    mixed = doubles.random_closed_orbit_params(rng, doubles.MIXED_PATTERN)
    residual, _ = doubles.subspace_membership(
        doubles.t2_state_48(doubles.closed_orbit_doubles(mixed)))
    logger.info("Mixed sign pattern leaves the P-span by %.3e", residual)
    checks.append(_flag("four8: mixed sign pattern leaves the P-span",
                        residual > 1e-6))
    return checks


SUITES: Dict[global_types.Suite,
             Callable[[np.random.Generator, config.Tolerance, Trials],
                      List[CheckResult]]] = {
    global_types.Suite.SIX: six_mode_checks,
    global_types.Suite.SEVEN: seven_mode_checks,
    global_types.Suite.PERTURB: perturbation_checks,
    global_types.Suite.FOUR8: four_eight_checks,
}


def run_suite(suite: global_types.Suite,
              seed: int = 0,
              tol: config.Tolerance = config.DEFAULT_TOLERANCE,
              trials: Trials = QUICK) -> List[CheckResult]:
    rng = np.random.default_rng(seed)
    if suite is global_types.Suite.ALL:
        selected = list(SUITES.values())
    else:
        selected = [SUITES[suite]]
    results = []
    for checks in selected:
        results += checks(rng, tol, trials)
    for result in results:
        logger.debug("%s: residual %.3e (tol %.1e)", result.name,
                     result.residual, result.tolerance)
    return results
