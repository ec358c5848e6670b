"""Command line front end.

    python -m cli.main classify state.json
    python -m cli.main convert state.json --to cc
    python -m cli.main invariants state.json
    python -m cli.main perturb --base minus --grid "xi=0:3:0.1"
    python -m cli.main verify --suite seven --acceptance
    python -m cli.main orbit48 --params 0.5,0.5,0.5,0.5,0,0

Exit codes: 0 ok, 1 failed verification, 2 input error, 3 unsupported
case, 4 reference-deficient state.
"""
import argparse
import json
import logging
import numpy as np
import sys
from scipy import linalg
from typing import List, Optional

import cli.verify as verify
import models.cluster.coordinates as coords
import models.cluster.dictionary as dictionary
import models.cluster.singles as singles
import models.four_eight.doubles as doubles
import models.perturbation.sweep as sweep
import models.seven_mode.classification as classification7
import models.six_mode.classification as classification6
import models.six_mode.covariants as covariants6
import utils.config as config
import utils.errors as errors
import utils.global_types as global_types
import utils.state_io as state_io

logger = logging.getLogger("cli")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2
EXIT_UNSUPPORTED = 3
EXIT_REFERENCE = 4

SUPPORTED = "supported cases: (3, 6), (3, 7) and (4, 8) for orbit48 only"


def _tolerance(args) -> config.Tolerance:
    """--tol sets the witness threshold; the singular value cut follows it
    unless --rank-tol is given."""
    rank = args.tol if args.rank_tol is None else args.rank_tol
    return config.Tolerance(tau=args.tol, rank=rank)


def _read_document(stream) -> dict:
    try:
        doc = json.load(stream)
    except json.JSONDecodeError as exc:
        raise errors.StateFileError(f"Invalid JSON: {exc}.") from exc
    if not isinstance(doc, dict):
        raise errors.StateFileError("Input should hold a JSON object.")
    return doc


def _require_three_fermions(t):
    if (t.n_fermions, t.n_modes) not in ((3, 6), (3, 7)):
        raise errors.UnsupportedCaseError(
            f"({t.n_fermions}, {t.n_modes}) is not supported; {SUPPORTED}.")


def cmd_classify(args) -> int:
    t = state_io.state_from_json(_read_document(args.input))
    _require_three_fermions(t)
    tol = _tolerance(args)
    if t.n_modes == 6:
        report = classification6.classify6(t, tol)
        label = report.label.name
    else:
        report = classification7.classify7(t, tol)
        label = report.label.label
    state_io.dump(state_io.envelope("classify", {
        "class": label, "report": state_io.report_to_json(report)}, tol),
        args.out)
    return EXIT_OK


def _state_to(t, target: global_types.CoordinateKind, tol):
    _require_three_fermions(t)
    if target is global_types.CoordinateKind.CI:
        return coords.ci_from_tensor(t)
    t, _ = singles.normalize(t, tol=tol)
    return dictionary.cc_from_ci(coords.ci_from_tensor(t))


def _coordinates_to_state(coordinates):
    if state_io.coordinates_kind(coordinates).startswith("cc"):
        coordinates = dictionary.ci_from_cc(coordinates)
    if isinstance(coordinates, coords.SevenModeCI):
        return coords.tensor_from_ci7(coordinates)
    return coords.tensor_from_ci6(coordinates)


def cmd_convert(args) -> int:
    doc = _read_document(args.input)
    tol = _tolerance(args)
    if "kind" in doc:
        t = _coordinates_to_state(state_io.coordinates_from_json(doc))
    else:
        t = state_io.state_from_json(doc)
    if args.to == "state":
        _require_three_fermions(t)
        state_io.write_state(t, args.out)
        return EXIT_OK
    target = global_types.CoordinateKind[args.to.upper()]
    coordinates = state_io.coordinates_to_json(_state_to(t, target, tol))
    state_io.dump(state_io.envelope("convert", coordinates, tol), args.out)
    return EXIT_OK


def cmd_invariants(args) -> int:
    t = state_io.state_from_json(_read_document(args.input))
    _require_three_fermions(t)
    tol = _tolerance(args)
    if t.n_modes == 6:
        k = covariants6.covariant_k(t)
        payload = {"D": complex(np.trace(k @ k) / 6),
                   "K_norm": float(np.max(np.abs(k), initial=0.0))}
    else:
        state = classification7.SevenModeState(t, tol)
        _, n, _ = state.covariants
        _, rank, sv = classification7.classify7_from_invariants(
            state.invariant(), n, state.scale, tol)
        payload = {"J": state.invariant(),
                   "det_b_residual": state.cube_residual(),
                   "rank_n": rank,
                   "singular_values_n": sv,
                   "b_eigenvalues": linalg.eigvals(state.b_matrix)}
    payload = {name: state_io.to_jsonable(value)
               for name, value in payload.items()}
    state_io.dump(state_io.envelope("invariants", payload, tol), args.out)
    return EXIT_OK


def cmd_perturb(args) -> int:
    tol = _tolerance(args)
    base = global_types.Base[args.base.upper()]
    if args.grid is not None:
        path = sweep.parse_grid(args.grid)
    else:
        if args.samples < 0 or args.sphere < 0:
            raise errors.StateError("--sphere and --samples should be "
                                    "non-negative.")
        path = sweep.sample_sphere(args.sphere, args.samples,
                                   np.random.default_rng(args.seed))
    run = sweep.sweep_fast if args.fast else sweep.sweep
    records = run(base, path, tol)
    if args.format == "csv":
        sweep.write_csv(records, args.out)
    else:
        rows = [dict(zip(sweep.CSV_HEADER, r.csv_row())) for r in records]
        state_io.dump(state_io.envelope("perturb", {"records": rows}, tol),
                      args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    tol = _tolerance(args)
    trials = verify.ACCEPTANCE if args.acceptance else verify.QUICK
    results = verify.run_suite(global_types.Suite(args.suite), args.seed, tol,
                               trials)
    for result in results:
        status = "PASS" if result.passed else "FAIL"
        args.out.write(f"{status}  {result.name}: residual "
                       f"{result.residual:.3e} (tol {result.tolerance:.1e})\n")
    failed = sum(not r.passed for r in results)
    args.out.write(f"{len(results) - failed}/{len(results)} checks "
                   "passed\n")
    return EXIT_FAILED if failed else EXIT_OK


def _parse_params(text: str) -> doubles.ClosedOrbitParams:
    try:
        values = [complex(v.replace(" ", "")) for v in text.split(",")]
    except ValueError as exc:
        raise errors.StateError(f"Bad parameters '{text}'.") from exc
    if len(values) != 6:
        raise errors.StateError("--params needs six values a,b,c,d,e,f.")
    return doubles.ClosedOrbitParams(*values)


def cmd_orbit48(args) -> int:
    tol = _tolerance(args)
    payload = {}
    if args.params is not None:
        params = _parse_params(args.params)
        amplitudes = doubles.closed_orbit_doubles(params)
        t = doubles.t2_state_48(amplitudes)
        payload["quadruple_fock"] = t[doubles.VIRTUAL]
        payload["quadruple_formula"] = \
            doubles.quadruple_coefficient_formula(amplitudes)
        payload["constraint_fock"] = params.constraint_residual(
            doubles.FOCK_PATTERN)
        payload["constraint_mixed"] = params.constraint_residual(
            doubles.MIXED_PATTERN)
    elif args.input is not None:
        t = state_io.state_from_json(_read_document(args.input))
    else:
        raise errors.StateError("orbit48 needs a state file or --params.")
    residual, coordinates = doubles.subspace_membership(t)
    payload["residual"] = residual
    payload["p_coordinates"] = coordinates
    payload["reference_ratio"] = t[doubles.VIRTUAL] / t[doubles.OCCUPIED] \
        if t[doubles.OCCUPIED] != 0 else None
    payload = {name: state_io.to_jsonable(value)
               for name, value in payload.items()}
    state_io.dump(state_io.envelope("orbit48", payload, tol), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=config.DEFAULT_TAU,
                        help="relative classification tolerance")
    common.add_argument("--rank-tol", type=float, default=None,
                        help="relative singular value cut for rank "
                             "decisions (defaults to --tol)")
    common.add_argument("--out", type=argparse.FileType("w"),
                        default=sys.stdout, help="output file (stdout)")
    common.add_argument("--verbose", action="store_true",
                        help="debug logging on stderr")

    parser = argparse.ArgumentParser(
        prog="ccentangle",
        description="Coupled-cluster SLOCC classification of fermionic "
                    "states.")
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("classify", parents=[common],
                            help="entanglement class of a state file")
    p.add_argument("input", type=argparse.FileType("r"))
    p.set_defaults(func=cmd_classify)

    p = commands.add_parser("convert", parents=[common],
                            help="state <-> CI / CC coordinates")
    p.add_argument("input", type=argparse.FileType("r"))
    p.add_argument("--to", choices=["ci", "cc", "state"], required=True)
    p.set_defaults(func=cmd_convert)

    p = commands.add_parser("invariants", parents=[common],
                            help="D, or J with the rank data of N")
    p.add_argument("input", type=argparse.FileType("r"))
    p.set_defaults(func=cmd_invariants)

    p = commands.add_parser("perturb", parents=[common],
                            help="sweep triples perturbations of Psi-+")
    p.add_argument("--base", choices=["minus", "plus"], required=True)
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--grid", help='e.g. "xi=0:3:0.1,u1=0.5"')
    source.add_argument("--sphere", type=float,
                        help="radius Q of the sampled real 3-sphere")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--fast", action="store_true",
                   help="closed forms instead of full covariants")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=cmd_perturb)

    p = commands.add_parser("verify", parents=[common],
                            help="run the self-check suites")
    p.add_argument("--suite", choices=[s.value for s in global_types.Suite],
                   default=global_types.Suite.ALL.value)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--acceptance", action="store_true",
                   help="full trial counts (slower)")
    p.set_defaults(func=cmd_verify)

    p = commands.add_parser("orbit48", parents=[common],
                            help="closed-orbit subspace test, 4 in 8")
    p.add_argument("input", type=argparse.FileType("r"), nargs="?")
    p.add_argument("--params", help="closed-orbit doubles a,b,c,d,e,f")
    p.set_defaults(func=cmd_orbit48)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose
                        else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s",
                        stream=sys.stderr)
    try:
        return args.func(args)
    except errors.ReferenceDeficientError as exc:
        logger.error("%s", exc)
        return EXIT_REFERENCE
    except errors.UnsupportedCaseError as exc:
        logger.error("%s %s.", exc, SUPPORTED)
        return EXIT_UNSUPPORTED
    except (errors.StateError, errors.PreconditionError) as exc:
        logger.error("%s", exc)
        return EXIT_INPUT
    except ValueError as exc:
        logger.error("Invalid input: %s", exc)
        return EXIT_INPUT
    finally:
        for stream in (getattr(args, "input", None), args.out):
            if stream is not None and stream not in (sys.stdin, sys.stdout):
                stream.close()


if __name__ == "__main__":
    sys.exit(main())
