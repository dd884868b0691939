#!/usr/bin/env python
"""solvharm: harmonicity battery for rank-one solvmanifolds of Iwasawa type.

usage:
  solvharm.py [--seed N] [-v] build SPEC [--output PATH]
  solvharm.py curvature SPEC [--report] [--output PATH]
  solvharm.py geodesic SPEC --phi PHI --tmax T [--samples N] [--output PATH]
  solvharm.py density SPEC --grid t0,t1,nt,phi0,phi1,nphi [--steps N] [--out csv|json] [--output PATH]
  solvharm.py series SPEC [--order K] [--out json] [--output PATH]
  solvharm.py classify SPEC [--out PATH] [--processes N] [--parallel]

Every file written gets a PATH.manifest.json next to it. Exit codes: 0 success (and a
Flat, RealHyperbolic or DamekRicci verdict), 2 NotHarmonic, 3 Inconclusive, 64 usage,
65 bad input document, 70 computation failure.
"""
import argparse
import csv
import hashlib
import io
import json
import logging
import sys
import time
from fractions import Fraction

import numpy as np

from algebras import build_from_spec
from algebras import spectral_decompose
from classifier import classify
from config import DEFAULT_SETTINGS
from core import AlgebraError
from core import AlgebraSpecError
from core import SolvHarmError
from curvature import CurvatureOracle
from curvature import ledger_check
from curvature import nonpositivity_scan
from density import block_odes
from density import density_profile
from geodesics import adapted_basis
from geodesics import geodesic_samples
from series import ode_series
from series import phi2_hat
from series import sum0_constraints
from series import thirds_expansion
from series import volume_taylor
from series.ode import exact_parameters
from utils.numbers import float_string
from utils.numbers import to_jsonable

__version__ = "0.1.0"

EX_USAGE = 64
EX_DATAERR = 65
EX_SOFTWARE = 70

logger = logging.getLogger("solvharm")


class UsageError(Exception):
    pass


class Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad usage, which collides with the NotHarmonic code"""

    def error(self, message):
        raise UsageError(message)


def _grid(text: str):
    parts = text.split(",")
    if len(parts) != 6:
        raise argparse.ArgumentTypeError("grid is t0,t1,nt,phi0,phi1,nphi")
    try:
        t0, t1, nt, p0, p1, nphi = float(parts[0]), float(parts[1]), int(parts[2]), float(parts[3]), float(parts[4]), int(parts[5])
    except ValueError as err:
        raise argparse.ArgumentTypeError(f"bad grid `{text}`: {err}")
    if nt < 1 or nphi < 1:
        raise argparse.ArgumentTypeError("grid counts must be positive")
    return np.linspace(t0, t1, nt), np.linspace(p0, p1, nphi)


def make_parser() -> Parser:
    parser = Parser(prog="solvharm", description="Harmonicity battery for rank-one Iwasawa-type solvmanifolds.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--seed", type=int, default=None, help="seed of the random curvature planes")
    parser.add_argument("-v", dest="verbose", action="count", default=0, help="verbosity, repeat for debug")
    sub = parser.add_subparsers(dest="command", parser_class=Parser)
    sub.required = True

    p = sub.add_parser("build", help="validate and build an algebra")
    p.add_argument("spec")
    p.add_argument("--output", default=None)

    p = sub.add_parser("curvature", help="Ricci tensor and constants")
    p.add_argument("spec")
    p.add_argument("--report", action="store_true", help="add Ledger residuals and the nonpositivity scan")
    p.add_argument("--output", default=None)

    p = sub.add_parser("geodesic", help="velocity components along a geodesic, as CSV")
    p.add_argument("spec")
    p.add_argument("--phi", type=float, required=True)
    p.add_argument("--tmax", type=float, required=True)
    p.add_argument("--samples", type=int, default=101)
    p.add_argument("--output", default=None)

    p = sub.add_parser("density", help="volume density on a grid")
    p.add_argument("spec")
    p.add_argument("--grid", type=_grid, required=True, help="t0,t1,nt,phi0,phi1,nphi")
    p.add_argument("--steps", type=int, default=DEFAULT_SETTINGS.rk_steps)
    p.add_argument("--out", choices=("csv", "json"), default="csv")
    p.add_argument("--processes", type=int, default=1)
    p.add_argument("--output", default=None)

    p = sub.add_parser("series", help="exact phi^2 analysis of the volume density")
    p.add_argument("spec")
    p.add_argument("--order", type=int, default=DEFAULT_SETTINGS.series_order)
    p.add_argument("--out", choices=("json",), default="json")
    p.add_argument("--output", default=None)

    p = sub.add_parser("classify", help="run the constraint battery")
    p.add_argument("spec")
    p.add_argument("--out", dest="output", default=None, help="report path")
    p.add_argument("--processes", type=int, default=1)
    p.add_argument("--parallel", action="store_true", help="run the checks as independent tasks")
    return parser


def dumps(obj) -> str:
    return json.dumps(to_jsonable(obj), indent=2) + "\n"


def _build(args, settings):
    with open(args.spec, "rb") as f:
        raw = f.read()
    document = json.loads(raw.decode("utf-8"))
    alg = build_from_spec(document, settings)
    return alg, hashlib.sha256(raw).hexdigest()


def cmd_build(args, alg, settings):
    spectral = spectral_decompose(alg, settings) if not alg.is_flat_model else None
    return dumps(
        {
            "label": alg.label,
            "dim": alg.dim,
            "flat_model": alg.is_flat_model,
            "nilpotency_step": alg.nilpotency_step,
            "spectrum": spectral,
        }
    ), 0


def cmd_curvature(args, alg, settings):
    oracle = CurvatureOracle(alg, settings)
    out = {"C": oracle.einstein_constant, "H": oracle.ledger_constant, "ricci": oracle.ricci, "flat": oracle.is_flat()}
    if args.report:
        out["ledger"] = ledger_check(alg, oracle, settings)
        out["nonpositivity"] = nonpositivity_scan(alg, oracle, settings)
    return dumps(out), 0


def cmd_geodesic(args, alg, settings):
    if args.samples < 2:
        raise UsageError("--samples must be at least 2")
    lam = spectral_decompose(alg, settings).lam
    t, q, Phi = geodesic_samples(lam, args.phi, args.tmax, args.samples)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(("t", "q", "Phi"))
    for row in zip(t, q, Phi):
        writer.writerow([float_string(x) for x in row])
    return buf.getvalue(), 0


def cmd_density(args, alg, settings):
    t, phi = args.grid
    profile = density_profile(alg, t, phi, steps=args.steps, processes=args.processes, settings=settings)
    if args.out == "json":
        return dumps(profile), 0
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(("t", "phi", "V", "Vratio"))
    for row in profile.rows():
        writer.writerow([float_string(x) for x in row])
    return buf.getvalue(), 0


def cmd_series(args, alg, settings):
    basis = adapted_basis(alg, settings=settings)
    blocks = []
    for block, count in block_odes(basis):
        params = exact_parameters(block, settings)
        solution = ode_series(block, args.order, settings)
        blocks.append(
            {
                "kind": block.kind,
                "count": count,
                "parameters": params,
                "hat": phi2_hat(block.kind, **params),
                "phi2": solution.phi2,
            }
        )
    out = {
        "order": args.order,
        "blocks": blocks,
        "coth": sum0_constraints(basis, settings),
        "volume_phi2": volume_taylor(basis, args.order, settings),
    }
    ratios = spectral_decompose(alg, settings).exact_ratios
    if ratios is not None and set(ratios) == {Fraction(1, 3), Fraction(2, 3), Fraction(1)}:
        out["thirds"] = thirds_expansion(max(args.order, 9), settings=settings)
    return dumps(out), 0


def cmd_classify(args, alg, settings):
    report = classify(alg, settings, processes=args.processes, parallel=args.parallel)
    return dumps(report), report.exit_code


COMMANDS = {
    "build": cmd_build,
    "curvature": cmd_curvature,
    "geodesic": cmd_geodesic,
    "density": cmd_density,
    "series": cmd_series,
    "classify": cmd_classify,
}


def _params(args) -> dict:
    skip = {"command", "verbose", "seed", "spec", "output"}
    params = {}
    for key, val in sorted(vars(args).items()):
        if key in skip:
            continue
        if key == "grid":
            val = [list(val[0]), list(val[1])]
        params[key] = val
    return params


def write_output(path, text, args, digest, seed, elapsed) -> None:
    with open(path, "w", newline="") as f:
        f.write(text)
    manifest = {
        "version": __version__,
        "input_sha256": digest,
        "subcommand": args.command,
        "parameters": _params(args),
        "seed": seed,
        "wall_time": elapsed,
    }
    with open(path + ".manifest.json", "w") as f:
        f.write(dumps(manifest))


def main(argv=None) -> int:
    try:
        args = make_parser().parse_args(argv)
    except UsageError as err:
        sys.stderr.write(f"solvharm: {err}\n")
        return EX_USAGE

    level = (logging.WARNING, logging.INFO, logging.DEBUG)[min(args.verbose, 2)]
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    settings = DEFAULT_SETTINGS if args.seed is None else DEFAULT_SETTINGS.with_seed(args.seed)

    start = time.time()
    try:
        alg, digest = _build(args, settings)
    except OSError as err:
        sys.stderr.write(f"solvharm: cannot read {args.spec}: {err}\n")
        return EX_USAGE
    except (json.JSONDecodeError, UnicodeDecodeError) as err:
        sys.stderr.write(f"solvharm: {args.spec} is not JSON: {err}\n")
        return EX_DATAERR
    except (AlgebraSpecError, AlgebraError) as err:
        sys.stderr.write(f"solvharm: rejected {args.spec}: {err}\n")
        return EX_DATAERR

    try:
        text, code = COMMANDS[args.command](args, alg, settings)
    except UsageError as err:
        sys.stderr.write(f"solvharm: {err}\n")
        return EX_USAGE
    except (SolvHarmError, ArithmeticError, ValueError, np.linalg.LinAlgError) as err:
        logger.error("%s failed: %s: %s", args.command, type(err).__name__, err)
        return EX_SOFTWARE

    if args.output:
        write_output(args.output, text, args, digest, settings.seed, time.time() - start)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
