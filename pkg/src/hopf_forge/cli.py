"""Command-line interface: ``hopf-forge <subcommand> DATUM [options]``.

Exit codes: 0 all verdicts pass, 1 input or validation error, 2 a
mathematical verdict failed (the report is still written), 3 a resource cap
was hit.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .abelian_group import Character
from .cocycles import CocycleError, assemble_sigma, graded_parts, is_multiplicative_cocycle
from .datum_io import DatumSyntaxError, DatumValidationError, parse_datum_file
from .deform import DeformationError, run_deformation, singer_deformation, taft_dual_report
from .hopf_core import DIM_CAP, DimensionCapExceeded, PbwHopfAlgebra, verify_hopf_axioms
from .nichols import (
    DiagonalBraiding,
    SymmetrizerCapExceeded,
    expected_hilbert_series,
    matsumoto_check,
    nichols_hilbert_series,
)

EXIT_OK, EXIT_INPUT, EXIT_VERDICT, EXIT_CAP = 0, 1, 2, 3
HARD_DIM_CAP = 20000
HARD_MAX_DEGREE = 24
DEFAULT_SEED = 0

SUBCOMMANDS = ("check", "build", "verify-cocycle", "deform", "nichols-dims", "dual", "singer")


def canonical_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=1, ensure_ascii=True) + "\n"


def _all_true(tree) -> bool:
    if isinstance(tree, bool):
        return tree
    if isinstance(tree, dict):
        return all(_all_true(v) for v in tree.values())
    return True


# ---------------------------------------------------------------------------
# subcommands; each returns (report, passed)

def cmd_check(d, args):
    return {"datum_hash": d.datum_hash(), "valid": True, "N": d.N, "dimension": d.dimension}, True


def cmd_build(d, args):
    A = PbwHopfAlgebra(d, dim_cap=args.dim_cap)
    axioms = verify_hopf_axioms(A)
    report = {"datum_hash": d.datum_hash(), "structure": A.structure_constants(), "hopf_axioms": axioms.to_dict()}
    return report, axioms.passed


def cmd_verify_cocycle(d, args):
    A = PbwHopfAlgebra(d.with_parameters(lam={}, mu=[0] * d.theta), dim_cap=args.dim_cap)
    asm = assemble_sigma(d, A)
    verdict = is_multiplicative_cocycle(asm.sigma)
    try:
        graded = {"sigma0_is_counit": True, **graded_parts(asm.sigma).to_dict()}
    except ValueError:
        graded = {"sigma0_is_counit": False}
    report = {
        "datum_hash": d.datum_hash(),
        "cocycle": verdict.to_dict(),
        "graded": graded,
        "sigma": asm.sigma.to_json_dict("sigma", d.datum_hash()),
    }
    passed = verdict.passed and graded["sigma0_is_counit"] and graded.get("infinitesimal_is_hochschild") in (True, None)
    return report, passed


def cmd_deform(d, args):
    rep = run_deformation(d, dim_cap=args.dim_cap)
    return rep.to_dict(include_runtime=args.timings), rep.passed


def cmd_nichols_dims(d, args):
    B = DiagonalBraiding.from_datum(d)
    ranks = nichols_hilbert_series(B, args.max_degree)
    expected = expected_hilbert_series(d.N, args.max_degree)
    report = {
        "datum_hash": d.datum_hash(),
        "max_degree": args.max_degree,
        "ranks": ranks,
        "hilbert": [{"degree": n, "rank": r} for n, r in enumerate(ranks)],
        "expected": expected,
        "matches_expected": ranks == expected,
        "seed": args.seed,
    }
    if args.max_degree >= 2:
        deg = min(args.max_degree, 5)
        report["matsumoto_degree"] = deg
        report["matsumoto"] = matsumoto_check(deg, B, seed=args.seed)
    passed = ranks == expected and report.get("matsumoto", True)
    return report, passed


def cmd_dual(d, args):
    report = taft_dual_report(d)
    report["datum_hash"] = d.datum_hash()
    findings = report.pop("dual_basis_expansion")
    passed = _all_true(report) and findings["phi"]["matches_zeta"]
    report["dual_basis_expansion"] = findings
    return report, passed


def cmd_singer(d, args):
    phi = None
    if args.phi is not None:
        exps = tuple(int(t) for t in args.phi.split(","))
        if len(exps) != len(d.group.invariant_factors):
            raise ValueError(f"--phi needs {len(d.group.invariant_factors)} exponents")
        phi = Character(exps)
    report = singer_deformation(d, phi)
    report["datum_hash"] = d.datum_hash()
    return report, report["pass"]


_HANDLERS = {
    "check": cmd_check,
    "build": cmd_build,
    "verify-cocycle": cmd_verify_cocycle,
    "deform": cmd_deform,
    "nichols-dims": cmd_nichols_dims,
    "dual": cmd_dual,
    "singer": cmd_singer,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hopf-forge", description="Exact verification of cocycle deformations.")
    sub = p.add_subparsers(dest="subcommand", required=True)
    for name in SUBCOMMANDS:
        s = sub.add_parser(name)
        s.add_argument("datum", help="datum file")
        s.add_argument("--out", help="write the JSON report here instead of stdout")
        s.add_argument("--max-degree", type=int, default=None)
        s.add_argument("--dim-cap", type=int, default=DIM_CAP)
        s.add_argument("--seed", type=int, default=DEFAULT_SEED)
        s.add_argument("--quiet", action="store_true")
        s.add_argument("--timings", action="store_true", help="add wall-clock timings (breaks byte stability)")
        if name == "singer":
            s.add_argument("--phi", help="character of G as comma-separated exponents")
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK

    def say(msg):
        if not args.quiet:
            print(msg, file=sys.stderr)

    if not 1 <= args.dim_cap <= HARD_DIM_CAP:
        say(f"error: --dim-cap must lie in 1..{HARD_DIM_CAP}")
        return EXIT_INPUT
    if args.max_degree is None:
        args.max_degree = 4
    if not 0 <= args.max_degree <= HARD_MAX_DEGREE:
        say(f"error: --max-degree must lie in 0..{HARD_MAX_DEGREE}")
        return EXIT_INPUT

    try:
        d = parse_datum_file(args.datum)
    except OSError as exc:
        say(f"error: cannot read {args.datum}: {exc.strerror or exc}")
        return EXIT_INPUT
    except DatumSyntaxError as exc:
        say(f"error: {args.datum}: {exc}")
        return EXIT_INPUT
    except DatumValidationError as exc:
        if args.subcommand == "check" and not args.quiet:
            print(canonical_json({"valid": False, "violations": exc.violations}), end="")
        for v in exc.violations:
            say(f"violation: {v}")
        return EXIT_INPUT

    if d.dimension > args.dim_cap:
        say(f"error: dimension {d.dimension} exceeds cap {args.dim_cap}")
        return EXIT_CAP

    t0 = time.perf_counter()
    try:
        report, passed = _HANDLERS[args.subcommand](d, args)
    except (DimensionCapExceeded, SymmetrizerCapExceeded) as exc:
        say(f"cap exceeded: {exc}")
        return EXIT_CAP
    except (DeformationError, CocycleError, ValueError) as exc:
        say(f"error: {exc}")
        return EXIT_INPUT
    report["subcommand"] = args.subcommand
    report["pass"] = bool(passed)
    if args.timings:
        report["wall_ms"] = int((time.perf_counter() - t0) * 1000)

    text = canonical_json(report)
    if args.out:
        Path(args.out).write_text(text)
        say(f"{args.subcommand}: {'pass' if passed else 'FAIL'} -> {args.out}")
    else:
        sys.stdout.write(text)
    return EXIT_OK if passed else EXIT_VERDICT


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
