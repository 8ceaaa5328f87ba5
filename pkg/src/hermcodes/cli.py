"""Command-line front end.

Subcommands: ``params`` (closed-form vs computed code parameters),
``verify`` (named invariant suites), ``oracle`` (exhaustive intersection
maximization, shardable), ``construct`` (extremal witness files), and
``merge`` (combine sharded oracle reports).

Reports are JSON with a ``schema`` field, written to stdout or ``--out``.
Output is a pure function of the configuration (seed included): reruns are
byte-identical, and merged shard reports are byte-identical with the
unsharded run.  Exit codes: 0 pass, 1 invariant failure or parameter
mismatch, 2 budget refusal, 3 unknown bound.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import bounds as bnd
from . import codes as cds
from .field import FieldCtx, make_field
from .forms import HomogeneousForm, form_values, monomial_basis
from .hermitian import HermitianVariety, make_nondegenerate, make_standard_cone
from .limits import CLASS_BUDGET, EVAL_BUDGET, MAXIMIZER_CAP, BudgetExceededError
from .projspace import enumerate_points
from .verify import run_suite

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_BUDGET = 2
EXIT_UNKNOWN = 3


def _emit(report: dict, out: str | None) -> None:
    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _config(ctx: FieldCtx, args, **extra) -> dict:
    cfg = {
        "p": ctx.p,
        "e": ctx.e,
        "q": ctx.q,
        "q2": ctx.q2,
        "modulus": list(ctx.modulus),
    }
    for key in ("n", "d"):
        if getattr(args, key, None) is not None:
            cfg[key] = getattr(args, key)
    cfg.update(extra)
    return cfg


def _parse_shard(text: str) -> tuple[int, int]:
    try:
        index, total = text.split("/")
        return int(index), int(total)
    except ValueError as exc:
        raise argparse.ArgumentTypeError("shard must look like INDEX/TOTAL, e.g. 0/4") from exc


# ---------------------------------------------------------------------------
# params
# ---------------------------------------------------------------------------


def cmd_params(args) -> int:
    ctx = make_field(args.p, args.e)
    theory = cds.theoretical_parameters(args.n, args.d, ctx.q, args.assume_conjecture)
    report = {
        "schema": 1,
        "command": "params",
        "config": _config(ctx, args, assume_conjecture=args.assume_conjecture),
        "theoretical": {
            "m": theory.m,
            "k": theory.k,
            "dmin": theory.dmin,
            "dmin_kind": theory.dmin_kind,
            "provenance": theory.provenance,
            "source": theory.source,
        },
    }
    if theory.dmin is None:
        report["computed"] = None
        report["note"] = "the bound this distance rests on is an open problem"
        _emit(report, args.out)
        return EXIT_UNKNOWN
    try:
        cone = make_standard_cone(ctx, args.n)
        code = cds.build_code(ctx, cone, args.d)
    except BudgetExceededError as exc:
        report["computed"] = None
        report["note"] = f"variety enumeration refused: {exc}"
        _emit(report, args.out)
        return EXIT_BUDGET
    budget = args.budget if args.budget is not None else CLASS_BUDGET
    try:
        computed = cds.min_distance(ctx, code, "exhaustive_messages", budget=budget)
        if args.weights_csv:
            dist = cds.weight_distribution(ctx, code, budget=budget)
            with open(args.weights_csv, "w", encoding="utf-8") as fh:
                fh.write("weight,count\n")
                for w in sorted(dist):
                    fh.write(f"{w},{dist[w]}\n")
    except BudgetExceededError:
        if args.n > 4:
            report["computed"] = None
            report["note"] = "exhaustive scan over budget and no witness construction for n > 4"
            _emit(report, args.out)
            return EXIT_BUDGET
        witness = bnd.construct_extremal_form(ctx, cone, args.d)
        computed = cds.min_distance(ctx, code, "witness_only", witnesses=[witness.form])
    if args.generator_out:
        cds.write_generator_matrix(code, args.generator_out)
    report["computed"] = {
        "m": computed.m,
        "k": computed.k,
        "dmin": computed.dmin,
        "dmin_status": computed.dmin_status,
    }
    match = {
        "m": computed.m == theory.m,
        "k": computed.k == theory.k,
        "dmin": None if theory.dmin is None else computed.dmin == theory.dmin,
    }
    report["match"] = match
    _emit(report, args.out)
    if theory.dmin is None:
        return EXIT_UNKNOWN
    if not (match["m"] and match["k"] and match["dmin"]):
        return EXIT_FAIL
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def cmd_verify(args) -> int:
    ctx = make_field(args.p, args.e)
    checks = run_suite(args.suite, ctx, n=args.n, d=args.d, seed=args.seed)
    report = {
        "schema": 1,
        "command": "verify",
        "config": _config(ctx, args, suite=args.suite, seed=args.seed),
        "checks": [
            {"name": c.name, "passed": c.passed, "detail": c.detail} for c in checks
        ],
        "passed": all(c.passed for c in checks),
    }
    _emit(report, args.out)
    return EXIT_OK if report["passed"] else EXIT_FAIL


# ---------------------------------------------------------------------------
# oracle and merge
# ---------------------------------------------------------------------------


def _oracle_target(ctx: FieldCtx, variety: str, n: int):
    if variety == "cone":
        return make_standard_cone(ctx, n)
    if variety == "nondegenerate":
        return make_nondegenerate(ctx, n)
    if variety == "space":
        return enumerate_points(ctx, n)
    raise ValueError(f"unknown variety {variety!r}")


def _oracle_bound(ctx: FieldCtx, variety: str, n: int, d: int, assume: bool) -> bnd.BoundValue:
    if variety == "cone":
        if n == 2:
            return bnd.BoundValue(bnd.plane_cone_bound(d, ctx.q), "theorem", "plane-cone")
        return bnd.cone_bound(n, d, ctx.q, assume_conjecture=assume)
    if variety == "nondegenerate":
        return bnd.known_max_intersection(n, d, ctx.q)
    return bnd.BoundValue(bnd.serre_bound(n, d, ctx.q2), "theorem", "serre")


def _characterize(ctx: FieldCtx, target, result: bnd.OracleResult) -> dict | None:
    if not isinstance(target, HermitianVariety) or not target.is_rank_n_cone:
        return None
    basis = monomial_basis(result.n, result.d)
    line_counts = set()
    union_ok = True
    cone_ok = True
    for coeffs in result.maximizers:
        form = HomogeneousForm(basis=basis, coeffs=coeffs)
        ok, lines = bnd.check_union_of_cone_lines(ctx, target, form)
        union_ok &= ok
        line_counts.add(lines)
        cone_ok &= bnd.is_cone_with_vertex(ctx, form, target.vertex)
    return {
        "union_of_generator_lines": union_ok,
        "generator_lines": sorted(line_counts),
        "cone_with_vertex": cone_ok,
    }


def _scan_payload(result: bnd.OracleResult) -> dict:
    return {
        "lo": result.lo,
        "hi": result.hi,
        "total_forms": result.total_forms,
        "k": result.k,
        "n_points": result.n_points,
        "cap": result.cap,
    }


def _result_payload(result: bnd.OracleResult) -> dict:
    return {
        "max_count": result.max_count,
        "n_maximizers": result.n_maximizers,
        "maximizers": [list(c) for c in result.maximizers],
    }


def _full_oracle_report(ctx: FieldCtx, args, target, result: bnd.OracleResult) -> tuple[dict, int]:
    bound = _oracle_bound(ctx, args.variety, args.n, args.d, args.assume_conjecture)
    report = {
        "schema": 1,
        "command": "oracle",
        "config": _config(ctx, args, variety=args.variety),
        "scan": _scan_payload(result),
        "result": _result_payload(result),
        "bound": {
            "value": bound.value,
            "provenance": bound.provenance,
            "source": bound.source,
        },
        "matches_bound": None if bound.is_unknown else result.max_count == bound.value,
        "characterization": _characterize(ctx, target, result),
    }
    if bound.is_unknown:
        return report, EXIT_UNKNOWN
    if result.max_count > bound.value:
        return report, EXIT_FAIL
    return report, EXIT_OK


def cmd_oracle(args) -> int:
    ctx = make_field(args.p, args.e)
    target = _oracle_target(ctx, args.variety, args.n)
    budget = args.budget if args.budget is not None else EVAL_BUDGET
    try:
        result = bnd.bruteforce_max_intersection(
            ctx, target, args.n, args.d, shard=args.shard, budget=budget, cap=args.cap
        )
    except BudgetExceededError as exc:
        _emit(
            {
                "schema": 1,
                "command": "oracle",
                "config": _config(ctx, args, variety=args.variety),
                "error": str(exc),
            },
            args.out,
        )
        return EXIT_BUDGET
    if args.shard != (0, 1):
        report = {
            "schema": 1,
            "command": "oracle",
            "partial": True,
            "config": _config(ctx, args, variety=args.variety),
            "shard": {"index": args.shard[0], "total": args.shard[1]},
            "scan": _scan_payload(result),
            "result": _result_payload(result),
        }
        _emit(report, args.out)
        return EXIT_OK
    report, code = _full_oracle_report(ctx, args, target, result)
    _emit(report, args.out)
    return code


def cmd_merge(args) -> int:
    payloads = []
    for path in args.partials:
        with open(path, "r", encoding="utf-8") as fh:
            payloads.append(json.load(fh))
    configs = [p["config"] for p in payloads]
    if any(c != configs[0] for c in configs):
        sys.stderr.write("merge: partial reports disagree on configuration\n")
        return EXIT_FAIL
    cfg = configs[0]
    parts = [
        bnd.OracleResult(
            n=cfg["n"],
            d=cfg["d"],
            q2=cfg["q2"],
            k=p["scan"]["k"],
            n_points=p["scan"]["n_points"],
            total_forms=p["scan"]["total_forms"],
            lo=p["scan"]["lo"],
            hi=p["scan"]["hi"],
            max_count=p["result"]["max_count"],
            n_maximizers=p["result"]["n_maximizers"],
            maximizers=tuple(tuple(c) for c in p["result"]["maximizers"]),
            cap=p["scan"]["cap"],
        )
        for p in payloads
    ]
    merged = bnd.merge_oracle_results(parts)
    ctx = make_field(cfg["p"], cfg["e"])
    if merged.lo != 0 or merged.hi != merged.total_forms:
        # still a partial range; emit a re-mergeable partial report
        report = {
            "schema": 1,
            "command": "oracle",
            "partial": True,
            "config": cfg,
            "merged": True,
            "scan": _scan_payload(merged),
            "result": _result_payload(merged),
        }
        _emit(report, args.out)
        return EXIT_OK
    ns = argparse.Namespace(
        n=cfg["n"],
        d=cfg["d"],
        variety=cfg["variety"],
        assume_conjecture=args.assume_conjecture,
    )
    target = _oracle_target(ctx, cfg["variety"], cfg["n"])
    report, code = _full_oracle_report(ctx, ns, target, merged)
    _emit(report, args.out)
    return code


# ---------------------------------------------------------------------------
# construct
# ---------------------------------------------------------------------------


def cmd_construct(args) -> int:
    ctx = make_field(args.p, args.e)
    cone = make_standard_cone(ctx, args.n)
    witness = bnd.construct_extremal_form(ctx, cone, args.d)
    code = cds.build_code(ctx, cone, args.d)
    theory = cds.theoretical_parameters(args.n, args.d, ctx.q)
    values = form_values(ctx, witness.form, cone.points)
    support = [int(i) for i in np.nonzero(values)[0]]
    weight = len(support)
    report = {
        "schema": 1,
        "command": "construct",
        "config": _config(ctx, args),
        "witness": {
            "description": witness.description,
            "predicted_count": witness.predicted_count,
            "intersection_count": code.m - weight,
            "form": {"n": args.n, "d": args.d, "coeffs": list(witness.form.coeffs)},
        },
        "code": {
            "m": code.m,
            "k": cds.code_dimension(ctx, code),
            "theoretical_dmin": theory.dmin,
            "witness_weight": weight,
            "matches_theoretical": weight == theory.dmin,
            "codeword_support": support,
        },
    }
    _emit(report, args.out)
    return EXIT_OK if weight == theory.dmin else EXIT_FAIL


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def _add_field_args(sub) -> None:
    sub.add_argument("--p", type=int, required=True, help="prime characteristic")
    sub.add_argument("--e", type=int, default=1, help="exponent, q = p^e (default 1)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hermcodes",
        description="Hermitian-variety functional codes: parameters, bounds, witnesses",
    )
    subs = parser.add_subparsers(dest="cmd", required=True)

    p = subs.add_parser("params", help="closed-form vs computed code parameters")
    _add_field_args(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--budget", type=int, default=None, help="message-class budget override")
    p.add_argument("--assume-conjecture", action="store_true")
    p.add_argument("--weights-csv", default=None, help="write the weight distribution CSV here")
    p.add_argument("--generator-out", default=None, help="write the generator matrix file here")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_params)

    v = subs.add_parser("verify", help="run a named invariant suite")
    _add_field_args(v)
    v.add_argument(
        "--suite",
        required=True,
        choices=["field", "projspace", "hermitian", "bounds", "codes", "all"],
    )
    v.add_argument("--n", type=int, default=None)
    v.add_argument("--d", type=int, default=None)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--out", default=None)
    v.set_defaults(func=cmd_verify)

    o = subs.add_parser("oracle", help="exhaustive intersection maximization")
    _add_field_args(o)
    o.add_argument("--n", type=int, required=True)
    o.add_argument("--d", type=int, required=True)
    o.add_argument(
        "--variety", choices=["cone", "nondegenerate", "space"], default="cone"
    )
    o.add_argument("--shard", type=_parse_shard, default=(0, 1), metavar="I/T")
    o.add_argument("--budget", type=int, default=None, help="evaluation budget override")
    o.add_argument("--cap", type=int, default=MAXIMIZER_CAP)
    o.add_argument("--assume-conjecture", action="store_true")
    o.add_argument("--out", default=None)
    o.set_defaults(func=cmd_oracle)

    c = subs.add_parser("construct", help="build an extremal witness form")
    _add_field_args(c)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--d", type=int, required=True)
    c.add_argument("--out", default=None)
    c.set_defaults(func=cmd_construct)

    m = subs.add_parser("merge", help="merge sharded oracle reports")
    m.add_argument("partials", nargs="+", help="partial oracle report JSON files")
    m.add_argument("--assume-conjecture", action="store_true")
    m.add_argument("--out", default=None)
    m.set_defaults(func=cmd_merge)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        sys.stderr.write(f"budget refusal: {exc}\n")
        return EXIT_BUDGET
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_FAIL


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
