"""Command-line front end.

    cupcsa validate DATUM
    cupcsa build DATUM [--report OUT] [--check-level fast|full]
    cupcsa oracle DATUM [--report OUT] [--corrupt I J]
    cupcsa reduce DATUM [--out OUT]
    cupcsa split2 (DATUM | --pair A B) [--height H]
    cupcsa examples list | emit NAME

DATUM is a path to a JSON datum or the name of a built-in example.
Exit codes: 0 success, 1 validation or mathematical failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import brauer2, catalog
from .crossed import run_oracle
from .datum import (EQUAL_KERNELS, check_degree_bound, check_minimal, detect_special, load_datum,
                    reduce_datum, subgroups)
from .errors import CupError, MismatchReport, RewritingCycle, UnknownExample
from .theorem import (build_D, conjugation_check, nonzero_columns, property_checks, run_theorem,
                      verify_central_simple, verify_min_poly)

FAST_SAMPLES = 200


def verdict(ok: bool, reason: str = "") -> dict:
    return {"status": "pass" if ok else "fail", "reason": reason}


def skipped(reason: str) -> dict:
    return {"status": "skipped", "reason": reason}


def resolve_datum(arg: str):
    path = Path(arg)
    if not path.exists() and arg in catalog.CATALOG + catalog.EXTRAS:
        return load_datum(catalog.load_document(arg))
    return load_datum(path)


def datum_summary(d) -> dict:
    from .fieldtower import fixed_subspace
    return {
        "name": d.name,
        "p": d.p,
        "degree_L": d.degree,
        "group_order": d.order,
        "degree_K": len(fixed_subspace(d.group)),
    }


class _Timer:
    def __init__(self):
        self.t = {}

    def __call__(self, key, fn, *args, **kw):
        start = time.perf_counter()
        try:
            return fn(*args, **kw)
        finally:
            self.t[key] = round(time.perf_counter() - start, 4)


def _associativity_triples(dim: int, full: bool):
    if full:
        return None
    rng = random.Random(0)
    return [(rng.randrange(dim), rng.randrange(dim), rng.randrange(dim)) for _ in range(FAST_SAMPLES)]


def _split_reason(v) -> str:
    if v.split:
        return "split" + (f", norm witness {list(v.witness)}" if v.witness else "")
    bad = [str(k) for k, x in v.symbols.items() if x == -1]
    return "nonsplit at " + ", ".join(bad)


def build_report(d, check_level: str = "full", height: int = brauer2.DEFAULT_HEIGHT, timer=None):
    """Run the pipeline; returns (report, context, subgroups, datum used, ok)."""
    timer = timer or _Timer()
    full = check_level == "full"
    report = {"datum": datum_summary(d)}
    sub = timer("subgroups", subgroups, d)
    mini = check_minimal(d, sub)
    report["minimality"] = {"tag": mini.tag, "N": sorted(mini.N)}
    if not mini.minimal:
        d = timer("reduce", reduce_datum, d, sub)
        sub = subgroups(d)
        report["minimality"]["reduced_to"] = datum_summary(d)
    check_degree_bound(d)
    report["subgroups"] = sub.to_json()
    special = detect_special(d, sub)
    report["special_case"] = special
    verdicts = {}
    report["verdicts"] = verdicts
    ok = True

    if special == EQUAL_KERNELS:
        if d.p > 2:
            report["class"] = "trivial"
            verdicts["cup_product"] = verdict(True, "N_f = N_g with p > 2: the cup product class is trivial")
            report["algebra"] = None
            report["splitness"] = None
        else:
            q, v = timer("split2", brauer2.equal_kernel_quaternion, d, height)
            report["class"] = "quaternion"
            report["presentation"] = q.to_json()
            report["splitness"] = v.to_json()
            verdicts["cup_product"] = verdict(True, "N_f = N_g with p = 2: quaternion algebra (a, -1)")
            verdicts["splitness"] = verdict(True, _split_reason(v))
        return report, None, sub, d, ok

    ctx = timer("theorem", run_theorem, d, sub)
    report["context"] = ctx.to_json()
    props = property_checks(d, sub, ctx)
    verdicts["properties"] = verdict(all(props.values()),
                                     ", ".join(k for k, v in props.items() if not v) or "all hold")
    report["properties"] = props
    try:
        D = timer("build_D", build_D, ctx)
    except RewritingCycle as exc:
        verdicts["algebra"] = verdict(False, str(exc))
        report["algebra"] = None
        return report, ctx, sub, d, False
    report["algebra"] = {"labels": D.labels, "dimension": D.dim}
    verdicts["unit"] = verdict(D.check_unit())
    try:
        n_assoc = timer("associativity", D.check_associativity, _associativity_triples(D.dim, full))
        verdicts["associativity"] = verdict(True, f"{n_assoc} basis triples")
    except CupError as exc:
        verdicts["associativity"] = verdict(False, str(exc))
    cs = timer("central_simple", verify_central_simple, D, d.p)
    report["central_simple"] = cs
    verdicts["dimension"] = verdict(cs["dimension_ok"], f"dim = {cs['dimension']}")
    verdicts["center"] = verdict(cs["center_dimension"] == 1, f"center dimension {cs['center_dimension']}")
    verdicts["trace_form"] = verdict(cs["trace_form_rank"] == D.dim, f"rank {cs['trace_form_rank']}")
    mp = timer("min_poly", verify_min_poly, D, ctx)
    report["min_poly"] = mp
    verdicts["min_poly"] = verdict(mp["equal"] and mp["degree_ok"], "minpoly(z) = minpoly(alpha) over K")
    if nonzero_columns(ctx.c) == [1] and all(ctx.K.contains(ctx.m[i][d.p - 1]) for i in range(d.p)):
        verdicts["cyclic_relation"] = verdict(conjugation_check(D, ctx), "z beta z^-1 = rho^-1(beta)")
    else:
        verdicts["cyclic_relation"] = skipped("c is not of cyclic shape")

    if d.p == 2:
        try:
            q = brauer2.normalize_quaternion(ctx)
            v = timer("split2", brauer2.is_split, q, height)
            report["presentation"] = q.to_json()
            report["splitness"] = v.to_json()
            verdicts["splitness"] = verdict(True, _split_reason(v))
        except CupError as exc:
            verdicts["splitness"] = verdict(False, str(exc))
    else:
        report["splitness"] = None
        verdicts["splitness"] = skipped("undecided (structure verified)")
    ok = all(v["status"] != "fail" for v in verdicts.values())
    return report, ctx, sub, d, ok


def _emit(report: dict, out: str | None, timer: _Timer) -> None:
    report["timings"] = timer.t
    text = json.dumps(report, indent=2) + "\n"
    if out:
        Path(out).write_text(text)
        for k, v in report.get("verdicts", {}).items():
            print(f"{k}: {v['status']}" + (f" ({v['reason']})" if v["reason"] else ""))
    else:
        sys.stdout.write(text)


def cmd_validate(args) -> int:
    d = resolve_datum(args.datum)
    sub = subgroups(d)
    mini = check_minimal(d, sub)
    special = detect_special(d, sub)
    print(f"valid datum: p={d.p}, [L:Q]={d.degree}, |G|={d.order}, {special}")
    if not mini.minimal:
        print(f"warning: NonMinimal (|N| = {len(mini.N)}); run `reduce` to pass to the fixed field of N")
        return 0
    check_degree_bound(d)
    print("minimal")
    return 0


def cmd_build(args) -> int:
    d = resolve_datum(args.datum)
    timer = _Timer()
    report, _, _, _, ok = build_report(d, args.check_level, args.height, timer)
    _emit(report, args.report, timer)
    return 0 if ok else 1


def cmd_oracle(args) -> int:
    d = resolve_datum(args.datum)
    timer = _Timer()
    report, ctx, sub, d, ok = build_report(d, args.check_level, args.height, timer)
    if ctx is None:
        print("error: the oracle needs a datum with N_f != N_g", file=sys.stderr)
        return 1
    p = d.p
    corrupt_at = None
    if args.corrupt:
        i, j = args.corrupt
        if not (0 <= i < p and 0 <= j < p):
            print(f"error: --corrupt indices must lie in [0, {p})", file=sys.stderr)
            return 2
        corrupt_at = (i, j)
    try:
        oracle = timer("oracle", run_oracle, d, sub, ctx, args.check_level == "full", corrupt_at)
        report["oracle"] = oracle
        report["verdicts"]["oracle"] = verdict(True, "structure constants match the commutant")
        report["verdicts"]["z_powers"] = verdict(oracle["z_power_check"]["pass"])
    except MismatchReport as exc:
        report["oracle"] = {"mismatch": str(exc), "witness": exc.witness}
        report["verdicts"]["oracle"] = verdict(False, str(exc))
    ok = all(v["status"] != "fail" for v in report["verdicts"].values())
    _emit(report, args.report, timer)
    return 0 if ok else 1


def cmd_reduce(args) -> int:
    d = resolve_datum(args.datum)
    r = reduce_datum(d)
    text = json.dumps(r.to_json(), indent=2) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_split2(args) -> int:
    if args.pair:
        try:
            a, b = (Fraction(x) for x in args.pair)
        except (ValueError, ZeroDivisionError):
            print("error: --pair needs two rationals", file=sys.stderr)
            return 2
        if a == 0 or b == 0:
            print("error: --pair entries must be nonzero", file=sys.stderr)
            return 2
        q = brauer2.QuaternionPresentation(a, b)
        v = brauer2.is_split(q, args.height)
        out = {"presentation": q.to_json(), "splitness": v.to_json()}
    elif args.datum:
        d = resolve_datum(args.datum)
        if d.p != 2:
            print("error: split2 needs p = 2", file=sys.stderr)
            return 1
        report, _, _, _, _ = build_report(d, "fast", args.height)
        out = {"presentation": report.get("presentation"), "splitness": report.get("splitness")}
    else:
        print("error: give a datum or --pair A B", file=sys.stderr)
        return 2
    sys.stdout.write(json.dumps(out, indent=2) + "\n")
    return 0


def cmd_examples(args) -> int:
    if args.action == "list":
        for name in catalog.list_examples():
            print(f"{name}\t{catalog.DESCRIPTIONS[name]}")
        return 0
    if not args.name:
        print("error: emit needs an example name", file=sys.stderr)
        return 2
    try:
        sys.stdout.write(catalog.emit(args.name))
    except UnknownExample as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cupcsa", description="Cup-product algebras from Galois data.")
    sp = ap.add_subparsers(dest="command", required=True)

    def common(p, report=True):
        p.add_argument("datum", help="datum JSON path or built-in example name")
        if report:
            p.add_argument("--report", help="write the JSON report here")
            p.add_argument("--check-level", choices=("fast", "full"), default="full")
            p.add_argument("--height", type=int, default=brauer2.DEFAULT_HEIGHT,
                           help="norm search bound")

    p = sp.add_parser("validate", help="validate a datum")
    common(p, report=False)
    p.set_defaults(fn=cmd_validate)

    p = sp.add_parser("build", help="run the construction and structural checks")
    common(p)
    p.set_defaults(fn=cmd_build)

    p = sp.add_parser("oracle", help="compare against the crossed-product commutant")
    common(p)
    p.add_argument("--corrupt", nargs=2, type=int, metavar=("I", "J"),
                   help="add 1 to c[I][J] before comparing (negative control)")
    p.set_defaults(fn=cmd_oracle)

    p = sp.add_parser("reduce", help="pass to the fixed field of N")
    common(p, report=False)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_reduce)

    p = sp.add_parser("split2", help="splitness of a p = 2 algebra")
    p.add_argument("datum", nargs="?")
    p.add_argument("--pair", nargs=2, metavar=("A", "B"))
    p.add_argument("--height", type=int, default=brauer2.DEFAULT_HEIGHT)
    p.set_defaults(fn=cmd_split2)

    p = sp.add_parser("examples", help="built-in catalog")
    p.add_argument("action", choices=("list", "emit"))
    p.add_argument("name", nargs="?")
    p.set_defaults(fn=cmd_examples)
    return ap


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.fn(args)
    except CupError as exc:
        print(f"error [{exc.module}] {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
