"""Command-line interface: ``count``, ``verify`` and ``tables``.

Exit codes: 0 success or match, 1 mismatch or failed check, 2 usage or budget error.
Settings resolve as flag, then ``REFACTO_*`` environment variable, then default.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
from typing import Sequence

from . import characters as ch
from . import closed_forms as cf
from . import oracle as orc
from .polys import ExpPoly, expand_in_basis
from .verify import SUITES, cycle_type_lhs, run_suite
from .wreath import GroupSpec

SCHEMA_VERSION = 1

_INT_LIST = re.compile(r"\[\s*((?:-?\d+,?\s*)+)\]")

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _env(name: str, default):
    raw = os.environ.get("REFACTO_" + name)
    if raw is None or raw == "":
        return default
    if isinstance(default, int):
        try:
            return int(raw)
        except ValueError:
            raise UsageError(f"REFACTO_{name} must be an integer, got {raw!r}") from None
    return raw


def _settings(args) -> dict:
    fmt = args.format or _env("FORMAT", "json")
    if fmt not in ("json", "csv"):
        raise UsageError(f"unknown format {fmt!r}")
    threads = args.threads if args.threads is not None else _env("THREADS", 1)
    if threads < 1:
        raise UsageError("threads must be >= 1")
    limit = args.work_limit if args.work_limit is not None else _env("WORK_LIMIT", orc.DEFAULT_WORK_LIMIT)
    if limit != orc.DEFAULT_WORK_LIMIT and not args.accept_large_budget:
        raise UsageError("changing the work limit requires --accept-large-budget")
    return {"format": fmt, "threads": threads, "work_limit": limit}


def poly_terms(f: ExpPoly) -> list[dict]:
    return [
        {"exponents": list(e), "coefficient": str(c)}
        for e, c in sorted(f.terms.items())
        if c
    ]


def _emit(report: dict, fmt: str, out) -> None:
    if fmt == "json":
        text = json.dumps(report, indent=2)
        # keep integer lists such as exponent vectors on one line
        text = _INT_LIST.sub(lambda m: "[" + ", ".join(m.group(1).split()).replace(",,", ",") + "]", text)
        out.write(text + "\n")
        return
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["schema_version", "source", "exponents", "coefficient"])
    for source, body in report.get("results", {}).items():
        for t in body["terms"]:
            w.writerow([SCHEMA_VERSION, source, " ".join(map(str, t["exponents"])), t["coefficient"]])
    if "verdict" in report:
        w.writerow([SCHEMA_VERSION, "verdict", "", report["verdict"]])


# count -----------------------------------------------------------------------

def _group(args) -> GroupSpec:
    if args.n is None and args.group != "exceptional":
        raise UsageError("--n is required")
    if args.group == "sym":
        return GroupSpec.sym(args.n)
    if args.group in ("g_d1n", "g_ddn"):
        if args.d is None or args.d < 2:
            raise UsageError("--d >= 2 is required for wreath groups")
        return GroupSpec.d1n(args.d, args.n) if args.group == "g_d1n" else GroupSpec.ddn(args.d, args.n)
    if not args.table:
        raise UsageError("--table is required for exceptional groups")
    try:
        return ch.load_char_table(args.table).spec()
    except (OSError, ch.TableError) as exc:
        raise UsageError(str(exc)) from None


def _formula(spec: GroupSpec, args) -> ExpPoly:
    k, mode = args.k, args.transitivity
    if args.classify == "fixdim":
        if spec.family == "sym":
            if args.target == "n1cycle":
                if mode != "transitive":
                    raise UsageError("the (n-1)-cycle formula counts transitive factorizations only")
                return cf.n1cycle_transitive_poly(spec.n, k)
            return cf.jackson_poly(spec.n, k)
        if args.target != "coxeter":
            raise UsageError("--target n1cycle applies to sym only")
        if spec.family == "ddn":
            if mode == "transitive":
                return cf.gddn_transitive_poly(spec.d, spec.n, k)
            if mode == "nontransitive":
                return cf.gddn_nontransitive_poly(spec.d, spec.n, k)
            return cf.gddn_poly(spec.d, spec.n, k)
        if spec.family == "exceptional":
            return ch.exceptional_F(ch.load_char_table(args.table), k)
        return cf.gd1n_poly(spec.d, spec.n, k)
    if spec.family != "d1n":
        raise UsageError(f"--classify {args.classify} is available for g_d1n only")
    if args.classify == "cycle-type":
        return cf.cycle_type_rhs(spec.d, spec.n, k, spec.n)
    return cf.all_weights_poly(spec.d, spec.n, k)


def _oracle(spec: GroupSpec, args, settings) -> ExpPoly:
    if spec.family == "exceptional":
        raise UsageError("no enumeration oracle for exceptional groups; use --engine formula")
    target = orc.n1_cycle(spec.n) if args.target == "n1cycle" else None
    q = orc.FactorQuery(spec, args.k, target=target, transitivity=args.transitivity,
                        work_limit=settings["work_limit"], workers=settings["threads"])
    if args.classify == "fixdim":
        return orc.count(q, "fixdim")
    if args.classify == "cycle-type":
        if q.work > q.work_limit:
            raise orc.BudgetExceeded(q.work, q.work_limit)
        return cycle_type_lhs(spec.d, spec.n, args.k, spec.n, workers=settings["threads"])
    return orc.weight_distribution_poly(q)


def cmd_count(args, settings, out) -> int:
    if args.k < 1:
        raise UsageError("--k must be >= 1")
    spec = _group(args)
    if args.transitivity != "all" and spec.family not in ("ddn", "sym"):
        raise UsageError("--transitivity applies to sym and g_ddn")
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": "count",
        "query": {
            "group": str(spec), "family": spec.family, "d": spec.d, "n": spec.n, "k": args.k,
            "classify": args.classify, "transitivity": args.transitivity, "target": args.target,
        },
        "engine": args.engine,
        "results": {},
    }
    results = {}
    if args.engine in ("formula", "both"):
        try:
            results["formula"] = _formula(spec, args)
        except cf.IntegralityError as exc:
            raise UsageError(str(exc)) from None
    if args.engine in ("oracle", "both"):
        results["oracle"] = _oracle(spec, args, settings)
    for name, f in results.items():
        report["results"][name] = {"arity": f.arity, "terms": poly_terms(f)}
    code = EXIT_OK
    if args.engine == "both":
        match = results["formula"] == results["oracle"]
        report["verdict"] = "MATCH" if match else "MISMATCH"
        code = EXIT_OK if match else EXIT_MISMATCH
    _emit(report, settings["format"], out)
    if "verdict" in report and settings["format"] == "json":
        print(report["verdict"], file=sys.stderr)
    return code


# verify ----------------------------------------------------------------------

_NOTES = {
    "all-weights": "the formula is read as the coefficient of t^1 in the product "
                   "(t tracks total weight mod d); the residue-0 reading does not match the oracle",
}


def cmd_verify(args, settings, out) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    suites = []
    ok = True
    for name in names:
        checks = run_suite(name)
        passed = all(c.passed for c in checks)
        ok &= passed
        entry = {"suite": name, "passed": passed, "checks": [c.as_dict() for c in checks]}
        if name in _NOTES:
            entry["note"] = _NOTES[name]
        suites.append(entry)
    report = {"schema_version": SCHEMA_VERSION, "command": "verify", "suites": suites}
    if settings["format"] == "json":
        _emit(report, "json", out)
    else:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["schema_version", "suite", "check", "passed", "detail"])
        for s in suites:
            for c in s["checks"]:
                w.writerow([SCHEMA_VERSION, s["suite"], c["name"], int(c["passed"]), c["detail"]])
    return EXIT_OK if ok else EXIT_MISMATCH


# tables ----------------------------------------------------------------------

def _basis_expression(t: ch.CharTable, f) -> str:
    if not t.basis:
        return ch.format_uni(f)
    basis = [ch.UniPoly.const(1)] + [t.basis[f"P{i}"] for i in range(1, len(t.basis) + 1)]
    coeffs = expand_in_basis(ExpPoly.from_uni(f, 1, 0), basis[: f.degree + 1] if f.degree >= 0 else basis[:1])
    parts = []
    for i in range(f.degree, -1, -1):
        c = coeffs.get((i,), 0)
        if c == 0:
            continue
        name = "" if i == 0 else f"P{i}"
        parts.append(str(c) if i == 0 else (name if c == 1 else f"{c}*{name}"))
    return " + ".join(parts).replace("+ -", "- ") or "0"


def cmd_tables(args, settings, out) -> int:
    if args.action == "list":
        rows = []
        for name in ch.bundled_tables():
            t = ch.load_char_table(name)
            rows.append({"group": name, "rank": t.rank, "order": str(t.order), "entries": len(t.entries),
                         "degrees": list(t.degrees), "coexponents": list(t.coexponents)})
        if settings["format"] == "json":
            _emit({"schema_version": SCHEMA_VERSION, "command": "tables list", "tables": rows}, "json", out)
        else:
            w = csv.writer(out, lineterminator="\n")
            w.writerow(["schema_version", "group", "rank", "order", "entries"])
            for r in rows:
                w.writerow([SCHEMA_VERSION, r["group"], r["rank"], r["order"], r["entries"]])
        return EXIT_OK
    if not args.target:
        raise UsageError(f"tables {args.action} needs an argument")
    try:
        t = ch.load_char_table(args.target)
    except (OSError, ch.TableError) as exc:
        if args.action == "check":
            _emit({"schema_version": SCHEMA_VERSION, "command": "tables check", "source": args.target,
                   "passed": False, "failures": [f"parse: {exc}"]}, "json", out)
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_MISMATCH
        raise UsageError(str(exc)) from None
    if args.action == "show":
        rows = [{"dim": e.dim, "chi": ch.format_cyc(e.chi), "f": _basis_expression(t, e.f),
                 "f_power": ch.format_uni(e.f)} for e in t.entries]
        if settings["format"] == "json":
            _emit({"schema_version": SCHEMA_VERSION, "command": "tables show", "group": t.group,
                   "degrees": list(t.degrees), "coexponents": list(t.coexponents), "rows": rows}, "json", out)
        else:
            w = csv.writer(out, lineterminator="\n")
            w.writerow(["schema_version", "group", "dim", "chi", "f", "f_power"])
            for r in rows:
                w.writerow([SCHEMA_VERSION, t.group, r["dim"], r["chi"], r["f"], r["f_power"]])
        return EXIT_OK
    rep = ch.char_poly_identity_check(t)
    failures = [] if rep.ok else list(rep.details)
    _emit({"schema_version": SCHEMA_VERSION, "command": "tables check", "source": args.target,
           "group": t.group, "passed": rep.ok, "failures": failures}, "json", out)
    for msg in failures:
        print(f"error: {msg}", file=sys.stderr)
    return EXIT_OK if rep.ok else EXIT_MISMATCH


# parser ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default=None,
                        help="output format (env REFACTO_FORMAT, default json)")
    common.add_argument("--threads", type=int, default=None,
                        help="worker processes for enumeration (env REFACTO_THREADS, default 1)")
    common.add_argument("--work-limit", type=int, default=None,
                        help=f"max classified tuples (env REFACTO_WORK_LIMIT, default {orc.DEFAULT_WORK_LIMIT})")
    common.add_argument("--accept-large-budget", action="store_true",
                        help="required to change the work limit")

    parser = argparse.ArgumentParser(prog="refacto", description="Exact counts of factorizations of Coxeter elements.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="evaluate a generating polynomial")
    p.add_argument("--group", required=True, choices=("sym", "g_d1n", "g_ddn", "exceptional"))
    p.add_argument("--d", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--table", help="bundled table name (G4) or .ct file, for --group exceptional")
    p.add_argument("--classify", choices=("fixdim", "cycle-type", "weights"), default="fixdim")
    p.add_argument("--transitivity", choices=("all", "transitive", "nontransitive"), default="all")
    p.add_argument("--target", choices=("coxeter", "n1cycle"), default="coxeter")
    p.add_argument("--engine", choices=("formula", "oracle", "both"), default="formula")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", parents=[common], help="run a named identity suite")
    p.add_argument("suite", choices=(*SUITES, "all"))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("tables", parents=[common], help="list, show or check character tables")
    p.add_argument("action", choices=("list", "show", "check"))
    p.add_argument("target", nargs="?")
    p.set_defaults(func=cmd_tables)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        settings = _settings(args)
        return args.func(args, settings, out)
    except (UsageError, orc.BudgetExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run(argv: Sequence[str]) -> tuple[int, str]:
    """Call ``main`` and capture stdout; handy in scripts and tests."""
    buf = io.StringIO()
    code = main(argv, buf)
    return code, buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())
