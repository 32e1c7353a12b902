"""Command-line interface: ``invsemi <command> [options]``.

Exit codes: 0 success / identity holds, 1 identity fails or a check does not
pass, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import __version__
from .battery import DEFAULT_SEED, run_battery
from .catalog import CatalogEntry, named_models
from .census import OrderGated, enumerate_involution_semigroups, enumerate_semigroups, match_table1, run_census
from .classify import DEFAULT_PERM_BOUND, classify, classify_census, verdict_counts
from .decide import canonical_mixed, decide, theory
from .model import (DEFAULT_VAR_CAP, InvolutionSemigroup, VariableCapExceeded, describe_assignment, satisfies,
                    satisfies_zero, validate)
from .normal import NormalizationError, ZeroWordError, normalize_a, normalize_b
from .rules import DerivationTrace, verify_trace
from .words import WordSyntaxError, flatten, parse_term, render

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# ---------------------------------------------------------------- helpers

def _word(text: str, what: str):
    try:
        w = flatten(parse_term(text))
    except WordSyntaxError as exc:
        raise UsageError(f"{what}: {exc}") from None
    if not w:
        raise UsageError(f"{what}: empty word")
    return w


def _model(args) -> InvolutionSemigroup:
    if args.table or args.inv:
        if not (args.table and args.inv):
            raise UsageError("--table and --inv must be given together")
        try:
            S = InvolutionSemigroup.from_digits(args.table, args.inv, "inline")
        except ValueError as exc:
            raise UsageError(f"bad table: {exc}") from None
        rep = validate(S)
        if not rep.ok:
            raise UsageError(f"not an involution semigroup: {rep.failure}")
        return S
    models = named_models()
    name = (args.model or "").lower()
    if name not in models:
        raise UsageError(f"unknown model {args.model!r}; choose from {', '.join(models)} or use --table/--inv")
    return models[name]


class Report:
    """Buffered output: a dict for JSON plus text lines."""

    def __init__(self, fmt: str):
        self.fmt = fmt
        self.data: dict = {}
        self.lines: list[str] = []

    def text(self, line: str) -> None:
        self.lines.append(line)

    def emit(self, out) -> None:
        if self.fmt == "json":
            out.write(json.dumps(self.data, indent=1, default=str) + "\n")
        else:
            out.write("\n".join(self.lines) + ("\n" if self.lines else ""))


def _jobs(args) -> int:
    return args.jobs if args.jobs else (os.cpu_count() or 1)


# ---------------------------------------------------------------- commands

def cmd_validate(args, rep: Report) -> int:
    lines = list(args.lines)
    if args.file:
        lines += [l for l in Path(args.file).read_text().splitlines() if l.strip() and not l.startswith("#")]
    structures = []
    for line in lines:
        try:
            structures.append((line, InvolutionSemigroup.from_text(line)))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if not lines:
        structures.append((args.model or "inline", _model(args)))
    results = []
    for line, S in structures:
        r = validate(S)
        results.append({"input": line, "ok": r.ok, "failure": r.failure, "witness": r.witness})
        rep.text(f"{'ok' if r.ok else 'INVALID'}  {line}" + ("" if r.ok else f"  ({r.failure} {r.witness})"))
    rep.data = {"results": results}
    return EXIT_OK if all(r["ok"] for r in results) else EXIT_FAIL


def cmd_census(args, rep: Report) -> int:
    try:
        res = run_census(args.n, _jobs(args), args.cache_dir, allow_gated=args.order5)
    except OrderGated:
        raise UsageError(f"order {args.n} is best-effort: pass --order5 and --cache-dir") from None
    rep.data = json.loads(res.report.to_json())
    rep.data["pruned_by_obstructions"] = res.pruned_by_obstructions
    for k, v in rep.data.items():
        rep.text(f"{k}: {v}")
    return EXIT_OK


def cmd_enumerate(args, rep: Report) -> int:
    if args.involutions:
        items = [S.to_text() for S in enumerate_involution_semigroups(args.n, _jobs(args))]
    else:
        tables = enumerate_semigroups(args.n, anti=args.anti, jobs=_jobs(args))
        n = args.n
        items = [f"n={n} mul={''.join(str(v) for r in t for v in r)}" for t in tables]
    rep.data = {"n": args.n, "count": len(items), "structures": items}
    rep.lines = items + [f"# {len(items)} structures"]
    return EXIT_OK


def cmd_classify(args, rep: Report) -> int:
    if args.n:
        structures = run_census(args.n, _jobs(args), args.cache_dir).involution_semigroups
        rows = classify_census(structures, args.perm_bound)
        counts = verdict_counts(rows)
        rep.data = {"n": args.n, "counts": counts, "rows": rows}
        for r in rows:
            name = f"  [{r['table1_name']}]" if "table1_name" in r else ""
            rep.text(f"n={args.n} mul={r['canonical_table']} inv={r['inv']}  {r['verdict']}{name}")
        rep.text("counts: " + ", ".join(f"{k}x{v}" for k, v in sorted(counts.items())))
        return EXIT_FAIL if counts.get("Unresolved") else EXIT_OK
    S = _model(args)
    v = classify(S, args.perm_bound)
    rep.data = {"model": S.to_text(), "verdict": v.label, "evidence": v.evidence}
    rep.text(f"{S.to_text()}  {v.label}  {json.dumps(v.evidence, default=str)}")
    return EXIT_FAIL if v.tag == "Unresolved" else EXIT_OK


def cmd_check(args, rep: Report) -> int:
    S = _model(args)
    if args.zero:
        w = _word(args.zero, "--zero")
        holds = satisfies_zero(S, w, args.var_cap)
        rep.data = {"identity": f"{render(w)} ~ 0", "holds": holds}
        rep.text(f"{render(w)} ~ 0: {'holds' if holds else 'fails'}")
        return EXIT_OK if holds else EXIT_FAIL
    if not (args.lhs and args.rhs):
        raise UsageError("check needs --lhs and --rhs (or --zero)")
    u, v = _word(args.lhs, "--lhs"), _word(args.rhs, "--rhs")
    hit = satisfies(S, u, v, args.var_cap)
    rep.data = {"identity": f"{render(u)} ~ {render(v)}", "holds": hit is None, "counterexample": hit}
    rep.text(f"{render(u)} ~ {render(v)}: {'holds' if hit is None else 'fails'}")
    if hit is not None:
        rep.text(f"counterexample: {describe_assignment(hit)}")
    name = (args.model or "").lower()
    if name in ("a0", "b0") and not args.table:
        d = decide(name, u, v, args.var_cap)
        rep.data["certificate"] = d.certificate
        rep.data["details"] = d.details
        rep.text(f"certificate: {d.certificate} {json.dumps(d.details)}")
    return EXIT_OK if hit is None else EXIT_FAIL


def cmd_normalize(args, rep: Report) -> int:
    w = _word(args.word, "word")
    norm = normalize_a if args.system == "a0" else normalize_b
    try:
        form, trace = norm(w)
    except ZeroWordError as exc:
        rep.data = {"input": render(w), "zero": True, "witness": exc.witness.describe()}
        rep.text(f"{render(w)} is zero: {exc.witness.describe()}")
        return EXIT_FAIL
    except NormalizationError as exc:
        raise UsageError(str(exc)) from None
    rep.data = {"input": render(w), "standard_form": form.render(),
                "prefix": render(form.prefix), "pivot": str(form.pivot),
                "blocks": [render(b) for b in form.blocks], "trace": json.loads(trace.to_json())}
    rep.text(form.render())
    if args.trace:
        rep.text(trace.to_json())
    return EXIT_OK


def cmd_canonical(args, rep: Report) -> int:
    w = _word(args.word, "word")
    try:
        c = canonical_mixed(args.system, w)
    except ZeroWordError as exc:
        rep.data = {"input": render(w), "zero": True, "witness": exc.witness.describe()}
        rep.text(f"{render(w)} is zero: {exc.witness.describe()}")
        return EXIT_FAIL
    except NormalizationError as exc:
        raise UsageError(str(exc)) from None
    rep.data = {"input": render(w), "canonical": render(c)}
    rep.text(render(c))
    return EXIT_OK


def cmd_verify_trace(args, rep: Report) -> int:
    text = sys.stdin.read() if args.file == "-" else Path(args.file).read_text()
    try:
        trace = DerivationTrace.from_json(text)
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"bad trace: {exc}") from None
    th = theory(args.system)
    res = verify_trace(trace, th.system, th.model if args.model_check else None)
    rep.data = {"ok": res.ok, "failed_step": res.failed_step, "reason": res.reason, "steps": len(trace.steps)}
    rep.text("trace accepted" if res.ok else f"trace rejected at step {res.failed_step}: {res.reason}")
    return EXIT_OK if res.ok else EXIT_FAIL


def _catalog_file(path):
    """Lines ``NAME n=4 mul=... inv=... [LABEL]``."""
    out = []
    for line in Path(path).read_text().splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) < 4:
            raise UsageError(f"bad catalog line: {line!r}")
        name, mul, inv = parts[0], parts[2].removeprefix("mul="), parts[3].removeprefix("inv=")
        label = parts[4] if len(parts) > 4 else ""
        rows = tuple(mul[i:i + 4] for i in range(0, len(mul), 4))
        out.append(CatalogEntry(name, rows, inv, label))
    return out


def cmd_table1(args, rep: Report) -> int:
    catalog = _catalog_file(args.catalog) if args.catalog else None
    structures = run_census(4, _jobs(args), args.cache_dir).involution_semigroups
    m = match_table1(structures, catalog)
    rep.data = {"ok": m.ok, "pairs": m.pairs, "unmatched_catalog": m.unmatched_catalog,
                "unmatched_enumerated": m.unmatched_enumerated, "invalid_catalog": m.invalid_catalog}
    for name, line in m.pairs:
        rep.text(f"{name:3} {line}")
    for label, items in (("unmatched catalog", m.unmatched_catalog),
                         ("unmatched enumerated", m.unmatched_enumerated), ("invalid catalog", m.invalid_catalog)):
        if items:
            rep.text(f"{label}: {', '.join(items)}")
    rep.text("Table 1 match: " + ("ok" if m.ok else "FAILED"))
    return EXIT_OK if m.ok else EXIT_FAIL


def cmd_selftest(args, rep: Report) -> int:
    catalog = _catalog_file(args.catalog) if args.catalog else None
    items = run_battery(args.quick, args.seed, _jobs(args), args.cache_dir, catalog)
    rep.data = {"ok": all(i.ok for i in items), "items": [i.to_json() for i in items]}
    rep.lines = [i.line() for i in items]
    rep.text(f"{sum(i.ok for i in items)}/{len(items)} items pass")
    return EXIT_OK if rep.data["ok"] else EXIT_FAIL


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--jobs", type=int, default=0, help="worker processes (default: all CPUs)")
    common.add_argument("--perm-bound", type=int, default=DEFAULT_PERM_BOUND)
    common.add_argument("--var-cap", type=int, default=DEFAULT_VAR_CAP)
    common.add_argument("--cache-dir", default=None)
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)

    model = _Parser(add_help=False)
    model.add_argument("--model", default=None, help="a0, b0, sl3 or a Table 1 name (a1..c7)")
    model.add_argument("--table", default=None, help="n*n digits, row-major")
    model.add_argument("--inv", default=None, help="n digits")

    system = _Parser(add_help=False)
    system.add_argument("--system", choices=("a0", "b0"), default="a0")

    p = _Parser(prog="invsemi", description="Small involution semigroups and their identities.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("validate", parents=[common, model], help="check associativity and involution laws")
    s.add_argument("lines", nargs="*", help="table lines 'n=.. mul=.. inv=..'")
    s.add_argument("--file", default=None)
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("census", parents=[common], help="count semigroups and involution semigroups")
    s.add_argument("-n", type=int, required=True)
    s.add_argument("--order5", action="store_true", help="allow the slow order-5 run (needs --cache-dir)")
    s.set_defaults(func=cmd_census)

    s = sub.add_parser("enumerate", parents=[common], help="list canonical representatives")
    s.add_argument("-n", type=int, required=True)
    s.add_argument("--involutions", action="store_true", help="list involution semigroups")
    s.add_argument("--anti", action="store_true", help="identify anti-isomorphic semigroups")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("classify", parents=[common, model], help="finite-basis verdicts")
    s.add_argument("-n", type=int, default=0, help="classify the whole census of this order")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("check", parents=[common, model], help="check an identity in a model")
    s.add_argument("--lhs")
    s.add_argument("--rhs")
    s.add_argument("--zero", help="check w ~ 0")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("normalize", parents=[common, system], help="standard form with derivation")
    s.add_argument("word")
    s.add_argument("--trace", action="store_true", help="print the derivation trace (text format)")
    s.set_defaults(func=cmd_normalize)

    s = sub.add_parser("canonical", parents=[common, system], help="canonical representative of a mixed word")
    s.add_argument("word")
    s.set_defaults(func=cmd_canonical)

    s = sub.add_parser("verify-trace", parents=[common, system], help="replay a derivation trace")
    s.add_argument("file", help="trace JSON file, or - for stdin")
    s.add_argument("--model-check", action="store_true", help="also check every step in the model")
    s.set_defaults(func=cmd_verify_trace)

    s = sub.add_parser("table1", parents=[common], help="match the order-4 census with the catalog")
    s.add_argument("--catalog", default=None, help="alternative catalog file")
    s.set_defaults(func=cmd_table1)

    s = sub.add_parser("selftest", parents=[common], help="run the acceptance battery")
    s.add_argument("--quick", action="store_true", help="skip the exhaustive word sweep")
    s.add_argument("--catalog", default=None, help="alternative catalog file")
    s.set_defaults(func=cmd_selftest)
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        err.write(f"invsemi: {exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help / --version
        return EXIT_OK if not exc.code else EXIT_USAGE
    rep = Report(args.format)
    try:
        code = args.func(args, rep)
    except UsageError as exc:
        err.write(f"invsemi: {exc}\n")
        return EXIT_USAGE
    except (VariableCapExceeded, ValueError, OSError) as exc:
        err.write(f"invsemi: {exc}\n")
        return EXIT_USAGE
    rep.emit(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
