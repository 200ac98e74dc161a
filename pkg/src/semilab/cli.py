"""``semilab`` command line: analyze, enumerate, verify, f.

Exit codes: 0 success, 1 a verification found a counterexample, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path

from . import fgen
from .census import DEDUP_MODES, MAX_ORDER, CensusSpec, census_tables, parse_filter, run_census, verify_conjecture
from .errors import SemilabError
from .report import CENSUS_SUMMARY_VERSION, analysis_report, census_record
from .sgt import format_sgt, read_sgt, write_sgt
from .verify import ALL_SUITES

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _dump(obj) -> str:
    return json.dumps(obj, separators=(", ", ": "))


def _workers(args) -> int:
    env = os.environ.get("SEMILAB_WORKERS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise SemilabError(f"SEMILAB_WORKERS must be an integer, got {env!r}") from None
    return max(1, args.workers)


def _fmt_classes(classes: list[list[int]]) -> str:
    return " ".join("{" + ",".join(map(str, c)) + "}" for c in classes)


def cmd_analyze(args) -> int:
    table = read_sgt(args.path)
    report = analysis_report(table, str(args.path))
    if args.json:
        print(_dump(report))
        return EXIT_OK
    name = table.name or Path(args.path).stem
    print(f"{name}: order {table.order}, idempotents {report['idempotents']}")
    for rel, classes in report["partitions"].items():
        print(f"  {rel:<3} {_fmt_classes(classes)}")
    if report["maps"]["ell"] is not None:
        print(f"  x_l {report['maps']['ell']}")
    if report["maps"]["r"] is not None:
        print(f"  x_r {report['maps']['r']}")
    for flag, value in report["flags"].items():
        extra = ""
        if not value and flag in report["witnesses"]:
            extra = f"  witness {_dump(report['witnesses'][flag])}"
        print(f"  {flag:<20} {str(value).lower()}{extra}")
    if report["embedding"] is not None:
        print(f"  M embeds as a,b,c,d -> {report['embedding']}")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    filters = parse_filter(args.filter) if args.filter else ()
    spec = CensusSpec(args.order, args.dedup, filters, args.limit)
    export = Path(args.export_dir) if args.export_dir else None
    if export is not None:
        export.mkdir(parents=True, exist_ok=True)
    shown = 0

    def on_match(index, table, flags):
        nonlocal shown
        if spec.limit is not None and shown >= spec.limit:
            return
        shown += 1
        if args.json:
            print(_dump(census_record(table, index, flags)))
        else:
            print(f"# table {index}")
            print(format_sgt(table), end="")
        if export is not None:
            write_sgt(table, export / f"order{spec.order}_{index:06d}.sgt")

    result = run_census(spec, _workers(args), on_match=on_match)
    summary = {
        "schema": CENSUS_SUMMARY_VERSION,
        "order": spec.order,
        "dedup": spec.dedup,
        "filter": [f"{'' if w else '!'}{n}" for n, w in spec.filters],
        "total_tables": result.total_tables,
        "matched": result.matched,
        "filter_counts": result.filter_counts,
        "retained": len(result.examples),
        "timings": {"elapsed_s": result.elapsed},
    }
    if args.json:
        print(_dump({"summary": summary}))
    else:
        print(f"order {spec.order} ({spec.dedup}): {result.total_tables} tables, {result.matched} matching")
        for term, count in result.filter_counts.items():
            print(f"  {term}: {count}")
    return EXIT_OK


def cmd_verify(args) -> int:
    ceiling = MAX_ORDER if args.long else 6
    if not 1 <= args.max_order <= ceiling:
        raise SemilabError(f"--max-order must be in [1, {ceiling}]" + ("" if args.long else " (use --long for 7)"))
    workers = _workers(args)
    start = time.perf_counter()
    conj = verify_conjecture(args.max_order, long=args.long, workers=workers)
    ok = conj.passed
    if conj.passed:
        print(f"[PASS] amiable and not adequate => contains M, orders 1..{args.max_order}")
    else:
        print(f"[FAIL] amiable, not adequate, no copy of M: {conj.counterexample.rows()}")
    for n, c in conj.counts.items():
        print(f"  order {n}: {c['tables']} tables, {c['amiable']} amiable, {c['amiable_not_adequate']} amiable not adequate")
    tables = [t for n in range(1, args.max_order + 1) for t in census_tables(n, "iso")]
    for suite in ALL_SUITES:
        res = suite(tables)
        print(res.line())
        ok = ok and res.passed
    print(f"elapsed {time.perf_counter() - start:.1f}s")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_f_mul(args) -> int:
    x, y = fgen.parse_word(args.x), fgen.parse_word(args.y)
    p = fgen.f_mul(x, y)
    mat = fgen.f_to_matrix(p)
    if args.json:
        print(_dump({"product": fgen.format_word(p), "matrix": mat.rows()}))
    else:
        print(fgen.format_word(p))
        print(f"matrix {mat.rows()}")
    return EXIT_OK


def cmd_f_classes(args) -> int:
    if args.max_len < 1:
        raise SemilabError("--max-len must be >= 1")
    rows = [
        {"word": fgen.format_word(x), "L*": fgen.format_word(fgen.f_ell(x)), "R*": fgen.format_word(fgen.f_r(x))}
        for x in fgen.f_window(args.max_len)
    ]
    if args.json:
        print(_dump(rows))
    else:
        print(f"{'word':<10} {'L*':<4} R*")
        for r in rows:
            print(f"{r['word']:<10} {r['L*']:<4} {r['R*']}")
    return EXIT_OK


def cmd_f_verify(args) -> int:
    if args.window < 4:
        raise SemilabError("--window must be >= 4")
    checks = [
        (f"distinct normal forms and matrices, lengths <= {args.window}", fgen.verify_f_distinct(args.window)),
        (f"L*/R* classes on window {args.window}", fgen.verify_f_star_window(args.window)),
        (f"(ab)^m pairwise distinct, m <= {args.window}", fgen.verify_power_distinctness(args.window)),
    ]
    ok = True
    for name, violation in checks:
        if violation is None:
            print(f"[PASS] {name}")
        else:
            ok = False
            print(f"[FAIL] {name} -- {violation}")
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="semilab", description="Green's relations and amiable semigroups on finite tables.")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="classify one .sgt table")
    a.add_argument("path")
    a.add_argument("--json", action="store_true")
    a.set_defaults(func=cmd_analyze)

    e = sub.add_parser("enumerate", help="census of one order")
    e.add_argument("--order", type=int, required=True)
    e.add_argument("--dedup", choices=DEDUP_MODES, default="iso_and_anti")
    e.add_argument("--filter", default="", help="e.g. 'amiable,!adequate'")
    e.add_argument("--limit", type=int, default=None)
    e.add_argument("--json", action="store_true")
    e.add_argument("--export-dir", default=None, help="write each printed table as .sgt here")
    e.add_argument("--workers", type=int, default=1)
    e.set_defaults(func=cmd_enumerate)

    v = sub.add_parser("verify", help="check the finite Main Theorem corollary and invariant suites")
    v.add_argument("--max-order", type=int, required=True)
    v.add_argument("--long", action="store_true", help="allow order 7")
    v.add_argument("--workers", type=int, default=1)
    v.set_defaults(func=cmd_verify)

    f = sub.add_parser("f", help="explore F = <a, b | aa = a, bb = b>")
    fsub = f.add_subparsers(dest="f_command", required=True)
    fm = fsub.add_parser("mul")
    fm.add_argument("x")
    fm.add_argument("y")
    fm.add_argument("--json", action="store_true")
    fm.set_defaults(func=cmd_f_mul)
    fc = fsub.add_parser("classes")
    fc.add_argument("--max-len", type=int, default=6)
    fc.add_argument("--json", action="store_true")
    fc.set_defaults(func=cmd_f_classes)
    fv = fsub.add_parser("verify")
    fv.add_argument("--window", type=int, default=12)
    fv.set_defaults(func=cmd_f_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        print(f"semilab: file not found: {exc.filename}", file=sys.stderr)
        return EXIT_INPUT
    except (SemilabError, ValueError) as exc:
        print(f"semilab: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
