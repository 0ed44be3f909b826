"""Command-line surface.

Subcommands:
  analyze SPEC        build a group, its enhanced power graph, and class verdicts
  adjacency F N X Y   pairwise adjacency oracle for S_n / A_n (exit 0 adjacent, 1 not)
  verify [SEL ...]    run verification-suite checks (exit 0 iff all pass)
  import PATH         validate a group-spec JSON array

Exit codes: 0 success/pass, 1 recognized negative (nonadjacent pair, failing
suite), 2 usage or parse error, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import replace

from . import graphclass as gc
from . import report, specs
from .catalog import default_catalog, imported_entries
from .errors import SizeLimitError, SpecError
from .graphs import DEFAULT_BUILD_CAP, build_epg, epg_adjacent, to_dot
from .groups import DEFAULT_MAX_ORDER
from .perms import parse_cycles
from .theorems import SuiteContext, run_suite, select_checks

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_CAP = 3


def _add_cap_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER,
                   help="largest group order any construction may reach")
    p.add_argument("--build-cap", type=int, default=DEFAULT_BUILD_CAP,
                   help="largest vertex count for a full graph build")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="epg",
                                 description="finite groups, enhanced power graphs, "
                                             "and hereditary graph-class recognition")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="analyze one group")
    p.add_argument("spec", help="inline expression like 'D(12)' or 'Z(6) x Z(6)', "
                                "or a path to a spec JSON file")
    p.add_argument("--json", metavar="PATH", help="write the report here instead of stdout")
    p.add_argument("--dot", metavar="PATH", help="write the graph in DOT format")
    p.add_argument("--witness", action="store_true",
                   help="include vertex labels with witnesses and re-verify them")
    p.add_argument("--classes", metavar="LIST",
                   help="comma-separated subset of split,threshold,chordal,cograph")
    p.add_argument("--paranoid", action="store_true",
                   help="full associativity verification regardless of order")
    p.add_argument("--timings", action="store_true", help="include wall times in the report")
    _add_cap_flags(p)

    p = sub.add_parser("adjacency", help="pairwise adjacency in S_n or A_n")
    p.add_argument("family", choices=["S", "A"])
    p.add_argument("degree", type=int)
    p.add_argument("x", help="first permutation, 1-based cycle notation")
    p.add_argument("y", help="second permutation, 1-based cycle notation")

    p = sub.add_parser("verify", help="run suite checks over the catalog")
    p.add_argument("selectors", nargs="*", default=[],
                   help="check ids or globs (default: all)")
    p.add_argument("--catalog", metavar="PATH",
                   help="append groups from a spec JSON array to the built-in catalog")
    p.add_argument("--json", metavar="PATH", help="write the suite report here")
    p.add_argument("--timings", action="store_true", help="include per-check wall times")
    _add_cap_flags(p)

    p = sub.add_parser("import", help="validate a group-spec JSON array")
    p.add_argument("path")
    return ap


def _load_analysis_spec(text: str) -> tuple[str, dict]:
    if os.path.exists(text) or text.endswith(".json"):
        data = specs.load_spec_file(text)
        return data.get("name") or "group", data["construct"]
    spec = specs.parse_expr(text)
    return text.strip(), spec


def cmd_analyze(args: argparse.Namespace) -> int:
    name, spec = _load_analysis_spec(args.spec)
    watch = report.Stopwatch()
    G = specs.build(spec, max_order=args.max_order, name=name)
    if args.paranoid:
        G.validate(full=True)
    watch.lap("build_group")
    graph = build_epg(G, build_cap=args.build_cap)
    watch.lap("build_graph")
    wanted = list(gc.ALL_CLASSES)
    if args.classes:
        wanted = [c.strip() for c in args.classes.split(",") if c.strip()]
        for c in wanted:
            if c not in gc.ALL_CLASSES:
                raise SpecError(f"unknown class {c!r}")
    verdicts = {c: gc.recognize(graph, c) for c in wanted}
    watch.lap("recognize")
    if args.witness:
        for v in verdicts.values():
            if not gc.validate_certificate(graph, v):
                raise SpecError(f"{v.class_name}: certificate/witness failed re-validation")
        watch.lap("verify")
    payload = report.analysis_payload(G, graph, verdicts, with_labels=args.witness,
                                      timings=watch.marks if args.timings else None)
    report.write_report(payload, args.json)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(to_dot(graph))
    return EXIT_OK


def cmd_adjacency(args: argparse.Namespace) -> int:
    x = parse_cycles(args.x, args.degree)
    y = parse_cycles(args.y, args.degree)
    adjacent = epg_adjacent(args.family, args.degree, x, y)
    print("adjacent" if adjacent else "nonadjacent")
    return EXIT_OK if adjacent else EXIT_NEGATIVE


def cmd_verify(args: argparse.Namespace) -> int:
    checks = select_checks(args.selectors)
    catalog = default_catalog()
    if args.catalog:
        valid, errors = specs.load_import_file(args.catalog)
        for idx, msg in errors:
            print(f"catalog entry {idx}: rejected: {msg}", file=sys.stderr)
        taken = {e.name for e in catalog}
        for entry in imported_entries(valid):
            name = entry.name
            k = 2
            while name in taken:
                name = f"{entry.name} (import {k})"
                k += 1
            taken.add(name)
            if name != entry.name:
                entry = replace(entry, name=name)
            catalog.append(entry)
    ctx = SuiteContext(max_order=args.max_order, build_cap=args.build_cap)
    suite = run_suite(checks, catalog, ctx, with_timings=args.timings)
    for section in suite["checks"]:
        t = section["totals"]
        line = (f"{section['id']}: pass={t['pass']} fail={t['fail']} "
                f"skip={t['skip']} error={t['error']}")
        print(line, file=sys.stderr)
    payload = report.suite_payload(suite)
    report.write_report(payload, args.json)
    return EXIT_OK if suite["all_pass"] else EXIT_NEGATIVE


def cmd_import(args: argparse.Namespace) -> int:
    try:
        valid, errors = specs.load_import_file(args.path)
    except (OSError, ValueError) as exc:
        raise SpecError(f"cannot read {args.path}: {exc}") from exc
    built = 0
    for item in valid:
        try:
            G = specs.build(item["construct"], name=item["name"])
            if item["construct"].get("kind") != "cayley_table":
                G.validate()
            built += 1
            print(f"imported {item['name']} (order {G.order})")
        except (SpecError, SizeLimitError) as exc:
            errors.append((valid.index(item), str(exc)))
    for idx, msg in sorted(errors):
        print(f"entry {idx}: rejected: {msg}", file=sys.stderr)
    print(f"{built} group(s) imported, {len(errors)} rejected")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        if args.command == "analyze":
            return cmd_analyze(args)
        if args.command == "adjacency":
            return cmd_adjacency(args)
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "import":
            return cmd_import(args)
        raise SpecError(f"unknown command {args.command!r}")
    except SizeLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        print("hint: raise --max-order / --build-cap, or use the adjacency oracle "
              "for symmetric/alternating groups", file=sys.stderr)
        return EXIT_CAP
    except SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
