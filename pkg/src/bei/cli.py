"""Command-line surface.  Exit codes: 0 clean, 1 violations or conjecture
candidates, 2 usage/parse errors, 3 budget exceeded."""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import harness, io
from .constructors import (block_with_whiskers, paper_corpus, star_product,
                           whiskered_star_product)
from .cutsets import CutsetBudgetError, primary_decomposition
from .graph import Graph
from .properties import BudgetExceeded

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _load_graph(path: str, fmt: str) -> Graph:
    with open(path) as fh:
        text = fh.read()
    if fmt == "graph6":
        gs = io.parse_graph6(text)
        if len(gs) != 1:
            raise io.ParseError(f"expected exactly one graph6 record, got {len(gs)}")
        return gs[0]
    return io.parse_edge_list(text)


def _cmd_analyze(args) -> int:
    g = _load_graph(args.file, args.format)
    props = [p for p in args.props.split(",") if p] if args.props else []
    deadline = time.monotonic() + harness.budget_secs()
    report = io.analysis_report(g, props, include_cutsets=args.cutsets,
                                deadline=deadline)
    out = io.report_json(report) if args.json else io.render_text(report)
    print(out if out.endswith("\n") else out + "\n", end="")
    return EXIT_OK


def _cmd_decompose(args) -> int:
    g = _load_graph(args.file, args.format)
    dec = primary_decomposition(g)
    if args.json:
        print(json.dumps({
            "components": [{"T": sorted(c.killed),
                            "c": len(c.clique_supports),
                            "height": c.height,
                            "supports": [sorted(s) for s in c.clique_supports]}
                           for c in dec.components],
            "min_height": dec.min_height, "max_height": dec.max_height,
            "unmixed": dec.unmixed,
            "witness": sorted(dec.witness.members) if dec.witness else None},
            indent=2, sort_keys=True))
    else:
        print(f"{'T':<24}{'c(T)':>6}{'height':>8}")
        for c in dec.components:
            print(f"{str(sorted(c.killed)):<24}{len(c.clique_supports):>6}{c.height:>8}")
        print(f"unmixed: {dec.unmixed} (heights {dec.min_height}..{dec.max_height})")
        if dec.witness:
            print(f"witness: {sorted(dec.witness.members)}")
    return EXIT_OK


def _cmd_blocks(args) -> int:
    g = _load_graph(args.file, args.format)
    dec = g.blocks()
    print(f"cut vertices: {sorted(dec.cut_vertices)}")
    for i, b in enumerate(dec.blocks):
        print(f"block {i}: {sorted(b)}")
        if args.whiskered:
            bar = block_with_whiskers(g, b)
            print("  " + io.serialize_edge_list(bar).strip().replace("\n", "\n  "))
    return EXIT_OK


def _cmd_construct(args) -> int:
    if args.what == "star":
        g = (whiskered_star_product if args.whiskered else star_product)(
            args.m, args.n, args.r)
    else:
        corpus = paper_corpus()
        if args.name not in corpus:
            print(f"unknown corpus graph {args.name!r}; "
                  f"available: {', '.join(sorted(corpus))}", file=sys.stderr)
            return EXIT_USAGE
        g = corpus[args.name]
    print(io.serialize_edge_list(g), end="")
    return EXIT_OK


def _family_from_args(args) -> harness.FamilySpec:
    if args.family == "corpus":
        return harness.FamilySpec("corpus")
    if args.family.startswith("connected"):
        return harness.FamilySpec("exhaustive_connected",
                                  n=int(args.family[len("connected"):]))
    if args.family.endswith(".g6"):
        return harness.FamilySpec("graph6_file", path=args.family)
    if args.family == "block_trees":
        return harness.FamilySpec("random_block_trees", count=args.count,
                                  max_n=args.max_n, seed=args.seed)
    raise ValueError(f"unknown family {args.family!r} "
                     "(use corpus | connected<N> | block_trees | <path>.g6)")


def _finish_suite(report: harness.SuiteReport) -> int:
    print(json.dumps(report.to_dict(), indent=2, sort_keys=True))
    for skip in report.skips:
        print(f"skipped: {skip}", file=sys.stderr)
    if report.violations or report.candidates:
        return EXIT_VIOLATIONS
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.suite == "blocks":
        report = harness.verify_block_theorem(_family_from_args(args))
    elif args.suite == "star":
        report = harness.verify_star_theorem(args.r_max)
    elif args.suite == "regular":
        report = harness.verify_regular_classification(args.max_n, args.r)
    elif args.suite == "gluing":
        corpus = paper_corpus()
        report = harness.verify_gluing_theorem([
            (corpus["fig1a_G"], 3, corpus["fig1b_H"], 4),
            (corpus["fig1a_G"], 1, corpus["fig1b_H"], 4)])
    else:
        print(f"unknown suite {args.suite!r}", file=sys.stderr)
        return EXIT_USAGE
    return _finish_suite(report)


def _cmd_search(args) -> int:
    if args.graph6:
        fam = harness.FamilySpec("graph6_file", path=args.graph6)
    else:
        fam = harness.FamilySpec("exhaustive_connected", n=args.max_n)
    report = harness.search_conjecture(fam)
    if report.candidates:
        print("note: accessible-but-not-strongly-unmixed candidates found; "
              "this is a discovery to examine, not necessarily a bug",
              file=sys.stderr)
    return _finish_suite(report)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bei",
                                description="combinatorics of binomial edge ideals: "
                                "cutsets, unmixedness, accessibility")
    sub = p.add_subparsers(dest="cmd", required=True)

    def add_input(sp):
        sp.add_argument("file")
        sp.add_argument("--format", choices=("edgelist", "graph6"),
                        default="edgelist")

    sp = sub.add_parser("analyze", help="predicates and cutsets of one graph")
    add_input(sp)
    sp.add_argument("--props", default="",
                    help="comma list: unmixed,accessible,su,rcut=R,cm")
    sp.add_argument("--cutsets", action="store_true",
                    help="force full cutset emission")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(fn=_cmd_analyze)

    sp = sub.add_parser("decompose", help="primary decomposition table")
    add_input(sp)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(fn=_cmd_decompose)

    sp = sub.add_parser("blocks", help="block decomposition")
    add_input(sp)
    sp.add_argument("--whiskered", action="store_true",
                    help="also emit each block with whiskers")
    sp.set_defaults(fn=_cmd_blocks)

    sp = sub.add_parser("construct", help="emit a constructed graph")
    csub = sp.add_subparsers(dest="what", required=True)
    c1 = csub.add_parser("star")
    c1.add_argument("m", type=int)
    c1.add_argument("n", type=int)
    c1.add_argument("r", type=int)
    c1.add_argument("--whiskered", action="store_true")
    c2 = csub.add_parser("corpus")
    c2.add_argument("name")
    sp.set_defaults(fn=_cmd_construct)

    sp = sub.add_parser("verify", help="run a theorem-verification suite")
    sp.add_argument("suite", choices=("blocks", "star", "regular", "gluing"))
    sp.add_argument("--family", default="corpus")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--count", type=int, default=50)
    sp.add_argument("--max-n", type=int, default=6, dest="max_n")
    sp.add_argument("--r-max", type=int, default=4, dest="r_max")
    sp.add_argument("--r", type=int, default=3)
    sp.add_argument("--budget", type=float, default=None,
                    help="per-graph budget in seconds")
    sp.set_defaults(fn=_cmd_verify)

    sp = sub.add_parser("search", help="conjecture search")
    sp.add_argument("target", choices=("conjecture",))
    sp.add_argument("--max-n", type=int, default=5, dest="max_n")
    sp.add_argument("--graph6", default=None)
    sp.add_argument("--budget", type=float, default=None)
    sp.set_defaults(fn=_cmd_search)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK
    if getattr(args, "budget", None):
        import os
        os.environ["BEI_BUDGET_SECS"] = str(args.budget)
    try:
        return args.fn(args)
    except (io.ParseError, ValueError, FileNotFoundError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (CutsetBudgetError, BudgetExceeded) as e:
        print(f"budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
