"""Command-line front end: ``circis <subcommand> ...``.

Exit status: 0 on success, 1 when a check finds a violation, 2 on a usage
error (bad arguments, unparsable graph, out-of-range request).
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence, Union

from ._bits import iter_bits
from .census import CENSUS_CAP, DEFAULT_K_MAX, census, is_p4_free_circulant, parse_filters, write_jsonl
from .circulant import (
    Circulant,
    complement_circulant,
    component_count,
    component_subgraph,
    format_circulant,
    parse_circulant,
)
from .cis import is_cis_bruteforce, is_cis_circulant
from .combs import (
    MAX_COMB_N,
    build_anticomb,
    build_comb,
    build_settled_anticomb,
    build_settled_comb,
    bull_graph,
    find_unsettled,
    holzman_graph,
    p4_graph,
)
from .enumeration import canonical_gap_classes, cliques_through, format_gap_class
from .errors import CircisError
from .graphs import SimpleGraph, from_edge_list, from_graph6, is_p4_free, to_edge_list, to_graph6
from .paired import (
    PairedSpec,
    co_reduce,
    format_spec,
    gn_family,
    lcm_reduce,
    paired_component_count,
    paired_is_co_connected,
    parse_spec,
    realize,
    recognize_paired,
    reduce_connected,
)
from .verify import ORDER_BOUND, SUITES, fixtures, verify

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2

Graph = Union[SimpleGraph, Circulant]

NAMED = {
    "p4": lambda k: p4_graph(),
    "bull": lambda k: bull_graph(),
    "holzman": lambda k: holzman_graph(),
    "comb": build_comb,
    "settled-comb": build_settled_comb,
    "anticomb": build_anticomb,
    "settled-anticomb": build_settled_anticomb,
}


class UsageError(Exception):
    pass


def parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            n = int(text)
            return n, n
        return int(lo), int(hi)
    except ValueError:
        raise UsageError(f"--range expects A..B, got {text!r}") from None


def read_graph(text: str) -> Graph:
    """A graph from the command line.

    Accepted forms: a paired spec 'C(n;a,b;...)', a circulant 'n:d1,d2,...',
    'gn:K' for the K-th G_n family member, a named graph ('p4', 'bull',
    'holzman', 'comb:K', 'settled-comb:K', 'anticomb:K', 'settled-anticomb:K'),
    a path to an edge-list file, or a graph6 string.
    """
    t = text.strip()
    if t.startswith("C("):
        return realize(parse_spec(t))
    head, sep, tail = t.partition(":")
    if head == "gn" and sep:
        return realize(gn_family(int(tail)))
    if head in NAMED:
        if head in ("p4", "bull", "holzman"):
            return NAMED[head](0)
        if not sep:
            raise UsageError(f"{head} needs a size, e.g. {head}:3")
        return NAMED[head](int(tail))
    if sep and head.isdigit():
        return parse_circulant(t)
    if os.path.exists(t):
        with open(t, encoding="utf-8") as fh:
            return from_edge_list(fh.read())
    return from_graph6(t)


def read_spec_or_graph(text: str) -> Union[PairedSpec, Graph]:
    t = text.strip()
    if t.startswith("C("):
        return parse_spec(t)
    if t.startswith("gn:"):
        return gn_family(int(t[3:]))
    return read_graph(t)


def _emit(line: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(line + "\n")
    else:
        print(line)


# --- subcommands --------------------------------------------------------------

def cmd_build(args) -> int:
    g = read_graph(args.graph)
    if args.format == "circulant":
        if not isinstance(g, Circulant):
            raise UsageError("only circulants have the n:d1,d2,... form")
        text = format_circulant(g)
    else:
        sg = g.to_graph() if isinstance(g, Circulant) else g
        text = to_graph6(sg) if args.format == "graph6" else to_edge_list(sg).rstrip("\n")
    _emit(text, args.out)
    return EXIT_OK


def cmd_analyze(args) -> int:
    g = read_graph(args.graph)
    if isinstance(g, Circulant):
        report = is_cis_circulant(g)
        out = report.to_dict()
        out["connected"] = component_count(g) == 1
        out["co_connected"] = component_count(complement_circulant(g)) == 1
        out["p4_free"] = is_p4_free_circulant(g)
        spec = recognize_paired(g, args.k_max) if args.k_max > 0 else None
        out["paired"] = format_spec(spec) if spec is not None else None
        if args.gaps:
            co = complement_circulant(g)
            out["clique_classes"] = [
                format_gap_class(c)
                for c in sorted(canonical_gap_classes((list(iter_bits(m)) for m in cliques_through(g.adjacency, 0)), g.n))
            ]
            out["stable_classes"] = [
                format_gap_class(c)
                for c in sorted(canonical_gap_classes((list(iter_bits(m)) for m in cliques_through(co.adjacency, 0)), g.n))
            ]
    else:
        out = is_cis_bruteforce(g).to_dict()
        out["p4_free"] = is_p4_free(g)
        if args.combs:
            if g.n > MAX_COMB_N:
                raise UsageError(f"comb search limited to {MAX_COMB_N} vertices")
            out["unsettled"] = [v.to_dict() for v in find_unsettled(g, args.combs)]
    _emit(json.dumps(out), args.out)
    return EXIT_OK


def cmd_census(args) -> int:
    if args.range:
        lo, hi = parse_range(args.range)
    elif args.order is not None:
        lo = hi = args.order
    else:
        raise UsageError("census needs --order N or --range A..B")
    filters = parse_filters(args.filter)

    def progress(done, total):
        print(f"census: {done}/{total} blocks", file=sys.stderr)

    run = census(
        lo, hi, filters, args.jobs, k_max=args.k_max, canonical=args.canonical,
        checkpoint=args.checkpoint, stop_after=args.stop_after_blocks, cap=args.cap,
        progress=progress if args.verbose else None,
    )
    if not run.complete:
        print(f"census: stopped after {run.blocks_done}/{run.blocks_total} blocks; "
              f"rerun with the same --checkpoint to resume", file=sys.stderr)
        return EXIT_OK
    if args.out:
        write_jsonl(run.records, args.out)
    else:
        for r in run.records:
            print(r.to_json())
    print(f"census: {len(run.records)} records for orders {lo}..{hi}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    bounds = {"seed": args.seed}
    if args.order is not None:
        if args.suite not in ORDER_BOUND:
            raise UsageError(f"suite {args.suite} takes no --order bound")
        bounds[ORDER_BOUND[args.suite]] = args.order
    if args.k_max is not None:
        bounds["k_max"] = args.k_max
    report = verify(args.suite, **bounds)
    _report(report, args)
    return EXIT_OK if report.passed else EXIT_VIOLATION


def cmd_fixtures(args) -> int:
    report = fixtures()
    _report(report, args)
    return EXIT_OK if report.passed else EXIT_VIOLATION


def _report(report, args) -> None:
    if args.json:
        _emit(json.dumps(report.to_dict()), args.out)
    else:
        _emit("\n".join(report.lines()), args.out)


def decompose_lines(obj: Union[PairedSpec, Graph]) -> list[str]:
    """Component / co-component decomposition, one line per step."""
    lines = []
    if isinstance(obj, PairedSpec):
        s = obj
        while True:
            tag = format_spec(s)
            if s.n == 1:
                lines.append(f"{tag}: single vertex")
                break
            if s.pairs:
                core, mult = lcm_reduce(s)
                if mult > 1:
                    lines.append(f"{tag} = {format_spec(core)}[S_{mult}]")
            c = paired_component_count(s)
            if c > 1:
                s = reduce_connected(s)
                lines.append(f"{tag}: {c} components, each {format_spec(s)}")
                continue
            if not paired_is_co_connected(s):
                b, rest = co_reduce(s)
                lines.append(f"{tag} = K_{b}[{format_spec(rest)}]")
                s = rest
                continue
            lines.append(f"{tag}: connected and co-connected (contains an induced P4)")
            break
        return lines
    if isinstance(obj, SimpleGraph):
        verdict = "P4-free" if is_p4_free(obj) else "contains an induced P4"
        return [f"graph on {obj.n} vertices: {verdict}"]
    g = obj
    while True:
        tag = format_circulant(g)
        if g.n == 1:
            lines.append(f"{tag}: single vertex")
            break
        c = component_count(g)
        if c > 1:
            g = component_subgraph(g)
            lines.append(f"{tag}: {c} components, each {format_circulant(g)}")
            continue
        co = complement_circulant(g)
        c = component_count(co)
        if c > 1:
            g = complement_circulant(component_subgraph(co))
            lines.append(f"{tag}: join of {c} copies of {format_circulant(g)}")
            continue
        lines.append(f"{tag}: connected and co-connected (contains an induced P4)")
        break
    return lines


def cmd_decompose(args) -> int:
    _emit("\n".join(decompose_lines(read_spec_or_graph(args.graph))), args.out)
    return EXIT_OK


# --- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="circis", description="CIS circulants: build, analyze, census, verify.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, graph=True):
        if graph:
            p.add_argument("graph", help="C(n;a,b;...), n:d1,d2,..., gn:K, a named graph, an edge-list file or graph6")
        p.add_argument("--out", help="write output to PATH instead of stdout")

    p = sub.add_parser("build", help="print a graph in a text encoding")
    common(p)
    p.add_argument("--format", choices=("circulant", "graph6", "edges"), default="circulant")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("analyze", help="CIS report and structural flags as JSON")
    common(p)
    p.add_argument("--k-max", type=int, default=DEFAULT_K_MAX, help="largest k tried when recognizing a paired spec")
    p.add_argument("--gaps", action="store_true", help="include gap classes of maximal cliques and stable sets")
    p.add_argument("--combs", type=int, default=0, metavar="K", help="for general graphs, list unsettled combs up to K")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("census", help="exhaustive census of circulants (JSON Lines)")
    common(p, graph=False)
    p.add_argument("--order", type=int)
    p.add_argument("--range", help="orders A..B")
    p.add_argument("--filter", help="comma-separated: connected,co-connected,cis,non-cis,p4-free,...")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--checkpoint", help="JSON Lines checkpoint file; rerun to resume")
    p.add_argument("--k-max", type=int, default=DEFAULT_K_MAX)
    p.add_argument("--canonical", action="store_true", help="one record per multiplier class (square-free orders)")
    p.add_argument("--cap", type=int, default=CENSUS_CAP, help=argparse.SUPPRESS)
    p.add_argument("--stop-after-blocks", type=int, help="stop after this many new blocks (resume testing)")
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("verify", help="run a named verification suite")
    common(p, graph=False)
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--order", type=int, help="order bound of the suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--k-max", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fixtures", help="reproduce the worked examples")
    common(p, graph=False)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_fixtures)

    p = sub.add_parser("decompose", help="component / co-component decomposition")
    common(p)
    p.set_defaults(func=cmd_decompose)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, CircisError, ValueError) as exc:
        print(f"circis: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
