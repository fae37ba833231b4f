"""Command-line interface.

Exit codes: 0 ok, 1 verification failure, 2 usage or input error,
3 search budget exhausted.  Machine output goes to stdout, diagnostics
to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .fileio import (
    FormatError,
    dumps_decomposition,
    dumps_graph,
    graph_from_obj,
    loads_decomposition,
    loads_graph,
    render_paths,
    to_dot,
)
from .gallai import gallai_decompose
from .graphs import DomainError, build_complete, build_levi
from .minimal import certify_l1m2, min_decompose_l1m2
from .oddgraph import DEFAULT_MAX_STEPS, BudgetExceeded
from .oracle import DEFAULT_NODE_BUDGET, exact_path_number
from .paths import (
    binom,
    edge_count_lower_bound,
    floor_bound,
    gallai_bound,
    odd_vertex_lower_bound,
    verify_decomposition,
)
from .walecki import walecki

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


def _write(path: Optional[str], text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def cmd_gen(args: argparse.Namespace) -> int:
    if args.family == "levi":
        g = build_levi(args.m, args.k)
        name = f"L1({args.m},{args.k})"
    else:
        g = build_complete(args.m)
        name = f"K{args.m}"
    _write(args.out, dumps_graph(g))
    if args.dot:
        _write(args.dot, to_dot(g, name))
    return EXIT_OK


def _emit_decomposition(args: argparse.Namespace, g, d) -> None:
    graph = g.graph if hasattr(g, "graph") else g
    sys.stdout.write(render_paths(graph, d))
    if args.out:
        _write(args.out, dumps_decomposition(d, g))


def cmd_decompose(args: argparse.Namespace) -> int:
    if args.method == "gallai":
        lg = build_levi(args.m, args.k)
        d, trace = gallai_decompose(args.m, args.k, seed=args.seed, max_steps=args.max_steps)
        print(f"size={len(d)} bound={floor_bound(lg.graph.n)}")
        sys.stdout.write(trace.render())
        _emit_decomposition(args, lg, d)
    elif args.method == "walecki":
        g = build_complete(args.m)
        w = walecki(args.m)
        print(f"size={w.size} bound={edge_count_lower_bound(g)} kind={w.kind}")
        _emit_decomposition(args, g, w.decomposition)
    else:
        lg = build_levi(args.m, 2)
        d = min_decompose_l1m2(args.m)
        print(f"size={len(d)} bound={edge_count_lower_bound(lg.graph)}")
        _emit_decomposition(args, lg, d)
        if args.certify:
            cert = certify_l1m2(args.m)
            sys.stdout.write(cert.render())
            return EXIT_OK if cert.minimal else EXIT_FAIL
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    g = loads_graph(_read(args.graph))
    d, inline = loads_decomposition(_read(args.decomposition))
    if isinstance(inline, dict):
        embedded = graph_from_obj(inline)
        if embedded.labels != g.labels or embedded.edges != g.edges:
            raise FormatError("decomposition was built for a different graph")
    report = verify_decomposition(g, d)
    sys.stdout.write(report.render())
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_pathnumber(args: argparse.Namespace) -> int:
    g = loads_graph(_read(args.graph))
    result = exact_path_number(g, node_budget=args.budget)
    if result.exact:
        print(f"pathnumber={result.path_number} status=Exact nodes={result.nodes_explored}")
    else:
        print(
            f"status=BudgetExceeded upper={result.best_upper} lower={result.best_lower} "
            f"nodes={result.nodes_explored}"
        )
    if args.witness:
        sys.stdout.write(render_paths(g, result.witness))
    return EXIT_OK if result.exact else EXIT_BUDGET


def cmd_bounds(args: argparse.Namespace) -> int:
    lg = build_levi(args.m, args.k)
    n = binom(args.m, args.k - 1) + binom(args.m, args.k)
    print(f"n={n} floor={floor_bound(n)} ceil={gallai_bound(n)} edges={len(lg.graph.edges)}")
    print(f"odd_bound={odd_vertex_lower_bound(lg.graph)} edge_bound={edge_count_lower_bound(lg.graph)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="levidecomp",
        description="Path decompositions of Levi graphs L1(m,k) and complete graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="emit a graph file")
    gen_sub = gen.add_subparsers(dest="family", required=True)
    for family in ("levi", "complete"):
        p = gen_sub.add_parser(family)
        p.add_argument("m", type=int)
        if family == "levi":
            p.add_argument("k", type=int)
        p.add_argument("--out", help="graph file (default: stdout)")
        p.add_argument("--dot", help="also write a DOT rendering here")
        p.set_defaults(func=cmd_gen)

    dec = sub.add_parser("decompose", help="run a construction")
    dec_sub = dec.add_subparsers(dest="method", required=True)
    p = dec_sub.add_parser("gallai", help="floor(n/2) decomposition of L1(m,k)")
    p.add_argument("m", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--seed", type=int, default=0, help="seed for all-odd leaves")
    p.add_argument("--max-steps", type=int, default=DEFAULT_MAX_STEPS)
    p.add_argument("--out", help="write the decomposition file here")
    p.set_defaults(func=cmd_decompose)
    p = dec_sub.add_parser("walecki", help="minimum decomposition of K_m")
    p.add_argument("m", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_decompose)
    p = dec_sub.add_parser("min-l1m2", help="minimum decomposition of L1(m,2)")
    p.add_argument("m", type=int)
    p.add_argument("--certify", action="store_true", help="re-verify and print lower bounds")
    p.add_argument("--out")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="check a decomposition file against a graph file")
    p.add_argument("graph")
    p.add_argument("decomposition")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("pathnumber", help="exact path number by branch and bound")
    p.add_argument("graph")
    p.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET)
    p.add_argument("--witness", action="store_true")
    p.set_defaults(func=cmd_pathnumber)

    p = sub.add_parser("bounds", help="size bounds for L1(m,k)")
    p.add_argument("m", type=int)
    p.add_argument("k", type=int)
    p.set_defaults(func=cmd_bounds)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (DomainError, FormatError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
