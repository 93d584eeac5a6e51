"""Command-line front end.

Results go to stdout, diagnostics to stderr. A graph that fails to parse
exits with status 2.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional, TextIO

from .bench import CSV_COLUMNS, DEFAULT_MAX_SOLUTIONS, run_bench
from .degeneracy import build_ordered_graph, compute_degeneracy_ordering, verify_ordering
from .enumerator import CallbackSink, DeltaSink, EnumerationOptions, enumerate_subtrees
from .graph import Graph, GraphError, parse_edge_list, random_k_degenerate, to_edge_text
from .oracle import TooLarge, brute_force_degeneracy, brute_force_enumerate


class _Exit(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _load(path: str, dedupe: bool = False) -> Graph:
    try:
        if path == "-":
            return parse_edge_list(sys.stdin.read(), dedupe=dedupe)
        with open(path, encoding="utf-8") as fh:
            return parse_edge_list(fh.read(), dedupe=dedupe)
    except GraphError as exc:
        raise _Exit(2, f"{path}: {exc}") from None
    except OSError as exc:
        raise _Exit(2, f"{path}: {exc.strerror}") from None


def cmd_degeneracy(args: argparse.Namespace, out: TextIO) -> None:
    g = _load(args.file, args.dedupe)
    ordering = compute_degeneracy_ordering(g)
    assert verify_ordering(g, ordering)
    out.write(f"k {ordering.k}\n")
    out.write(" ".join(map(str, ordering.order)) + "\n")


def cmd_enumerate(args: argparse.Namespace, out: TextIO) -> None:
    g = _load(args.file, args.dedupe)
    og = build_ordered_graph(g, compute_degeneracy_ordering(g))
    options = EnumerationOptions(include_empty=args.include_empty, max_solutions=args.max_solutions)
    if args.mode == "count":
        stats = enumerate_subtrees(og, None, options)
        out.write(f"{stats.N}\n")
    elif args.mode == "deltas":
        enumerate_subtrees(og, DeltaSink(out), options)
    else:
        everything = range(g.n)

        def write(vertices: List[int]) -> None:
            if args.complement:
                inside = set(vertices)
                vertices = [v for v in everything if v not in inside]
            out.write(" ".join(map(str, vertices)) + "\n")

        enumerate_subtrees(og, CallbackSink(write), options)


def cmd_oracle(args: argparse.Namespace, out: TextIO) -> None:
    g = _load(args.file, args.dedupe)
    try:
        if args.what == "degeneracy":
            out.write(f"k {brute_force_degeneracy(g)}\n")
        else:
            for s in brute_force_enumerate(g):
                out.write(" ".join(map(str, s)) + "\n")
    except TooLarge as exc:
        raise _Exit(1, str(exc)) from None


def cmd_gen(args: argparse.Namespace, out: TextIO) -> None:
    out.write(to_edge_text(random_k_degenerate(args.n, args.k, args.seed)))


def cmd_bench(args: argparse.Namespace, out: TextIO) -> None:
    try:
        sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    except ValueError:
        raise _Exit(2, f"bad --sizes {args.sizes!r}") from None
    out.write(",".join(CSV_COLUMNS) + "\n")
    for report in run_bench(sizes, args.k, args.seed, args.repeats, args.max_solutions):
        out.write(report.csv_row() + "\n")
        out.flush()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="induced-subtrees", description="Enumerate induced subtrees of k-degenerate graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_command(name: str, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.add_argument("file", help="edge-list file, or - for stdin")
        p.add_argument("--dedupe", action="store_true", help="drop repeated edges instead of failing")
        return p

    p = graph_command("degeneracy", "print the degeneracy and an ordering")
    p.set_defaults(func=cmd_degeneracy)

    p = graph_command("enumerate", "enumerate induced subtrees")
    p.add_argument("--mode", choices=("count", "list", "deltas"), default="count")
    p.add_argument("--complement", action="store_true", help="list mode: print V \\ S (a feedback vertex set) for each subtree S")
    p.add_argument("--include-empty", action="store_true", help="also report the empty set")
    p.add_argument("--max-solutions", type=int, default=None, help="stop after this many solutions")
    p.set_defaults(func=cmd_enumerate)

    p = graph_command("oracle", "brute-force answers for small graphs")
    p.add_argument("--what", choices=("subtrees", "degeneracy"), default="subtrees")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="random graph with degeneracy at most k")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="time count-mode enumeration, CSV output")
    p.add_argument("--sizes", required=True, help="comma-separated vertex counts")
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--repeats", type=int, default=1)
    p.add_argument("--max-solutions", type=int, default=DEFAULT_MAX_SOLUTIONS, help="truncate each run after this many solutions")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[List[str]] = None, out: Optional[TextIO] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "enumerate" and args.complement and args.mode == "deltas":
        parser.error("--complement applies to --mode list (and is a no-op for count)")
    if args.command == "gen" and (args.n < 1 or args.k < 0):
        parser.error("gen needs --n >= 1 and --k >= 0")
    out = out or sys.stdout
    try:
        args.func(args, out)
    except _Exit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except BrokenPipeError:
        return 0
    return 0


if __name__ == "__main__":
    sys.exit(main())
