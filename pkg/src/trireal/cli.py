"""Command-line front end: ``trireal {realize,check,verify,oracle,sweep}``.

Exit codes:
    0   success (realised / graphical / verified / found / clean sweep)
    1   verify failed, or no construction covers the sequence
    2   sequence not graphical
    3   oracle: no triangular realisation exists
    4   oracle: budget exhausted before a decision
    64  malformed command line or input
    70  internal invariant violated (a bug; please report the sequence)

Data goes to stdout (or ``--output``), diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .constructors import realize
from .errors import (
    BudgetExceeded,
    ExcludedCase,
    InternalInvariantViolation,
    MalformedInput,
    NotGraphical,
    NoTriangularRealization,
    UnsupportedClass,
)
from .graph import degree_sequence_of, edges_without_triangle, is_top_monotone_cycle
from .graphio import load_graph, to_dot, to_edge_list, to_json_dict
from .oracle import SearchBudget, conjecture_sweep, default_jobs, oracle_search
from .sequences import classify, is_graphical, parse_degree_sequence, render_sequence

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_NOT_GRAPHICAL = 2
EXIT_NONE_EXISTS = 3
EXIT_BUDGET = 4
EXIT_USAGE = 64
EXIT_INTERNAL = 70


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _err(msg: str) -> None:
    print(msg, file=sys.stderr)


def _budget(args, max_vertices: int = 10) -> SearchBudget:
    return SearchBudget(
        max_vertices=max(max_vertices, getattr(args, "max_vertices", None) or 0),
        node_limit=args.max_nodes,
        time_limit=args.time_limit,
    )


def cmd_realize(args) -> int:
    d = parse_degree_sequence(args.sequence)
    try:
        r = realize(d)
    except NotGraphical as exc:
        _err(f"not graphical: {exc}")
        return EXIT_NOT_GRAPHICAL
    except (UnsupportedClass, NoTriangularRealization, ExcludedCase) as exc:
        _err(f"{type(exc).__name__}: {exc}")
        return EXIT_FAIL
    witness = list(r.witness.vertices) if r.witness else None
    if args.format == "json":
        text = json.dumps(r.to_json_dict(), indent=2) + "\n"
    elif args.format == "dot":
        notes = [f"sequence {render_sequence(r.sequence)}", f"route {r.trace.route}"]
        if witness:
            notes.append("witness " + " ".join(map(str, witness)))
        text = to_dot(r.graph, comments=notes)
    else:
        text = to_edge_list(r.graph)
        _err(f"route: {r.trace.route}")
        if witness:
            _err("witness: " + " ".join(map(str, witness)))
    for flag in r.trace.flags:
        _err(f"note: {flag}")
    _emit(text, args.output)
    return EXIT_OK


def cmd_check(args) -> int:
    d = parse_degree_sequence(args.sequence)
    ok = is_graphical(d)
    cls = classify(d)
    shape = f" {cls.spec}" if cls.spec is not None else ""
    _emit(f"{'graphical' if ok else 'not graphical'}\nclass: {cls.tag}{shape}\n", args.output)
    return EXIT_OK if ok else EXIT_NOT_GRAPHICAL


def cmd_verify(args) -> int:
    if args.graph == "-":
        text = sys.stdin.read()
    else:
        with open(args.graph, encoding="utf-8") as fh:
            text = fh.read()
    if args.graph != "-" and not text.strip():
        raise MalformedInput(f"{args.graph} is empty")
    g, witness = load_graph(text)
    degs = degree_sequence_of(g)
    bad = edges_without_triangle(g)
    lines = [f"n={g.n} m={g.num_edges} degrees {render_sequence(degs)}"]
    ok = not bad
    lines.append("triangular" if ok else f"NOT triangular: {len(bad)} edge(s) outside triangles, e.g. {bad[:5]}")
    if args.sequence is not None:
        want = parse_degree_sequence(args.sequence)
        match = degs == want
        ok = ok and match
        lines.append("degree sequence matches" if match else f"degree sequence MISMATCH: wanted {render_sequence(want)}")
    if witness:
        try:
            top = is_top_monotone_cycle(g, witness)
        except Exception:
            top = False
        lines.append(f"witness cycle: {'top monotone' if top else 'not top monotone'}")
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_oracle(args) -> int:
    d = parse_degree_sequence(args.sequence)
    try:
        g = oracle_search(d, _budget(args, len(d)), prune_isomorphs=args.prune_isomorphs)
    except BudgetExceeded as exc:
        _err(f"budget exceeded: {exc}")
        return EXIT_BUDGET
    if g is None:
        _err(f"no triangular realisation of {render_sequence(d)}")
        return EXIT_NONE_EXISTS
    if args.format == "json":
        text = json.dumps(to_json_dict(g), indent=2) + "\n"
    elif args.format == "dot":
        text = to_dot(g, comments=[f"sequence {render_sequence(d)}", "route oracle"])
    else:
        text = to_edge_list(g)
    _emit(text, args.output)
    return EXIT_OK


def cmd_sweep(args) -> int:
    if args.max_n < 1:
        raise MalformedInput("--max-n must be >= 1")
    report = conjecture_sweep(
        args.max_n,
        args.min_degree,
        budget=_budget(args, args.max_n),
        jobs=args.jobs,
        prune_isomorphs=args.prune_isomorphs,
    )
    text = report.to_json() + "\n" if args.format == "json" else report.to_table() + "\n"
    _emit(text, args.output)
    if report.counterexamples:
        _err("counterexamples: " + " ".join(render_sequence(s) for s in report.counterexamples))
    if report.budget_exceeded:
        _err(f"{len(report.budget_exceeded)} sequence(s) exceeded the budget")
    return EXIT_OK if report.clean else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="trireal", description="Triangular realisations of degree sequences.")
    sub = ap.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def out(p):
        p.add_argument("-o", "--output", help="write data here instead of stdout")

    def budget(p):
        p.add_argument("--max-nodes", type=int, default=None, help="search-tree node limit")
        p.add_argument("--time-limit", type=float, default=None, help="wall-clock limit in seconds")
        p.add_argument("--prune-isomorphs", action="store_true", help="skip symmetric branches")

    p = sub.add_parser("realize", help="build a triangular realisation")
    p.add_argument("sequence", help='e.g. "6^6,4^2" or "5 5 5 5 5 5"')
    p.add_argument("--format", choices=["edges", "json", "dot"], default="edges")
    out(p)
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("check", help="graphicality and class of a sequence")
    p.add_argument("sequence")
    out(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("verify", help="check an edge-list or JSON graph file")
    p.add_argument("--graph", required=True, help="graph file, or - for stdin")
    p.add_argument("--sequence", help="expected degree sequence")
    out(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="exhaustive search for a triangular realisation")
    p.add_argument("sequence")
    p.add_argument("--format", choices=["edges", "json", "dot"], default="edges")
    p.add_argument("--max-vertices", type=int, default=None)
    budget(p)
    out(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("sweep", help="oracle over all graphical sequences up to a size")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--min-degree", type=int, default=4)
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default $TRIREAL_JOBS or 1)")
    p.add_argument("--format", choices=["table", "json"], default="table")
    budget(p)
    out(p)
    p.set_defaults(func=cmd_sweep)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "jobs", None) is None and args.verb == "sweep":
        args.jobs = default_jobs()
    try:
        return args.func(args)
    except InternalInvariantViolation as exc:
        _err(f"internal error: {exc}")
        return EXIT_INTERNAL
    except (MalformedInput, OSError) as exc:
        _err(f"error: {exc}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
