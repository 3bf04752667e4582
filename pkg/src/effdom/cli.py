"""Command-line front end.

Exit codes: 0 success, 1 parse or usage error, 2 capacity exceeded,
3 no efficient dominating set, 4 theorem violation found, 5 the two EDS
deciders disagree.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from typing import Optional, Sequence

from .eds import eds_brute_force, eds_via_square, verify_eds
from .formats import FormatError, emit_graph, emit_graph6, parse_graph, sniff_format
from .graph import CapacityError, Graph, GraphError, square
from .harness import (
    SampleSpec,
    SearchReport,
    exhaustive_report,
    sample_graphs,
    search_counterexamples,
    verify_theorems,
)
from .patterns import class_report, resolve_patterns

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CAPACITY = 2
EXIT_NO_EDS = 3
EXIT_VIOLATION = 4
EXIT_MISMATCH = 5

log = logging.getLogger("effdom")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; 2 is reserved for capacity errors here
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read_graph(arg: str, fmt: Optional[str]) -> tuple[Graph, str]:
    if arg == "-":
        text = sys.stdin.read()
    elif os.path.isfile(arg):
        with open(arg) as fh:
            text = fh.read()
    else:
        text = arg.replace("\\n", "\n")
    fmt = fmt or sniff_format(text)
    return parse_graph(text, fmt), fmt


def _fmt_set(vertices) -> str:
    return "{" + ",".join(map(str, vertices)) + "}"


def cmd_check(args) -> int:
    g, _ = _read_graph(args.graph, args.format)
    for line in class_report(g).lines():
        print(line)
    return EXIT_OK


def cmd_square(args) -> int:
    g, fmt = _read_graph(args.graph, args.format)
    print(emit_graph(square(g), fmt))
    return EXIT_OK


def cmd_solve(args) -> int:
    g, _ = _read_graph(args.graph, args.format)
    if args.method == "both":
        by_square = eds_via_square(g)
        brute = eds_brute_force(g)
        for r in (by_square, brute):
            print(f"method={r.method} outcome={'Exists' if r.exists else 'NotExists'}"
                  + (f" set={_fmt_set(r.vertices)}" if r.exists else ""))
        if by_square.exists != brute.exists:
            print("agree=false")
            log.error("EDS deciders disagree on %s", emit_graph6(g) if g.n <= 62 else g)
            return EXIT_MISMATCH
        print("agree=true")
        result = brute
    else:
        result = eds_via_square(g) if args.method == "square" else eds_brute_force(g)
        print(f"method={result.method} outcome={'Exists' if result.exists else 'NotExists'}"
              + (f" set={_fmt_set(result.vertices)}" if result.exists else ""))
    if result.exists:
        assert verify_eds(g, result.vertices)
        return EXIT_OK
    return EXIT_NO_EDS


def _print_violation(g: Graph, verdict) -> None:
    print(f"VIOLATION theorem={verdict.theorem} graph6={emit_graph6(g)} "
          f"embedding={','.join(map(str, verdict.witness))}", flush=True)


def _emit_report(report: SearchReport, as_json: bool) -> int:
    sys.stdout.write(report.render())
    if as_json:
        print(report.to_json())
    return EXIT_OK if report.total_violations == 0 else EXIT_VIOLATION


def cmd_verify(args) -> int:
    modes = sum(x is not None for x in (args.graph, args.exhaustive, args.spec))
    if modes != 1:
        raise UsageError("verify takes exactly one of: a graph, --exhaustive N, --spec SPEC")
    if args.graph is not None:
        g, _ = _read_graph(args.graph, args.format)
        report = SearchReport()
        verdicts = verify_theorems(g)
        for v in verdicts:
            print(v)
        for v in report.record(g, verdicts):
            _print_violation(g, v)
        return _emit_report(report, args.json)
    if args.exhaustive is not None:
        if args.exhaustive > 7:
            raise CapacityError("exhaustive verification is capped at n = 7")
        report = exhaustive_report(args.exhaustive, jobs=args.jobs,
                                   on_violation=None if args.jobs > 1 else _print_violation)
        return _emit_report(report, args.json)
    if args.budget is None:
        raise UsageError("--spec requires --budget")
    report = search_counterexamples(SampleSpec.parse(args.spec), args.budget, on_violation=_print_violation)
    return _emit_report(report, args.json)


def cmd_sample(args) -> int:
    forbid = tuple(x for x in args.forbid.split(",") if x) if args.forbid else ()
    resolve_patterns(forbid)
    spec = SampleSpec(n=args.n, p=args.p, seed=args.seed, filter=forbid,
                      require_eds=args.require_eds, min_n=args.min_n)
    attempts = args.max_attempts if args.max_attempts is not None else 1000 * max(args.count, 1)
    produced = 0
    for g in sample_graphs(spec, attempts):
        if produced == args.count:
            break
        print(emit_graph6(g))
        produced += 1
    if produced < args.count:
        log.warning("only %d of %d graphs produced within %d attempts", produced, args.count, attempts)
    return EXIT_OK


def cmd_search(args) -> int:
    report = search_counterexamples(SampleSpec.parse(args.spec), args.budget, on_violation=_print_violation)
    return _emit_report(report, args.json)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="effdom", description="Efficient domination via graph squares.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def graph_cmd(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("graph", help="graph6 string, path to a graph file, or '-' for stdin")
        p.add_argument("--format", choices=("graph6", "edgelist"), default=None)
        return p

    graph_cmd("check", "report membership in each forbidden-pattern class").set_defaults(func=cmd_check)
    graph_cmd("square", "print the square of a graph in the input format").set_defaults(func=cmd_square)
    p = graph_cmd("solve", "decide whether an efficient dominating set exists")
    p.add_argument("--method", choices=("square", "brute", "both"), default="square")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check the square-graph theorems")
    p.add_argument("graph", nargs="?", default=None)
    p.add_argument("--format", choices=("graph6", "edgelist"), default=None)
    p.add_argument("--exhaustive", type=int, metavar="N", help="all labeled graphs with 1..N vertices")
    p.add_argument("--spec", help="sampling spec, e.g. n=20,p=0.3,seed=7")
    p.add_argument("--budget", type=int, help="number of sampling attempts for --spec")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true", help="also print a JSON summary line")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sample", help="emit seeded random class members as graph6 lines")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--forbid", default="", help="comma-separated pattern names, e.g. P6,banner")
    p.add_argument("--require-eds", action="store_true")
    p.add_argument("--min-n", type=int, default=0)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--max-attempts", type=int, default=None)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("search", help="sample class members and look for theorem violations")
    p.add_argument("--spec", required=True)
    p.add_argument("--budget", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_search)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (UsageError, FormatError, GraphError, KeyError, ValueError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
