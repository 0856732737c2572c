"""Command-line interface.

Every command prints exactly one JSON report on stdout; diagnostics go to
stderr.  Exit codes: 0 success, 1 verified false, 2 usage or input error,
3 budget guard.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Sequence

from . import __version__
from .catalog import NAMES, UnknownName, build_named
from .enumeration import (
    BudgetExceeded,
    EnumSpec,
    InvalidSpec,
    TooLargeForOracle,
    brute_force_enumerate,
    certify,
    enumerate_graphs,
    write_census,
)
from .graphcore import Graph, GraphError, decode_graph6, encode_graph6
from .qsr import (
    DegreeTooSmall,
    ParameterMismatch,
    QsrError,
    analyze,
    check_counting_identities,
    mismatch_reason,
    sqsr_bounds,
    t_profile,
)

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

log = logging.getLogger("qsrgraphs")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _emit(command: str, inputs: dict, status: str, result=None, error: str | None = None) -> None:
    doc = {"command": command, "input": inputs, "status": status, "version": __version__,
           "result": result}
    if error is not None:
        doc["error"] = error
    json.dump(doc, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _c_list(text: str) -> list[int]:
    try:
        values = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad c-list {text!r}; expected e.g. 3,2,1") from None
    if not values:
        raise argparse.ArgumentTypeError("c-list must be non-empty")
    return sorted(set(values), reverse=True)


def _load_graphs(args) -> list[Graph]:
    if getattr(args, "catalog", None):
        return [build_named(args.catalog)]
    if args.path is None:
        raise UsageError("give a graph6 file path, '-' for stdin, or --catalog NAME")
    if args.path == "-":
        lines = sys.stdin.read().splitlines()
    else:
        with open(args.path) as fh:
            lines = fh.read().splitlines()
    graphs = [decode_graph6(line.strip()) for line in lines if line.strip()]
    if not graphs:
        raise UsageError("no graph6 input")
    return graphs


def cmd_verify(args) -> int:
    inputs = {"path": args.path, "catalog": args.catalog, "n": args.n, "k": args.k, "a": args.a,
              "c": args.c, "strict": args.strict}
    graphs = _load_graphs(args)
    checked = []
    for G in graphs:
        n = args.n if args.n is not None else G.n
        why = mismatch_reason(G, n, args.k, args.a, args.c, args.strict)
        checked.append({"graph6": encode_graph6(G).decode(), "matches": why is None, "reason": why})
        if why is not None:
            _emit("verify", inputs, "error", {"graphs": checked}, why)
            return EXIT_FALSE
    _emit("verify", inputs, "ok", {"graphs": checked})
    return EXIT_OK


def _analysis(G: Graph) -> dict:
    sig = analyze(G)
    out = {"graph6": encode_graph6(G).decode(), "signature": sig.to_dict(),
           "t_profiles": [t_profile(G, u, sig.c_values).to_dict() for u in range(G.n)]}
    if sig.a == 0 and sig.c_values == (sig.k - 1, sig.k - 2, sig.k - 3):
        out["identities"] = check_counting_identities(G, sig.c_values).to_dict()
    return out


def cmd_analyze(args) -> int:
    inputs = {"path": args.path, "catalog": args.catalog}
    graphs = _load_graphs(args)
    results = []
    for G in graphs:
        try:
            results.append(_analysis(G))
        except (QsrError, ParameterMismatch) as exc:
            results.append({"graph6": encode_graph6(G).decode(), "error": str(exc)})
            _emit("analyze", inputs, "error", {"graphs": results}, str(exc))
            return EXIT_FALSE
    _emit("analyze", inputs, "ok", {"graphs": results})
    return EXIT_OK


def cmd_enumerate(args) -> int:
    spec = EnumSpec(args.n, args.k, args.a, tuple(args.c), args.proper, args.strict)
    inputs = {**spec.to_dict(), "oracle": args.oracle, "out": args.out, "jobs": args.jobs,
              "override_budget": args.override_budget, "root_star": not args.no_root_star}
    try:
        if args.oracle:
            report = brute_force_enumerate(spec)
        else:
            report = enumerate_graphs(spec, jobs=args.jobs, root_star=not args.no_root_star,
                                      override_budget=args.override_budget)
    except BudgetExceeded as exc:
        _emit("enumerate", inputs, "error", None, str(exc))
        return EXIT_BUDGET
    except (InvalidSpec, TooLargeForOracle) as exc:
        _emit("enumerate", inputs, "error", None, str(exc))
        return EXIT_USAGE
    result = report.to_dict()
    if args.certify:
        result["certification"] = certify(report).to_dict()
    if args.out:
        result["sidecar"] = write_census(report, args.out)
    print(f"{len(report.classes)} class(es)", file=sys.stderr)
    _emit("enumerate", inputs, "ok", result)
    return EXIT_OK


def cmd_bounds(args) -> int:
    inputs = {"k": args.k}
    try:
        b = sqsr_bounds(args.k)
    except DegreeTooSmall as exc:
        _emit("bounds", inputs, "error", None, str(exc))
        return EXIT_USAGE
    _emit("bounds", inputs, "ok", {"k": b.k, "lower": b.lower, "upper": b.upper})
    return EXIT_OK


def cmd_catalog(args) -> int:
    inputs = {"name": args.name, "out": args.out}
    try:
        G = build_named(args.name)
    except UnknownName as exc:
        _emit("catalog", inputs, "error", None, exc.args[0])
        return EXIT_USAGE
    line = encode_graph6(G)
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(line + b"\n")
    if args.format == "g6":
        sys.stdout.write(line.decode() + "\n")
    else:
        _emit("catalog", inputs, "ok", {"name": args.name, "n": G.n, "edges": G.num_edges(),
                                        "graph6": line.decode()})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="qsrgraphs", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def graph_source(sp):
        sp.add_argument("path", nargs="?", help="graph6 file, one graph per line; '-' for stdin")
        sp.add_argument("--catalog", choices=NAMES, help="use a catalog graph instead of a file")

    v = sub.add_parser("verify", help="check a graph against QSR parameters")
    graph_source(v)
    v.add_argument("--n", type=int, help="required order (default: the graph's own)")
    v.add_argument("--k", type=int, required=True)
    v.add_argument("--a", type=int, default=0)
    v.add_argument("--c", type=_c_list, required=True, help="comma-separated c-values")
    v.add_argument("--strict", action="store_true")
    v.set_defaults(func=cmd_verify)

    a = sub.add_parser("analyze", help="report the QSR signature and t-profiles")
    graph_source(a)
    a.set_defaults(func=cmd_analyze)

    e = sub.add_parser("enumerate", help="isomorph-free census of a QSR spec")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--k", type=int, required=True)
    e.add_argument("--a", type=int, default=0)
    e.add_argument("--c", type=_c_list, required=True)
    e.add_argument("--strict", action="store_true")
    e.add_argument("--proper", action="store_true", help="every c-value must be realized")
    e.add_argument("--oracle", action="store_true", help="use the brute-force oracle (n <= 8)")
    e.add_argument("--out", help="census file; metadata goes to OUT.json")
    e.add_argument("--jobs", type=int, default=None,
                   help="worker processes (default: $QSRGRAPHS_JOBS or 1)")
    e.add_argument("--override-budget", action="store_true")
    e.add_argument("--no-root-star", action="store_true",
                   help="do not fix vertex 0's neighbourhood")
    e.add_argument("--certify", action="store_true", help="re-check the census independently")
    e.set_defaults(func=cmd_enumerate)

    b = sub.add_parser("bounds", help="admissible orders for SQSR(n, k, 0; k-1, k-2, k-3)")
    b.add_argument("--k", type=int, required=True)
    b.set_defaults(func=cmd_bounds)

    c = sub.add_parser("catalog", help="emit a named graph")
    c.add_argument("--name", required=True)
    c.add_argument("--out")
    c.add_argument("--format", choices=["json", "g6"], default="json")
    c.set_defaults(func=cmd_catalog)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        _emit(argv[0] if argv else "", {"argv": argv}, "error", None, str(exc))
        return EXIT_USAGE
    except SystemExit as exc:
        # --help / --version
        return EXIT_OK if not exc.code else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (UsageError, GraphError, UnknownName, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, UnknownName) else str(exc)
        print(f"error: {msg}", file=sys.stderr)
        _emit(args.command, {"argv": argv}, "error", None, msg)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
