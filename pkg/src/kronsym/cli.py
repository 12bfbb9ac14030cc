"""Command-line interface.

Exit codes: 0 success / all cases pass, 1 verification failure, 2 usage or
parse error, 3 budget exceeded.  Graph arguments are file paths; ``.g6`` and
``.graph6`` files are read as graph6, anything else as an edge list.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .distinguishing import SearchBudget, distinguishing_index, distinguishing_number
from .errors import (BudgetExceeded, EnumerationCapExceeded, GroupNotEnumerated, KronsymError,
                     ParseError, SizeCapExceeded)
from .families import FORMULAS
from .graph_io import read_graph, serialize_graph
from .harness import HARNESS_MAX_VERTICES, emit_report, exit_status, run_suite
from .products import cartesian, kronecker
from .skeleton import cartesian_skeleton
from .symmetry import automorphism_group

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        kwargs.setdefault("add_help", False)
        super().__init__(*args, **kwargs)
        self.add_argument("--help", action="help", help="show this message and exit")


def _budget(args, **defaults) -> SearchBudget:
    return SearchBudget.from_env(**defaults, max_nodes=getattr(args, "budget", None))


def _graph_args(p, *names):
    for name in names:
        p.add_argument(name, type=Path)
    p.add_argument("--format", choices=("edgelist", "graph6"), default=None,
                   help="input format (default: by file extension)")


def _write(data: bytes):
    sys.stdout.buffer.write(data)
    sys.stdout.flush()


def _cmd_product(args) -> int:
    g, h = read_graph(args.A, args.format), read_graph(args.B, args.format)
    x = kronecker(g, h) if args.kind == "kron" else cartesian(g, h)
    _write(serialize_graph(x, args.out_format))
    return EXIT_OK


def _cmd_aut(args) -> int:
    g = read_graph(args.G, args.format)
    grp = automorphism_group(g, _budget(args).max_vertices)
    print(json.dumps({"order": grp.order, "generators": [list(p) for p in grp.generators],
                      "orbits": [sorted(o) for o in grp.orbits()]}))
    return EXIT_OK


def _cmd_distinguishing(args) -> int:
    g = read_graph(args.G, args.format)
    fn = distinguishing_number if args.command == "dnum" else distinguishing_index
    res = fn(g, _budget(args), strict=True)
    cert = res.certificate
    if isinstance(cert, dict):
        cert = [[u, v, c] for (u, v), c in cert.items()]
    print(json.dumps({"value": res.value, "certificate": list(cert), "group_order": res.group_order,
                      "nodes": res.nodes}))
    return EXIT_OK


def _cmd_skeleton(args) -> int:
    _write(serialize_graph(cartesian_skeleton(read_graph(args.G, args.format)), args.out_format))
    return EXIT_OK


def _cmd_families(args) -> int:
    fn, arity = FORMULAS[args.formula]
    if arity is not None and len(args.params) != arity:
        print(f"{args.formula} takes {arity} integer parameters", file=sys.stderr)
        return EXIT_USAGE
    print(fn(*args.params))
    return EXIT_OK


def _cmd_verify(args) -> int:
    caps = _budget(args, max_vertices=HARNESS_MAX_VERTICES)
    lines = run_suite(args.suite, caps, args.seed)
    report = emit_report(lines, timings=args.timings)
    if args.report:
        Path(args.report).write_bytes(report)
    else:
        _write(report)
    return exit_status(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="kronsym", description="Distinguishing numbers of graph products.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("product", help="Kronecker or Cartesian product of two graphs")
    p.add_argument("--kind", choices=("kron", "cart"), required=True)
    _graph_args(p, "A", "B")
    p.add_argument("--out-format", choices=("edgelist", "graph6"), default="edgelist")
    p.set_defaults(run=_cmd_product)

    p = sub.add_parser("aut", help="automorphism group order, generators and orbits")
    _graph_args(p, "G")
    p.set_defaults(run=_cmd_aut)

    for name, what in (("dnum", "distinguishing number"), ("dindex", "distinguishing index")):
        p = sub.add_parser(name, help=f"{what} with a certificate labeling")
        _graph_args(p, "G")
        p.add_argument("--budget", type=int, default=None, help="search node cap")
        p.set_defaults(run=_cmd_distinguishing)

    p = sub.add_parser("skeleton", help="Cartesian skeleton")
    _graph_args(p, "G")
    p.add_argument("--out-format", choices=("edgelist", "graph6"), default="edgelist")
    p.set_defaults(run=_cmd_skeleton)

    p = sub.add_parser("families", help="evaluate a closed-form family value")
    p.add_argument("formula", choices=sorted(FORMULAS))
    p.add_argument("params", type=int, nargs="*")
    p.set_defaults(run=_cmd_families)

    p = sub.add_parser("verify", help="run verification suites and write a JSON-lines report")
    p.add_argument("--suite", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=None, help="search node cap per solver call")
    p.add_argument("--report", default=None, help="output file (default stdout)")
    p.add_argument("--timings", action="store_true", help="record elapsed_ms (breaks byte reproducibility)")
    p.set_defaults(run=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.run(args)
    except (BudgetExceeded, SizeCapExceeded, GroupNotEnumerated, EnumerationCapExceeded) as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (KronsymError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
