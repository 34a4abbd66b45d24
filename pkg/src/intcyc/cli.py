"""Command-line front end.

Exit codes: 0 success, 1 verification failure or catalog disagreement,
2 unreadable or malformed input, 3 non-tree where a tree is required,
4 enumeration size limit exceeded, 5 infeasible palette size.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .catalog import tree_catalog
from .construct import ConstructionRequest, Infeasible, construct
from .graph import Graph, GraphError, is_tree, load_graph
from .invariants import spectrum_tree
from .oracle import DEFAULT_LIMIT_EDGES, SizeLimitError, exact_spectrum, oracle_report
from .verify import Coloring, ColoringError, find_violation

EXIT_FAIL, EXIT_INPUT, EXIT_NOT_TREE, EXIT_LIMIT, EXIT_INFEASIBLE = 1, 2, 3, 4, 5


class CliError(Exception):
    def __init__(self, code: int, message: str) -> None:
        super().__init__(message)
        self.code = code


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise CliError(EXIT_INPUT, f"cannot read {path}: {exc.strerror}") from None


def _graph(path: str) -> Graph:
    try:
        return load_graph(_read(path))
    except GraphError as exc:
        raise CliError(EXIT_INPUT, f"{path}: {exc}") from None


def _coloring(path: str, g: Graph) -> Coloring:
    try:
        c = Coloring.from_json(_read(path))
    except ColoringError as exc:
        raise CliError(EXIT_INPUT, f"{path}: {exc}") from None
    if len(c) != g.m:
        raise CliError(EXIT_INPUT, f"{path}: coloring has {len(c)} entries, graph has {g.m} edges")
    return c


def to_dot(g: Graph, c: Coloring | None = None) -> str:
    lines = ["graph G {"]
    lines += [f"  {x};" for x in range(g.n)]
    for e, (u, v) in enumerate(g.edges):
        label = f' [label="{c[e]}"]' if c is not None else ""
        lines.append(f"  {u} -- {v}{label};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_analyze(args: argparse.Namespace) -> str:
    g = _graph(args.graph)
    if args.exact:
        try:
            report = oracle_report(g, limit_edges=args.limit_edges)
        except SizeLimitError as exc:
            raise CliError(EXIT_LIMIT, str(exc)) from None
    else:
        if not is_tree(g):
            raise CliError(EXIT_NOT_TREE, "graph is not a tree; pass --exact to enumerate")
        if g.m == 0:
            raise CliError(EXIT_INPUT, "tree has no edges")
        report = spectrum_tree(g)
    return report.to_json() + "\n"


def cmd_color(args: argparse.Namespace) -> str:
    g = _graph(args.graph)
    if not is_tree(g):
        raise CliError(EXIT_NOT_TREE, "coloring construction needs a tree")
    if g.m == 0:
        raise CliError(EXIT_INPUT, "tree has no edges")
    if args.t < 1:
        raise CliError(EXIT_INPUT, "--t must be positive")
    result = construct(ConstructionRequest(g, args.t, args.mode))
    if isinstance(result, Infeasible):
        raise CliError(EXIT_INFEASIBLE, result.message())
    return result.to_json() + "\n"


def cmd_verify(args: argparse.Namespace) -> tuple[str, int]:
    g = _graph(args.graph)
    c = _coloring(args.coloring, g)
    v = find_violation(g, c, args.mode)
    if v is None:
        return json.dumps({"mode": args.mode, "pass": True}) + "\n", 0
    print(f"{args.mode} check failed: {v.describe()}", file=sys.stderr)
    doc = {"mode": args.mode, "pass": False, "witness": v.to_dict()}
    return json.dumps(doc, sort_keys=True) + "\n", EXIT_FAIL


def cmd_spectrum(args: argparse.Namespace) -> str:
    g = _graph(args.graph)
    try:
        res = exact_spectrum(g, args.t_max, graph_id=Path(args.graph).stem, limit_edges=args.limit_edges)
    except SizeLimitError as exc:
        raise CliError(EXIT_LIMIT, str(exc)) from None
    return res.to_json() + "\n"


def cmd_export_dot(args: argparse.Namespace) -> str:
    g = _graph(args.graph)
    c = _coloring(args.coloring, g) if args.coloring else None
    return to_dot(g, c)


def cmd_catalog(args: argparse.Namespace) -> tuple[str, int]:
    if args.max_edges > args.limit_edges:
        raise CliError(EXIT_LIMIT, f"--max-edges {args.max_edges} exceeds the enumeration limit {args.limit_edges}")
    lines, all_agree = [], True
    for g in tree_catalog(args.max_edges):
        formula = spectrum_tree(g)
        oracle = exact_spectrum(g, limit_edges=args.limit_edges)
        agree = formula.theta == oracle.theta_exact and formula.theta_cyc == oracle.theta_cyc_exact
        all_agree &= agree
        record = {
            "n": g.n,
            "edges": [list(e) for e in g.edges],
            "delta": formula.delta,
            "m_of_h": formula.m_of_h,
            "theta_formula": list(formula.theta),
            "theta_oracle": list(oracle.theta_exact),
            "theta_cyc_oracle": list(oracle.theta_cyc_exact),
            "agree": agree,
        }
        lines.append(json.dumps(record))
    return "".join(line + "\n" for line in lines), 0 if all_agree else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="intcyc", description="Interval and cyclically-interval edge colorings of trees.")
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name: str, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.add_argument("--output", "-o", help="write standard output here instead")
        return p

    p = add("analyze", "spectrum report (formula for trees, --exact for enumeration)")
    p.add_argument("graph")
    p.add_argument("--exact", action="store_true")
    p.add_argument("--limit-edges", type=int, default=DEFAULT_LIMIT_EDGES)
    p.set_defaults(func=cmd_analyze)

    p = add("color", "interval/cyclic t-coloring of a tree")
    p.add_argument("graph")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--mode", choices=("interval", "cyclic"), default="interval")
    p.set_defaults(func=cmd_color)

    p = add("verify", "check a coloring")
    p.add_argument("graph")
    p.add_argument("coloring")
    p.add_argument("--mode", choices=("proper", "interval", "cyclic"), default="proper")
    p.set_defaults(func=cmd_verify)

    p = add("spectrum", "exhaustive per-t coloring counts")
    p.add_argument("graph")
    p.add_argument("--t-max", type=int)
    p.add_argument("--limit-edges", type=int, default=DEFAULT_LIMIT_EDGES)
    p.set_defaults(func=cmd_spectrum)

    p = add("export-dot", "Graphviz DOT, edges labeled by color if a coloring is given")
    p.add_argument("graph")
    p.add_argument("coloring", nargs="?")
    p.set_defaults(func=cmd_export_dot)

    p = add("catalog", "formula/oracle agreement over all small trees, one JSON line each")
    p.add_argument("--max-edges", type=int, default=6)
    p.add_argument("--limit-edges", type=int, default=DEFAULT_LIMIT_EDGES)
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result = args.func(args)
    except CliError as exc:
        print(f"intcyc: {exc}", file=sys.stderr)
        return exc.code
    text, code = result if isinstance(result, tuple) else (result, 0)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
