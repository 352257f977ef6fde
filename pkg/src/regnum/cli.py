"""Command-line interface: ``regnum <command> ...``.

Exit status: 0 on success, 1 when a hunt or verification finds a problem,
2 on bad input or usage.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path
from typing import Iterator

from . import __version__
from .bounds import bounds_report, edge_coloring
from .coloring import ColoringError, edge_coloring_bipartite, edge_coloring_vizing
from .corpus import all_graphs, all_trees, read_graph6_lines, write_graph6
from .families import (
    FamilyError,
    complete_bipartite_partition,
    complete_minus_edge_partition,
    complete_partition,
    tree_partition,
    wheel_partition,
)
from .graph import Graph, GraphError, parse_edge_list, parse_graph6, serialize_graph6
from .hunts import edge_removal_scan, hunt_degree_bound, hunt_kmn, kmn_to_csv, records_to_csv
from .regularity import PartitionCertificate, verify_certificate
from .solver import default_budget, regular_number

GRAPH6_SUFFIXES = {".g6", ".graph6"}

EXIT_OK, EXIT_FOUND, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _add_input(p: argparse.ArgumentParser, required: bool = True):
    grp = p.add_mutually_exclusive_group(required=required)
    grp.add_argument("--graph6", help="graph given inline as a graph6 string")
    grp.add_argument("--input", type=Path,
                     help="file of graph6 lines (.g6/.graph6) or an edge list (anything else)")


def _add_format(p: argparse.ArgumentParser):
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="regnum",
                                     description="Regular number of graphs: exact values, "
                                                 "bounds, family constructions and hunts.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("exact", help="exact regular number with a certificate")
    _add_input(p)
    _add_format(p)
    p.add_argument("--budget", type=int, help="search-node budget (default: $REGNUM_BUDGET or 1e7)")
    p.add_argument("--largest-first", action="store_true",
                   help="try high-degree classes first when branching")

    p = sub.add_parser("bounds", help="all lower and upper bounds")
    _add_input(p)
    _add_format(p)

    p = sub.add_parser("verify", help="check a partition certificate against a graph")
    _add_input(p)
    p.add_argument("--certificate", type=Path, required=True)
    _add_format(p)

    p = sub.add_parser("color-edges", help="proper edge colouring")
    _add_input(p)
    p.add_argument("--method", choices=("auto", "bipartite", "vizing"), default="auto")
    _add_format(p)

    p = sub.add_parser("family", help="closed-form family partitions")
    fam = p.add_subparsers(dest="family", required=True)
    f = fam.add_parser("wheel")
    f.add_argument("--p", type=int, required=True)
    f = fam.add_parser("tree")
    f.add_argument("--input", type=Path, required=True)
    f = fam.add_parser("kmn")
    f.add_argument("--m", type=int, required=True)
    f.add_argument("--n", type=int, required=True)
    f = fam.add_parser("kn")
    f.add_argument("--n", type=int, required=True)
    f.add_argument("--minus-edge", action="store_true")
    for f in fam.choices.values():
        _add_format(f)
        f.add_argument("--with-graph", action="store_true", help="include the edge list")

    p = sub.add_parser("hunt", help="conjecture hunts")
    hunt = p.add_subparsers(dest="hunt", required=True)
    h = hunt.add_parser("degree-bound", help="r <= Delta over a graph6 corpus")
    _add_input(h)
    h.add_argument("--budget", type=int)
    h.add_argument("--hamilton-budget", type=int, default=10**6)
    h.add_argument("--workers", type=int, default=1)
    h.add_argument("--summary-only", action="store_true")
    _add_format(h)
    h = hunt.add_parser("kmn", help="K_{m,n} recursion versus exact values")
    h.add_argument("--m-max", type=int, required=True)
    h.add_argument("--n-max", type=int, required=True)
    h.add_argument("--edge-cap", type=int, default=14)
    h.add_argument("--budget", type=int)
    _add_format(h)
    h = hunt.add_parser("edge-removal", help="r(G - e) for every edge")
    _add_input(h)
    h.add_argument("--budget", type=int)
    _add_format(h)

    p = sub.add_parser("corpus", help="write every graph on n vertices as graph6 lines")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--trees", action="store_true", help="trees only")
    p.add_argument("--output", type=Path, help="default: stdout")
    return parser


# ---------------------------------------------------------------------------
# input

def _is_graph6_file(path: Path) -> bool:
    return path.suffix.lower() in GRAPH6_SUFFIXES


def load_graphs(args) -> list[tuple[str, Graph]]:
    """Graphs named by --graph6 / --input, each with an identifier."""
    try:
        if args.graph6 is not None:
            return [(args.graph6, parse_graph6(args.graph6))]
        text = _read(args.input)
        if _is_graph6_file(args.input):
            out = [(line.strip(), parse_graph6(line)) for line in text.splitlines() if line.strip()]
            if not out:
                raise InputError(f"{args.input}: no graphs")
            return out
        return [(str(args.input), parse_edge_list(text))]
    except GraphError as exc:
        raise InputError(str(exc)) from None


def _read(path: Path) -> str:
    try:
        return path.read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _corpus_lines(args) -> Iterator:
    if args.graph6 is not None:
        return read_graph6_lines([args.graph6])
    if not _is_graph6_file(args.input):
        g = load_graphs(args)[0][1]
        return iter([(1, serialize_graph6(g), g)])
    try:
        fh = args.input.open()
    except OSError as exc:
        raise InputError(f"cannot read {args.input}: {exc.strerror}") from None

    def lines():
        with fh:
            yield from read_graph6_lines(fh)
    return lines()


# ---------------------------------------------------------------------------
# output

def _emit(fmt: str, rows: list[dict], text_lines: list[str] | None = None, out=None):
    out = out or sys.stdout
    if fmt == "json":
        json.dump(rows[0] if len(rows) == 1 else rows, out, indent=2)
        out.write("\n")
    elif fmt == "csv":
        flat = [_flatten(r) for r in rows]
        keys: list[str] = []
        for r in flat:
            keys += [k for k in r if k not in keys]
        w = csv.DictWriter(out, fieldnames=keys, lineterminator="\n")
        w.writeheader()
        w.writerows(flat)
    else:
        for line in text_lines if text_lines is not None else [json.dumps(r) for r in rows]:
            out.write(line + "\n")


def _flatten(d: dict, prefix: str = "") -> dict:
    out = {}
    for k, v in d.items():
        key = f"{prefix}{k}"
        if isinstance(v, dict):
            out.update(_flatten(v, key + "."))
        elif isinstance(v, list):
            out[key] = json.dumps(v)
        else:
            out[key] = v
    return out


# ---------------------------------------------------------------------------
# commands

def cmd_exact(args) -> int:
    budget = args.budget if args.budget is not None else default_budget()
    rows, text = [], []
    for gid, g in load_graphs(args):
        res = regular_number(g, budget, largest_first=args.largest_first)
        row = {"graph": gid, **res.to_dict()}
        rows.append(row)
        if res.exact:
            text.append(f"{gid}: r = {res.value} ({res.status}, {res.nodes} nodes)")
        else:
            text.append(f"{gid}: {res.lower} <= r <= {res.upper} (budget exhausted)")
        if res.certificate is not None:
            for cls, k in zip(res.certificate.edge_classes(g), res.certificate.degrees):
                text.append(f"  {k}-regular: {cls}")
    _emit(args.format, rows, text)
    return EXIT_OK


def cmd_bounds(args) -> int:
    rows, text = [], []
    for gid, g in load_graphs(args):
        if g.m == 0:
            raise InputError(f"{gid}: edgeless graph, r = 0 and no bounds apply")
        rep = bounds_report(g).to_dict()
        rows.append({"graph": gid, **rep})
        text.append(f"{gid}: {rep['best_lower']} <= r <= {rep['best_upper']}")
        text += [f"  {k} = {v}" for k, v in rep.items()]
    _emit(args.format, rows, text)
    return EXIT_OK


def cmd_verify(args) -> int:
    graphs = load_graphs(args)
    if len(graphs) != 1:
        raise InputError("verify takes exactly one graph")
    gid, g = graphs[0]
    try:
        cert = PartitionCertificate.from_json(_read(args.certificate))
    except (ValueError, json.JSONDecodeError) as exc:
        raise InputError(f"{args.certificate}: {exc}") from None
    problems = verify_certificate(g, cert)
    row = {"graph": gid, "ok": not problems, "classes": len(cert),
           "violations": [str(p) for p in problems]}
    text = [f"{gid}: certificate {'OK' if not problems else 'INVALID'} ({len(cert)} classes)"]
    text += [f"  {p}" for p in problems]
    _emit(args.format, [row], text)
    return EXIT_OK if not problems else EXIT_FOUND


def cmd_color_edges(args) -> int:
    rows, text = [], []
    for gid, g in load_graphs(args):
        try:
            if args.method == "bipartite":
                col = edge_coloring_bipartite(g)
            elif args.method == "vizing":
                col = edge_coloring_vizing(g)
            else:
                col = edge_coloring(g)
        except ColoringError as exc:
            raise InputError(f"{gid}: {exc}") from None
        rows.append({"graph": gid, **col.to_dict()})
        text.append(f"{gid}: {col.num_colors} colours")
        text += [f"  {e}: {c}" for e, c in zip(g.edges, col.color_of)]
    _emit(args.format, rows, text)
    return EXIT_OK


def cmd_family(args) -> int:
    try:
        if args.family == "wheel":
            res = wheel_partition(args.p)
        elif args.family == "tree":
            res = tree_partition(load_graphs(argparse.Namespace(graph6=None, input=args.input))[0][1])
        elif args.family == "kmn":
            res = complete_bipartite_partition(args.m, args.n)
        elif args.minus_edge:
            res = complete_minus_edge_partition(args.n)
        else:
            res = complete_partition(args.n)
    except FamilyError as exc:
        raise InputError(str(exc)) from None
    row = res.to_dict(include_graph=args.with_graph)
    text = [f"{res.family} {res.params}: r {'=' if res.exact else '<='} {res.claimed_r}"]
    text += [f"  {k}-regular: {cls}"
             for cls, k in zip(res.certificate.edge_classes(res.graph), res.certificate.degrees)]
    text += [f"  note: {nt}" for nt in res.notes]
    _emit(args.format, [row], text)
    return EXIT_OK


def cmd_hunt(args) -> int:
    if args.hunt == "degree-bound":
        report = hunt_degree_bound(_corpus_lines(args), args.budget, args.hamilton_budget,
                                   workers=args.workers)
        summary = report.summary()
        if args.format == "csv":
            sys.stdout.write(records_to_csv(report.records, "degree-bound"))
        elif args.format == "json":
            payload = summary if args.summary_only else {
                "summary": summary, "records": [r.to_dict() for r in report.records]}
            json.dump(payload, sys.stdout, indent=2)
            sys.stdout.write("\n")
        else:
            sys.stdout.write(f"graphs: {summary['graphs']}\n")
            for stage, cnt in sorted(summary["stages"].items()):
                sys.stdout.write(f"  {stage}: {cnt}\n")
            sys.stdout.write(f"solver checked: {summary['solver_checked']}, "
                             f"unresolved: {summary['unresolved']}, "
                             f"violations: {len(summary['violations'])}\n")
            for gid in summary["violations"]:
                sys.stdout.write(f"  VIOLATION {gid}\n")
        return EXIT_FOUND if report.violations else EXIT_OK

    if args.hunt == "kmn":
        if args.m_max > args.n_max or args.m_max < 1:
            raise InputError("need 1 <= m-max <= n-max")
        records = hunt_kmn(args.m_max, args.n_max, args.budget, args.edge_cap)
        if args.format == "csv":
            sys.stdout.write(kmn_to_csv(records))
        else:
            text = [f"K_{{{r.m},{r.n}}}: recursion {r.recursion}"
                    f"{'' if r.proven else ' (conjectural)'}, exact "
                    f"{'-' if r.exact is None else r.exact} -> {r.outcome}" for r in records]
            _emit(args.format, [r.to_dict() for r in records], text)
        return EXIT_FOUND if any(r.outcome == "unequal" for r in records) else EXIT_OK

    graphs = load_graphs(args)
    rows, text = [], []
    for gid, g in graphs:
        if g.m < 2:
            raise InputError(f"{gid}: edge removal scan needs at least two edges")
        rep = edge_removal_scan(g, args.budget)
        rows.append({"graph": gid, **rep.to_dict()})
        text.append(f"{gid}: r = {rep.r}, max increase {rep.max_delta} at {rep.argmax}")
        for row in rep.table:
            text.append(f"  without {tuple(row['edge'])}: "
                        + (f"r = {row['value']}" if "value" in row
                           else f"{row['lower']} <= r <= {row['upper']}"))
    _emit(args.format, rows, text)
    return EXIT_OK


def cmd_corpus(args) -> int:
    try:
        graphs = all_trees(args.n) if args.trees else all_graphs(args.n, args.connected)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if args.output:
        with args.output.open("w") as fh:
            write_graph6(graphs, fh)
    else:
        write_graph6(graphs, sys.stdout)
    return EXIT_OK


COMMANDS = {
    "exact": cmd_exact,
    "bounds": cmd_bounds,
    "verify": cmd_verify,
    "color-edges": cmd_color_edges,
    "family": cmd_family,
    "hunt": cmd_hunt,
    "corpus": cmd_corpus,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code not in (0, None) else EXIT_OK
    try:
        return COMMANDS[args.command](args)
    except InputError as exc:
        print(f"regnum: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


cli_dispatch = main

if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
