"""Command-line front end.

Exit codes: 0 ok, 2 input error, 3 search budget exhausted, 4 mathematical
finding (bound or conjecture violated), 5 internal assertion failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import survey
from .enumeration import random_regular
from .errors import ConstructionNotRegular, GraphError
from .graph import Graph
from .graphio import encode_graph6, parse_graph, read_stream
from .solvers import SearchBudget, solve

EXIT_OK, EXIT_INPUT, EXIT_BUDGET, EXIT_FINDING, EXIT_INTERNAL = 0, 2, 3, 4, 5

SHAPE_ALIASES = {
    "forest": "forest",
    "a": "forest",
    "lif": "linear_forest",
    "linear_forest": "linear_forest",
    "lip": "induced_path",
    "path": "induced_path",
    "induced_path": "induced_path",
}

CUBIC_NOTE = "corpora assumed to hold all connected cubic graphs of each order"


class InputError(Exception):
    pass


def parse_range(text: str) -> list[int]:
    m = re.fullmatch(r"\s*(\d+)\s*(?:(?:-|\.\.)\s*(\d+)\s*)?", text)
    if not m:
        raise argparse.ArgumentTypeError(f"expected N or A-B, got {text!r}")
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) else lo
    if hi < lo:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return list(range(lo, hi + 1))


def _sniff_format(path: str) -> str:
    if path == "-":
        return "graph6"
    with open(path, encoding="ascii", errors="replace") as fh:
        for line in fh:
            if line.strip():
                return "edge_list" if re.fullmatch(r"\d+\s+\d+", line.strip()) else "graph6"
    return "graph6"


def _graphs(args) -> list[Graph]:
    graphs = []
    if getattr(args, "graph", None):
        graphs.append(parse_graph(args.graph))
    for path in args.input or []:
        if path != "-" and not Path(path).exists():
            raise InputError(f"no such file: {path}")
        graphs.extend(g for _, g in read_stream(path, _sniff_format(path)))
    return graphs


def _emit(args, records: list[dict] | dict, columns: Optional[Sequence[str]] = None) -> None:
    if args.format == "json":
        text = json.dumps(records, indent=2) + "\n"
    else:
        rows = records if isinstance(records, list) else [records]
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(columns or rows[0].keys()), lineterminator="\n",
                                extrasaction="ignore")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: (";".join(map(str, v)) if isinstance(v, list) else v) for k, v in row.items()})
        text = buf.getvalue()
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _budget(args) -> SearchBudget:
    return SearchBudget(node_limit=args.budget_nodes)


def cmd_solve(args) -> int:
    shape = SHAPE_ALIASES[args.shape]
    graphs = _graphs(args)
    if not graphs:
        raise InputError("no graph given")
    records = []
    incomplete = False
    for i, g in enumerate(graphs):
        res = solve(g, shape, _budget(args))
        incomplete |= not res.optimal
        records.append({
            "index": i,
            "shape": shape,
            "value": res.value,
            "optimal": int(res.optimal),
            "witness": list(res.witness),
            "nodes": res.nodes,
        })
    _emit(args, records)
    return EXIT_BUDGET if incomplete else EXIT_OK


def cmd_table_cubic(args) -> int:
    if not args.input:
        raise InputError("table-cubic needs --input corpus files")
    for path in args.input:
        if not Path(path).exists():
            raise InputError(f"missing corpus file: {path}")
    corpus = survey.load_corpus(args.input)
    if args.n:
        corpus = {n: c for n, c in corpus.items() if n in set(args.n)}
    print(f"# {CUBIC_NOTE}", file=sys.stderr)
    rows = survey.table_cubic(corpus, _budget(args), args.jobs)
    records = survey.cubic_records(rows)
    if args.format == "json":
        _emit(args, {"note": CUBIC_NOTE, "rows": records})
    else:
        _emit(args, records, survey.CUBIC_COLUMNS)
    return EXIT_OK if all(r.complete for r in rows) else EXIT_BUDGET


def cmd_table_g(args) -> int:
    corpus = survey.load_corpus(args.input) if args.input else None
    rows = survey.table_g(args.n or list(range(3, 9)), corpus, _budget(args), args.jobs)
    _emit(args, survey.g_records(rows), survey.G_COLUMNS)
    return EXIT_OK if all(r.complete for r in rows) else EXIT_BUDGET


def cmd_conjecture(args) -> int:
    corpus = survey.load_corpus(args.input) if args.input else None
    n_max = max(args.n) if args.n else 8
    report = survey.conjecture_sweep(n_max, corpus, _budget(args), args.jobs)
    if args.format == "json":
        _emit(args, report)
    else:
        rows = [{"n": r["n"], "classes": r["classes"], "min_f": r["min_f"],
                 "equality": [f"{e['graph6']}:{e['name']}" for e in r["equality"]]} for r in report["per_n"]]
        _emit(args, rows)
    for c in report["counterexamples"]:
        print(f"COUNTEREXAMPLE n={c['n']} f={c['f']} {c['graph6']}", file=sys.stderr)
    if report["counterexamples"]:
        return EXIT_FINDING
    return EXIT_OK if report["complete"] else EXIT_BUDGET


def cmd_nordhaus_gaddum(args) -> int:
    n_max = max(args.n) if args.n else 7
    report = survey.nordhaus_gaddum_sweep(n_max, _budget(args), args.jobs)
    if args.format == "json":
        _emit(args, report)
    else:
        rows = [{k: r[k] for k in ("n", "graphs", "max_a_sum", "max_lif_sum")}
                | {"equality_a": len(r["equality_a"]), "equality_lif": len(r["equality_lif"])}
                for r in report["per_n"]]
        _emit(args, rows)
    if report["violations"] or not all(p["attains"] for p in report["paths"]):
        for v in report["violations"]:
            print(f"VIOLATION {v}", file=sys.stderr)
        return EXIT_FINDING
    return EXIT_OK if report["complete"] else EXIT_BUDGET


def cmd_extremal(args) -> int:
    rs = args.r or list(range(2, 9))
    records = survey.extremal_report(rs)
    for rec in records:
        if rec["flag"]:
            print(f"FLAG r={rec['r']}: longest induced path has {rec['lip']} vertices, not {rec['r']}", file=sys.stderr)
    _emit(args, records)
    return EXIT_OK


def cmd_greedy(args) -> int:
    graphs = _graphs(args)
    if args.r:
        if not args.n:
            raise InputError("--r needs --n to generate random regular graphs")
        for r in args.r:
            for n in args.n:
                graphs.append(random_regular(n, r, args.seed))
    if not graphs:
        raise InputError("no graph given")
    records = survey.greedy_sweep([encode_graph6(g) for g in graphs], args.exact, args.jobs)
    _emit(args, records)
    violated = any(rec["bound_holds"] is False or rec.get("lif_bound_holds") is False for rec in records)
    return EXIT_FINDING if violated else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="indforest", description="Induced forests, linear forests and paths.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, default_format="csv"):
        sp.add_argument("--input", action="append", help="graph6 or edge-list file ('-' for stdin); repeatable")
        sp.add_argument("--budget-nodes", type=int, default=None, help="per-graph search node limit")
        sp.add_argument("--jobs", type=int, default=1)
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--out", help="write output here instead of stdout")
        sp.add_argument("--format", choices=["csv", "json"], default=default_format)
        sp.add_argument("--n", type=parse_range, default=None, help="order or range A-B")
        sp.add_argument("--r", type=parse_range, default=None, help="regularity or range A-B")
        return sp

    s = common(sub.add_parser("solve", help="exact a(G), LIF(G) or LIP(G)"))
    s.add_argument("graph", nargs="?", help="graph6 string")
    s.add_argument("--shape", choices=sorted(SHAPE_ALIASES), default="forest")
    s.set_defaults(func=cmd_solve)

    common(sub.add_parser("table-cubic", help="max/min a and LIF over cubic corpora")).set_defaults(func=cmd_table_cubic)
    common(sub.add_parser("table-g", help="g(n) = min LIF/t over connected graphs")).set_defaults(func=cmd_table_g)
    common(sub.add_parser("conjecture", help="LIF/t >= 2 sweep for minimum degree >= 2"), "json").set_defaults(func=cmd_conjecture)
    common(sub.add_parser("nordhaus-gaddum", help="a(G)+a(co-G) <= n+4 sweep"), "json").set_defaults(func=cmd_nordhaus_gaddum)
    common(sub.add_parser("extremal", help="extremal LIP constructions"), "json").set_defaults(func=cmd_extremal)
    g = common(sub.add_parser("greedy", help="greedy linear-forest partition"), "json")
    g.add_argument("graph", nargs="?", help="graph6 string")
    g.add_argument("--exact", action="store_true", help="also compute the exact LIF")
    g.set_defaults(func=cmd_greedy)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ConstructionNotRegular, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
