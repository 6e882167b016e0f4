#!/usr/bin/env python3
"""Recompute the cubic-graph table and g(n) table and print them as CSV.

    scripts/reproduce_tables.py                 # cubic n=4..14, g(n) n=3..8
    scripts/reproduce_tables.py --cubic 4-18 --jobs 8
    scripts/reproduce_tables.py --g 3-10 --connected-dir data/connected
"""

import argparse
import sys
import time
from pathlib import Path

from indforest import survey
from indforest.cli import parse_range

ROOT = Path(__file__).resolve().parent.parent


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--cubic", type=parse_range, default=parse_range("4-14"))
    ap.add_argument("--g", type=parse_range, default=parse_range("3-8"))
    ap.add_argument("--connected-dir", type=Path, help="folder with conn_NN.g6 for orders above 8")
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    t = time.perf_counter()
    files = [ROOT / "data" / "cubic" / f"cubic_{n:02d}.g6" for n in args.cubic if n % 2 == 0]
    rows = survey.table_cubic(survey.load_corpus(f for f in files if f.exists()), jobs=args.jobs)
    print(",".join(survey.CUBIC_COLUMNS))
    for rec in survey.cubic_records(rows):
        print(",".join(str(rec[c]) for c in survey.CUBIC_COLUMNS))
    print(f"# cubic table: {time.perf_counter() - t:.1f}s", file=sys.stderr)

    t = time.perf_counter()
    corpus = None
    if args.connected_dir:
        corpus = survey.load_corpus(sorted(args.connected_dir.glob("conn_*.g6")))
    rows = survey.table_g(args.g, corpus, jobs=args.jobs)
    print(",".join(survey.G_COLUMNS))
    for rec in survey.g_records(rows):
        print(",".join(str(rec[c]) for c in survey.G_COLUMNS))
    print(f"# g(n) table: {time.perf_counter() - t:.1f}s", file=sys.stderr)


if __name__ == "__main__":
    main()
