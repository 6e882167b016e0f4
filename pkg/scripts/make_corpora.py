#!/usr/bin/env python3
"""Regenerate graph6 corpora with nauty's geng.

    scripts/make_corpora.py cubic 4-18          -> data/cubic/cubic_NN.g6
    scripts/make_corpora.py connected 9-10 OUT  -> OUT/conn_NN.g6

Point GENG at the binary if it is not on PATH.  The connected corpora are
what INDFOREST_CONNECTED_DIR expects for the opt-in n=9, 10 rows of g(n).
"""

import argparse
import os
import shutil
import subprocess
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def geng_binary() -> str:
    exe = os.environ.get("GENG") or shutil.which("geng") or shutil.which("nauty-geng")
    if not exe:
        sys.exit("geng not found; install nauty or set GENG=/path/to/geng")
    return exe


def run(exe: str, flags: list[str], n: int, out: Path) -> int:
    out.parent.mkdir(parents=True, exist_ok=True)
    with open(out, "w") as fh:
        subprocess.run([exe, *flags, str(n)], stdout=fh, check=True)
    with open(out) as fh:
        return sum(1 for line in fh if line.strip())


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("kind", choices=["cubic", "connected"])
    ap.add_argument("orders", help="N or A-B")
    ap.add_argument("out", nargs="?", type=Path)
    args = ap.parse_args()
    lo, _, hi = args.orders.partition("-")
    ns = range(int(lo), int(hi or lo) + 1)
    exe = geng_binary()
    for n in ns:
        if args.kind == "cubic":
            if n % 2:
                continue
            path = (args.out or ROOT / "data" / "cubic") / f"cubic_{n:02d}.g6"
            count = run(exe, ["-cq", "-d3", "-D3"], n, path)
        else:
            path = (args.out or ROOT / "data" / "connected") / f"conn_{n:02d}.g6"
            count = run(exe, ["-cq"], n, path)
        print(f"{path}: {count} graphs")


if __name__ == "__main__":
    main()
