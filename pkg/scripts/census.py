"""Print |S_i|, cover counts and build times for each table and mode.

    python scripts/census.py tables/h1.gt tables/h2.gt --depth 3
"""

import argparse
import time
from pathlib import Path

from ordgen.construct import approximations
from ordgen.errors import SizeError
from ordgen.typesys import parse_class_table


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("tables", nargs="+", type=Path)
    ap.add_argument("--depth", type=int, default=2)
    ap.add_argument("--ceiling", type=int, default=50_000)
    args = ap.parse_args()

    print(f"{'table':<12} {'mode':<9} {'i':>2} {'elements':>9} {'covers':>9} {'seconds':>8}")
    for path in args.tables:
        table = parse_class_table(path.read_text())
        for mode in ("wildcard", "interval"):
            start = time.perf_counter()
            try:
                chain = approximations(table, args.depth, mode, args.ceiling)
            except SizeError as exc:
                print(f"{path.stem:<12} {mode:<9} -- {exc}")
                continue
            elapsed = time.perf_counter() - start
            for s in chain:
                print(f"{path.stem:<12} {mode:<9} {s.depth:>2} {len(s.poset):>9} {len(s.poset.covers):>9} {elapsed:>8.2f}")


if __name__ == "__main__":
    main()
