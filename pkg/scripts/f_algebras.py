"""List F-subtypes and F-supertypes of every generic class in a table.

    python scripts/f_algebras.py tables/h2.gt --depth 2
"""

import argparse
from pathlib import Path

from ordgen.judge import f_subtypes, f_supertypes
from ordgen.typesys import parse_class_table, render


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("table", type=Path)
    ap.add_argument("--depth", type=int, default=2)
    ap.add_argument("--mode", default="wildcard", choices=["wildcard", "interval"])
    args = ap.parse_args()

    table = parse_class_table(args.table.read_text())
    for f in sorted(table.generic_set):
        subs = f_subtypes(table, f, args.depth, args.mode)
        sups = f_supertypes(table, f, args.depth, args.mode)
        print(f"{f}: {len(subs)} F-subtypes, {len(sups)} F-supertypes")
        print("  t <: F<t>: " + ", ".join(render(t) for t in subs))
        print("  F<t> <: t: " + ", ".join(render(t) for t in sups))


if __name__ == "__main__":
    main()
