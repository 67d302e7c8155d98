"""Check the erasure Galois connection and oracle equivalence on random tables.

    python scripts/galois_sweep.py --tables 200 --classes 5 --depth 1
"""

import argparse
import random

from ordgen.construct import build
from ordgen.judge import check_galois, subtype, universe
from ordgen.typesys import parse_class_table


def random_table(rng, n_classes):
    lines, generic = [], set()
    for i in range(n_classes):
        name = f"K{i}"
        is_gen = rng.random() < 0.5
        # a non-generic class may not extend a generic one
        parents = ["Object"] + [f"K{j}" for j in range(i) if is_gen or f"K{j}" not in generic]
        sup = rng.choice(parents)
        if is_gen:
            generic.add(name)
            lines.append(f"class {name}<T> extends {sup}<T>" if sup in generic else f"class {name}<T> extends {sup}")
        else:
            lines.append(f"class {name} extends {sup}")
    return "\n".join(lines)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--tables", type=int, default=100)
    ap.add_argument("--classes", type=int, default=4)
    ap.add_argument("--depth", type=int, default=1)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    pairs = mismatches = violations = 0
    for _ in range(args.tables):
        src = random_table(rng, args.classes)
        table = parse_class_table(src)
        for mode in ("wildcard", "interval"):
            report = check_galois(table, args.depth, mode)
            violations += len(report.counterexamples)
            s = build(table, args.depth, mode)
            types = universe(table, args.depth, mode)
            for x, t1 in zip(s.elements, types):
                for y, t2 in zip(s.elements, types):
                    pairs += 1
                    if s.poset.leq(x, y) != subtype(table, t1, t2):
                        mismatches += 1
                        print(f"mismatch in\n{src}\n  {x} vs {y} ({mode})")
    print(f"{args.tables} tables, {violations} Galois counterexamples, {mismatches}/{pairs} order mismatches")


if __name__ == "__main__":
    main()
