"""Brute-force reference computations, deliberately independent of ordgen."""

from itertools import product

from ordgen.judge import subtype
from ordgen.typesys import NULL_TYPE, OBJECT_TYPE, App, IntervalArg, NonGeneric, render


def closure(rel, elements):
    """Reflexive-transitive closure (Warshall)."""
    out = {(a, b) for a, b in rel} | {(e, e) for e in elements}
    for k, i, j in product(elements, repeat=3):
        if (i, k) in out and (k, j) in out:
            out.add((i, j))
    return out


def chain_intervals(n, wildcard):
    """Intervals (i, j) over the integer chain 0..n-1."""
    return [
        (i, j)
        for i in range(n)
        for j in range(i, n)
        if not wildcard or i == j or i == 0 or j == n - 1
    ]


def interval_extremes(ivs):
    """(maximal, minimal) intervals under containment on integers."""
    def le(x, y):
        return y[0] <= x[0] and x[1] <= y[1]

    maximal = [x for x in ivs if not any(le(x, y) and x != y for y in ivs)]
    minimal = [x for x in ivs if not any(le(y, x) and x != y for y in ivs)]
    return maximal, minimal


def enumerate_types(table, depth, wildcard):
    """Every ground type of nesting depth <= ``depth``, by direct recursion."""
    if depth == 0:
        return {NULL_TYPE} | {NonGeneric(c) for c in table.nongeneric if c != "Null"}
    smaller = enumerate_types(table, depth - 1, wildcard)
    args = set()
    for lo in smaller:
        for hi in smaller:
            if wildcard and not (lo == hi or lo == NULL_TYPE or hi == OBJECT_TYPE):
                continue
            if subtype(table, lo, hi):
                args.add(IntervalArg(lo, hi))
    return smaller | {App(g, a) for g in table.generic_set for a in args}


def rendered_types(table, depth, wildcard):
    return sorted(render(t) for t in enumerate_types(table, depth, wildcard))

