"""Finite posets stored as a sorted element tuple plus the Hasse (cover) relation.

Elements are opaque strings so that classes, types and type arguments all share
one implementation. The reflexive-transitive closure is computed lazily and
cached; posets are never mutated after construction.
"""

from __future__ import annotations

import graphlib
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from functools import cached_property

from .errors import CycleError, PosetError

Pair = tuple[str, str]
OrderMap = Mapping[str, str]


@dataclass(frozen=True)
class Poset:
    elements: tuple[str, ...]
    covers: frozenset[Pair]

    def __post_init__(self):
        if len(set(self.elements)) != len(self.elements):
            raise PosetError("duplicate elements")
        if list(self.elements) != sorted(self.elements):
            raise PosetError("elements must be in lexicographic order")
        known = set(self.elements)
        for a, b in self.covers:
            if a not in known or b not in known:
                raise PosetError(f"cover ({a!r}, {b!r}) mentions an unknown element")

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x) -> bool:
        return x in self._index

    @cached_property
    def _index(self) -> dict[str, int]:
        return {e: i for i, e in enumerate(self.elements)}

    @cached_property
    def up(self) -> dict[str, frozenset[str]]:
        """Map each element to the set of elements above it (reflexive)."""
        return _upsets(self.elements, self.covers)

    @cached_property
    def down(self) -> dict[str, frozenset[str]]:
        acc: dict[str, set[str]] = {e: set() for e in self.elements}
        for a, ups in self.up.items():
            for b in ups:
                acc[b].add(a)
        return {e: frozenset(s) for e, s in acc.items()}

    def check(self, *xs: str) -> None:
        for x in xs:
            if x not in self._index:
                raise PosetError(f"unknown element: {x!r}")

    def leq(self, a: str, b: str) -> bool:
        self.check(a, b)
        return b in self.up[a]

    def relation(self) -> set[Pair]:
        """All pairs (a, b) with a <= b, including the reflexive ones."""
        return {(a, b) for a, ups in self.up.items() for b in ups}

    def maximal(self) -> list[str]:
        return [e for e in self.elements if len(self.up[e]) == 1]

    def minimal(self) -> list[str]:
        return [e for e in self.elements if len(self.down[e]) == 1]

    def restrict(self, keep: Iterable[str]) -> Poset:
        keep = set(keep)
        self.check(*keep)
        rel = {(a, b) for a in keep for b in self.up[a] if b in keep}
        return transitive_reduction(rel, keep)


def _upsets(elements, edges) -> dict[str, frozenset[str]]:
    succ: dict[str, set[str]] = {e: set() for e in elements}
    for a, b in edges:
        if a != b:
            succ[a].add(b)
    # successors are passed as graphlib "dependencies" so each element is
    # visited after everything above it
    ts = graphlib.TopologicalSorter({e: succ[e] for e in elements})
    try:
        order = list(ts.static_order())
    except graphlib.CycleError as exc:
        raise CycleError(exc.args[1]) from None
    up: dict[str, frozenset[str]] = {}
    for e in order:
        acc = {e}
        for s in succ[e]:
            acc |= up[s]
        up[e] = frozenset(acc)
    return up


def transitive_reduction(rel: Iterable[Pair], elements: Iterable[str]) -> Poset:
    elements = sorted(set(elements))
    rel = list(rel)
    known = set(elements)
    for a, b in rel:
        for x in (a, b):
            if x not in known:
                raise PosetError(f"unknown element: {x!r}")
    up = _upsets(elements, rel)
    covers = set()
    for a in elements:
        strict = up[a] - {a}
        implied = set()
        for c in strict:
            implied |= up[c] - {c}
        covers.update((a, b) for b in strict - implied)
    return Poset(tuple(elements), frozenset(covers))


def leq(p: Poset, a: str, b: str) -> bool:
    return p.leq(a, b)


def bounds(p: Poset) -> tuple[str | None, str | None]:
    """Return ``(top, bottom)``; either is None when no such element exists."""
    maxi, mini = p.maximal(), p.minimal()
    top = maxi[0] if len(maxi) == 1 else None
    bottom = mini[0] if len(mini) == 1 else None
    return top, bottom


def is_embedding(p: Poset, q: Poset, m: OrderMap) -> bool:
    """True iff ``m`` is an order-embedding of ``p`` into ``q``.

    Raises PosetError when ``m`` is partial on ``p``, not injective, or maps
    outside ``q``.
    """
    missing = [a for a in p.elements if a not in m]
    if missing:
        raise PosetError(f"map is not total; missing {missing[0]!r}")
    image = [m[a] for a in p.elements]
    if len(set(image)) != len(image):
        raise PosetError("map is not injective")
    q.check(*image)
    return all(
        (b in p.up[a]) == (m[b] in q.up[m[a]])
        for a in p.elements
        for b in p.elements
    )


def identity_map(p: Poset) -> dict[str, str]:
    return {e: e for e in p.elements}


def chain(n: int, prefix: str = "e") -> Poset:
    if n < 1:
        raise PosetError("chain needs at least one element")
    # zero-pad so lexicographic order matches the chain order
    width = len(str(n - 1))
    names = [f"{prefix}{i:0{width}d}" for i in range(n)]
    return transitive_reduction(zip(names, names[1:]), names)


def antichain(names: Iterable[str]) -> Poset:
    return transitive_reduction((), names)
