"""Poset constructors for type arguments and parameterized types.

``wc`` builds the containment order on wildcard arguments of a bounded
subtyping poset, ``int_op`` the containment order on all intervals, and
``ppp`` pairs the generic classes of a class poset with an argument poset.

Arguments are intervals ``[lo, hi]`` over the input poset. Containment is
``[l1, u1] <= [l2, u2]`` iff ``l2 <= l1`` and ``u1 <= u2``.
"""

from __future__ import annotations

from collections.abc import Callable, Collection, Iterable, Mapping
from dataclasses import dataclass

from .errors import PosetError
from .poset import Poset, bounds, transitive_reduction

NULL = "Null"
OBJECT = "Object"

WILDCARD = "wildcard"
INTERVAL = "interval"
MODES = (WILDCARD, INTERVAL)

Interval = tuple[str, str]
Labeler = Callable[[str, str], str]


def bracket_label(lo: str, hi: str) -> str:
    return f"[{lo},{hi}]"


@dataclass(frozen=True)
class ArgPoset:
    base: Poset
    source: Poset
    mode: str
    intervals: Mapping[str, Interval]

    @property
    def elements(self) -> tuple[str, ...]:
        return self.base.elements

    def __len__(self) -> int:
        return len(self.base)

    def leq(self, a: str, b: str) -> bool:
        return self.base.leq(a, b)


def wc_intervals(s: Poset) -> set[Interval]:
    top, bottom = bounds(s)
    if top is None or bottom is None:
        raise PosetError("wc requires bounded poset")
    ivs = {(t, t) for t in s.elements}
    ivs |= {(bottom, u) for u in s.elements}
    ivs |= {(l, top) for l in s.elements}
    return ivs


def int_intervals(s: Poset) -> set[Interval]:
    return {(l, u) for l in s.elements for u in s.up[l]}


def containment(s: Poset, ivs: Iterable[Interval], mode: str, label: Labeler | None = None) -> ArgPoset:
    label = label or bracket_label
    ivs = set(ivs)
    names = {iv: label(*iv) for iv in ivs}
    if len(set(names.values())) != len(ivs):
        raise PosetError("argument labels are not unique")
    up, down = s.up, s.down
    # [l1,u1] <= [l2,u2] needs l2 below l1 and u2 above u1
    rel = [
        (x, names[l2, u2])
        for (l1, u1), x in names.items()
        for l2 in down[l1]
        for u2 in up[u1]
        if (l2, u2) in ivs
    ]
    named = {x: iv for iv, x in names.items()}
    return ArgPoset(transitive_reduction(rel, named), s, mode, named)


def wc(s: Poset, label: Labeler | None = None) -> ArgPoset:
    """Wildcard arguments of a bounded poset ordered by containment.

    The three copies are the singletons ``[t, t]``, the upper-bounded
    ``[bottom, u]`` and the lower-bounded ``[l, top]``; overlaps collapse by
    identity of the pair. On a chain of length n this gives 3n - 3 elements.
    """
    return containment(s, wc_intervals(s), WILDCARD, label)


def int_op(s: Poset, label: Labeler | None = None) -> ArgPoset:
    """All intervals ``[l, u]`` with ``l <= u`` ordered by containment."""
    return containment(s, int_intervals(s), INTERVAL, label)


def apply_label(g: str, a: str) -> str:
    return f"{g}<{a}>"


def ppp(c: Poset, generic_subset: Collection[str], args: ArgPoset) -> Poset:
    """Partial poset product of the class poset ``c`` with ``args``.

    Generic classes are paired with every argument; the other classes of
    ``c`` are kept as they are. ``Null``, when present in ``c``, is the
    global bottom. A non-generic class other than ``Null`` never lies below
    a generic instantiation.
    """
    generic = set(generic_subset)
    c.check(*generic)
    plain = [n for n in c.elements if n not in generic]
    apps = [(g, a) for g in sorted(generic) for a in args.elements]
    app_name = {ga: apply_label(*ga) for ga in apps}

    plain_set = set(plain)
    rel: list[tuple[str, str]] = []
    for n1 in plain:
        rel.extend((n1, n2) for n2 in c.up[n1] if n2 in plain_set)
    for g1, a1 in apps:
        x = app_name[g1, a1]
        above = c.up[g1]
        rel.extend((x, n) for n in above if n in plain_set)
        rel.extend((x, app_name[g2, a2]) for g2 in above if g2 in generic for a2 in args.base.up[a1])
    if NULL in c and NULL not in generic:
        rel.extend((NULL, x) for x in app_name.values())
    elements = plain + list(app_name.values())
    if len(set(elements)) != len(elements):
        raise PosetError("ppp produced clashing element names")
    return transitive_reduction(rel, elements)
