"""Depth-indexed approximations S_0, S_1, ... of the ground subtyping relation.

S_0 holds the non-generic classes (with Null at the bottom). Each step pairs
the generic classes with the containment-ordered arguments of the previous
approximation, so S_i holds every ground type of nesting depth at most i.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import SizeError
from .operators import MODES, WILDCARD, ArgPoset, containment, int_intervals, ppp, wc_intervals
from .poset import Poset
from .typesys import ClassTable, arg_label

DEFAULT_CEILING = 50_000


@dataclass(frozen=True)
class SubtypingApprox:
    poset: Poset
    depth: int
    mode: str
    table: ClassTable

    @property
    def elements(self) -> tuple[str, ...]:
        return self.poset.elements


def _check_mode(mode: str) -> str:
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    return mode


def s0(table: ClassTable, mode: str = WILDCARD) -> SubtypingApprox:
    return SubtypingApprox(table.class_poset.restrict(table.nongeneric), 0, _check_mode(mode), table)


def _intervals(s: SubtypingApprox):
    return wc_intervals(s.poset) if s.mode == WILDCARD else int_intervals(s.poset)


def containment_poset(s: SubtypingApprox) -> ArgPoset:
    """Arguments over ``s`` ordered by containment, labelled in type syntax."""
    return containment(s.poset, _intervals(s), s.mode, arg_label)


def step(table: ClassTable, s: SubtypingApprox, ceiling: int = DEFAULT_CEILING) -> SubtypingApprox:
    ivs = _intervals(s)
    size = len(table.nongeneric) + len(table.generic_set) * len(ivs)
    if size > ceiling:
        raise SizeError(
            f"S_{s.depth + 1} would have {size} elements, above the ceiling of {ceiling}"
        )
    args = containment(s.poset, ivs, s.mode, arg_label)
    return SubtypingApprox(ppp(table.class_poset, table.generic_set, args), s.depth + 1, s.mode, table)


@lru_cache(maxsize=64)
def _chain(table: ClassTable, mode: str, ceiling: int, depth_limit: int) -> tuple[SubtypingApprox, ...]:
    if depth_limit == 0:
        return (s0(table, mode),)
    prev = _chain(table, mode, ceiling, depth_limit - 1)
    return prev + (step(table, prev[-1], ceiling),)


def approximations(
    table: ClassTable, depth_limit: int, mode: str = WILDCARD, ceiling: int = DEFAULT_CEILING
) -> tuple[SubtypingApprox, ...]:
    """S_0 through S_depth_limit, cached per table."""
    if depth_limit < 0:
        raise ValueError("depth_limit must be non-negative")
    return _chain(table, _check_mode(mode), ceiling, depth_limit)


def build(
    table: ClassTable, depth_limit: int, mode: str = WILDCARD, ceiling: int = DEFAULT_CEILING
) -> SubtypingApprox:
    return approximations(table, depth_limit, mode, ceiling)[-1]

