"""Recursive decision procedures and checks over ground types.

Subtyping between two instantiations needs only subclassing plus containment
of their arguments; there is no capture conversion. Each recursive call
strictly lowers the nesting depth, so the procedure always terminates.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass, field
from functools import lru_cache

from .construct import DEFAULT_CEILING, build
from .errors import AdmittabilityError, TypeSysError
from .operators import OBJECT, WILDCARD
from .typesys import (
    App,
    ClassTable,
    IntervalArg,
    NonGeneric,
    NullType,
    TypeExpr,
    admittability_problem,
    arity_problem,
    depth,
    erasure,
    free_type,
    parse_raw,
    singleton,
    substitute,
)

SubtypeFn = Callable[[ClassTable, TypeExpr, TypeExpr], bool]


def _check_ground(table, *ts):
    for t in ts:
        problem = arity_problem(table, t)
        if problem:
            raise TypeSysError(f"ill-formed type {t}: {problem}")


def subtype(table: ClassTable, t1: TypeExpr, t2: TypeExpr) -> bool:
    _check_ground(table, t1, t2)
    return _subtype(table, t1, t2)


@lru_cache(maxsize=1 << 18)
def _subtype(table: ClassTable, t1: TypeExpr, t2: TypeExpr) -> bool:
    if isinstance(t1, NullType):
        return True
    if isinstance(t2, NonGeneric) and t2.name == OBJECT:
        return True
    if isinstance(t2, NullType):
        return False
    if not table.leq(t1.name, t2.name):
        return False
    if isinstance(t2, NonGeneric):
        return True
    if isinstance(t1, NonGeneric):
        return False
    return _contains(table, t1.arg, t2.arg)


def contains(table: ClassTable, a1: IntervalArg, a2: IntervalArg) -> bool:
    """True iff interval ``a1`` lies inside ``a2``."""
    _check_ground(table, a1.lo, a1.hi, a2.lo, a2.hi)
    return _contains(table, a1, a2)


def _contains(table, a1, a2):
    return _subtype(table, a2.lo, a1.lo) and _subtype(table, a1.hi, a2.hi)


def universe(table: ClassTable, depth_limit: int, mode: str = WILDCARD, ceiling: int = DEFAULT_CEILING) -> list[TypeExpr]:
    """All ground types of ``build(table, depth_limit, mode)``, in element order."""
    return list(_universe(table, depth_limit, mode, ceiling))


@lru_cache(maxsize=64)
def _universe(table, depth_limit, mode, ceiling):
    return tuple(parse_raw(e) for e in build(table, depth_limit, mode, ceiling).elements)


# -- the erasure Galois connection -------------------------------------------

ERASURE_ONLY = "E(t) <= c but not t <: FT(c)"
FREE_TYPE_ONLY = "t <: FT(c) but not E(t) <= c"


@dataclass
class GaloisReport:
    checked_pairs: int = 0
    counterexamples: list[tuple[TypeExpr, str, str]] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.counterexamples

    def summary(self) -> str:
        return f"checked {self.checked_pairs} pairs, {len(self.counterexamples)} counterexamples"


def galois_pair(table: ClassTable, t: TypeExpr, c: str, subtype_fn: SubtypeFn = subtype) -> tuple[bool, bool]:
    """Both sides of ``E(t) <= c  <=>  t <: FT(c)`` for one pair."""
    return table.leq(erasure(t), c), subtype_fn(table, t, free_type(c, table))


def check_galois(
    table: ClassTable,
    depth_limit: int,
    mode: str = WILDCARD,
    subtype_fn: SubtypeFn = subtype,
    ceiling: int = DEFAULT_CEILING,
) -> GaloisReport:
    if depth_limit < 1:
        raise ValueError("depth_limit must be at least 1 so that free types are in range")
    report = GaloisReport()
    for t in universe(table, depth_limit, mode, ceiling):
        for c in table.class_names:
            left, right = galois_pair(table, t, c, subtype_fn)
            report.checked_pairs += 1
            if left and not right:
                report.counterexamples.append((t, c, ERASURE_ONLY))
            elif right and not left:
                report.counterexamples.append((t, c, FREE_TYPE_ONLY))
    return report


# -- admittability, validity, bounds -----------------------------------------


def is_admittable(table: ClassTable, t: TypeExpr) -> bool:
    return admittability_problem(table, t) is None


@dataclass(frozen=True)
class BoundSpec:
    param_name: str
    lower: TypeExpr | None = None
    upper: TypeExpr | None = None


def dfbg_check(table: ClassTable, spec: BoundSpec, candidate: TypeExpr) -> bool:
    """Does ``candidate`` satisfy both (possibly F-) bounds of ``spec``?"""
    if spec.lower is not None:
        if not subtype(table, substitute(spec.lower, spec.param_name, candidate), candidate):
            return False
    if spec.upper is not None:
        if not subtype(table, candidate, substitute(spec.upper, spec.param_name, candidate)):
            return False
    return True


def bound_spec(table: ClassTable, cls: str) -> BoundSpec:
    d = table.decls[cls]
    return BoundSpec(d.param_name, d.lower_bound, d.upper_bound)


def is_valid(table: ClassTable, t: TypeExpr, mode: str = WILDCARD, ceiling: int = DEFAULT_CEILING) -> bool:
    """Validity: every argument, at every nesting level, meets its class's bounds.

    A non-singleton argument ``[l, u]`` counts as valid when its endpoints
    are valid and some valid singleton ``a`` with ``l <: a <: u`` exists among
    the types that fit as an argument of ``t``, i.e. in
    ``build(table, depth(t) - 1, mode)``. No witness there means invalid.
    """
    problem = admittability_problem(table, t)
    if problem:
        raise AdmittabilityError(f"is_valid needs an admittable type: {problem}")
    return _valid(table, t, mode, ceiling)


def _valid(table: ClassTable, t: TypeExpr, mode: str, ceiling: int) -> bool:
    if not isinstance(t, App):
        return True
    spec = bound_spec(table, t.name)
    lo, hi = t.arg.lo, t.arg.hi
    if lo == hi:
        return _valid(table, lo, mode, ceiling) and dfbg_check(table, spec, lo)
    if not (_valid(table, lo, mode, ceiling) and _valid(table, hi, mode, ceiling)):
        return False
    for a in universe(table, depth(t) - 1, mode, ceiling):
        if subtype(table, lo, a) and subtype(table, a, hi):
            if _valid(table, a, mode, ceiling) and dfbg_check(table, spec, a):
                return True
    return False


# -- F-subtypes and F-supertypes ---------------------------------------------


def _generic(table: ClassTable, f: str) -> str:
    if not table.is_generic(f):
        raise TypeSysError(f"{f} is not a generic class")
    return f


def is_f_subtype(table: ClassTable, f: str, t: TypeExpr) -> bool:
    return subtype(table, t, App(f, singleton(t)))


def is_f_supertype(table: ClassTable, f: str, t: TypeExpr) -> bool:
    return subtype(table, App(f, singleton(t)), t)


def f_subtypes(table: ClassTable, f: str, depth_limit: int, mode: str = WILDCARD) -> list[TypeExpr]:
    """Types ``t`` of depth <= depth_limit with ``t <: f<t>``."""
    _generic(table, f)
    return [t for t in universe(table, depth_limit, mode) if is_f_subtype(table, f, t)]


def f_supertypes(table: ClassTable, f: str, depth_limit: int, mode: str = WILDCARD) -> list[TypeExpr]:
    """Types ``t`` of depth <= depth_limit with ``f<t> <: t``."""
    _generic(table, f)
    return [t for t in universe(table, depth_limit, mode) if is_f_supertype(table, f, t)]

