"""Class tables, ground type expressions and the erasure / free-type maps.

Class-table DSL, one declaration per line (``#`` starts a comment)::

    class String extends Object
    class List<T> extends Object
    class LinkedList<T> extends List<T>
    class Enum<T extends Enum<T>> extends Object
    class C<T super C<T> extends Object> extends Object

Type syntax: ``Null``, ``Name``, ``Name<arg>`` where ``arg`` is a type, ``?``,
``? extends T``, ``? super T`` or the general interval ``[Lo,Hi]``.
Every argument is stored as an interval; the wildcard forms are sugar for
``[Null,T]``, ``[T,Object]`` and ``[Null,Object]``.
"""

from __future__ import annotations

import re
from collections.abc import Mapping
from dataclasses import dataclass, field
from typing import Union

from .errors import AdmittabilityError, CycleError, TableError, TypeSyntaxError
from .operators import NULL, OBJECT
from .poset import Poset, transitive_reduction


@dataclass(frozen=True)
class NullType:
    def __str__(self):
        return NULL


@dataclass(frozen=True)
class NonGeneric:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class TypeVar:
    """A type parameter; only appears inside declared bounds."""

    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class IntervalArg:
    lo: TypeExpr
    hi: TypeExpr

    def __str__(self):
        return arg_label(render(self.lo), render(self.hi))


@dataclass(frozen=True)
class App:
    name: str
    arg: IntervalArg

    def __str__(self):
        return render(self)


TypeExpr = Union[NullType, NonGeneric, App, TypeVar]

NULL_TYPE = NullType()
OBJECT_TYPE = NonGeneric(OBJECT)
ANY_ARG = IntervalArg(NULL_TYPE, OBJECT_TYPE)


def singleton(t: TypeExpr) -> IntervalArg:
    return IntervalArg(t, t)


def arg_label(lo: str, hi: str) -> str:
    """Render an interval argument from its rendered endpoints."""
    if lo == hi:
        return lo
    if lo == NULL and hi == OBJECT:
        return "?"
    if lo == NULL:
        return f"? extends {hi}"
    if hi == OBJECT:
        return f"? super {lo}"
    return f"[{lo},{hi}]"


def render(t: TypeExpr) -> str:
    if isinstance(t, App):
        return f"{t.name}<{arg_label(render(t.arg.lo), render(t.arg.hi))}>"
    return str(t)


def depth(t: TypeExpr) -> int:
    if isinstance(t, App):
        return 1 + max(depth(t.arg.lo), depth(t.arg.hi))
    return 0


def substitute(t: TypeExpr, param: str, value: TypeExpr) -> TypeExpr:
    """Replace every occurrence of type variable ``param`` by ``value``."""
    if isinstance(t, TypeVar):
        return value if t.name == param else t
    if isinstance(t, App):
        return App(t.name, IntervalArg(substitute(t.arg.lo, param, value), substitute(t.arg.hi, param, value)))
    return t


def mentions(t: TypeExpr, param: str) -> bool:
    if isinstance(t, TypeVar):
        return t.name == param
    if isinstance(t, App):
        return mentions(t.arg.lo, param) or mentions(t.arg.hi, param)
    return False


# -- parsing -----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:([A-Za-z_][A-Za-z0-9_]*)|([<>\[\],?]))")
KEYWORDS = frozenset({"class", "extends", "super"})


def tokenize(text: str) -> list[str]:
    tokens, pos = [], 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise TypeSyntaxError(f"unexpected character {text[pos:].lstrip()[:1]!r} in {text!r}")
        tokens.append(m.group(1) or m.group(2))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str, params=()):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0
        self.params = set(params)

    def peek(self) -> str | None:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def next(self) -> str:
        tok = self.peek()
        if tok is None:
            raise TypeSyntaxError(f"unexpected end of input in {self.text!r}")
        self.i += 1
        return tok

    def expect(self, tok: str) -> None:
        got = self.next()
        if got != tok:
            raise TypeSyntaxError(f"expected {tok!r} but found {got!r} in {self.text!r}")

    def name(self) -> str:
        tok = self.next()
        if not (tok[0].isalpha() or tok[0] == "_") or tok in KEYWORDS:
            raise TypeSyntaxError(f"expected a name but found {tok!r} in {self.text!r}")
        return tok

    def done(self) -> None:
        if self.peek() is not None:
            raise TypeSyntaxError(f"trailing input {' '.join(self.toks[self.i:])!r} in {self.text!r}")

    def type(self) -> TypeExpr:
        name = self.name()
        if self.peek() == "<":
            self.next()
            arg = self.arg()
            self.expect(">")
            return App(name, arg)
        if name in self.params:
            return TypeVar(name)
        if name == NULL:
            return NULL_TYPE
        return NonGeneric(name)

    def arg(self) -> IntervalArg:
        tok = self.peek()
        if tok == "?":
            self.next()
            if self.peek() == "extends":
                self.next()
                return IntervalArg(NULL_TYPE, self.type())
            if self.peek() == "super":
                self.next()
                return IntervalArg(self.type(), OBJECT_TYPE)
            return ANY_ARG
        if tok == "[":
            self.next()
            lo = self.type()
            self.expect(",")
            hi = self.type()
            self.expect("]")
            return IntervalArg(lo, hi)
        return singleton(self.type())


def parse_raw(text: str, params=()) -> TypeExpr:
    """Parse type syntax without consulting a class table."""
    p = _Parser(text, params)
    t = p.type()
    p.done()
    return t


def parse_raw_arg(text: str) -> IntervalArg:
    p = _Parser(text)
    a = p.arg()
    p.done()
    return a


# -- class tables ------------------------------------------------------------


@dataclass(frozen=True)
class ClassDecl:
    name: str
    is_generic: bool = False
    param_name: str | None = None
    lower_bound: TypeExpr | None = None
    upper_bound: TypeExpr | None = None
    superclass: str | None = OBJECT


@dataclass(frozen=True, eq=False)
class ClassTable:
    decls: Mapping[str, ClassDecl]
    class_poset: Poset
    generic_set: frozenset[str]
    source: str = field(default="", repr=False)

    @property
    def class_names(self) -> tuple[str, ...]:
        """All classes including the synthetic ``Null``."""
        return self.class_poset.elements

    @property
    def nongeneric(self) -> list[str]:
        return [c for c in self.class_names if c not in self.generic_set]

    def is_generic(self, name: str) -> bool:
        return name in self.generic_set

    def knows(self, name: str) -> bool:
        return name in self.class_poset

    def leq(self, c1: str, c2: str) -> bool:
        return self.class_poset.leq(c1, c2)


def _parse_decl(line: str, lineno: int) -> tuple[ClassDecl, bool]:
    """Parse one declaration; the flag says whether the superclass got ``<P>``."""
    p = _Parser(line)
    p.expect("class")
    name = p.name()
    param = lower = upper = None
    if p.peek() == "<":
        p.next()
        param = p.name()
        p.params = {param}
        if p.peek() == "super":
            p.next()
            lower = p.type()
        if p.peek() == "extends":
            p.next()
            upper = p.type()
        p.expect(">")
        p.params = set()
    superclass = OBJECT if name != OBJECT else None
    applied = False
    if p.peek() == "extends":
        p.next()
        superclass = p.name()
        if p.peek() == "<":
            p.next()
            passed = p.name()
            p.expect(">")
            if param is None:
                raise TableError(f"line {lineno}: non-generic class cannot extend generic class {superclass}")
            if passed != param:
                raise TableError(
                    f"line {lineno}: {name} must pass its parameter {param} to {superclass} unchanged"
                )
            applied = True
    p.done()
    return ClassDecl(name, param is not None, param, lower, upper, superclass), applied


def _check_bound(t: TypeExpr, param: str, generic: set[str], names: set[str], where: str) -> None:
    if isinstance(t, (NullType, TypeVar)):
        return
    if isinstance(t, NonGeneric):
        if t.name not in names:
            raise TableError(f"{where}: unknown class {t.name}")
        if t.name in generic:
            raise TableError(f"{where}: generic class {t.name} used without an argument")
        return
    if t.name not in names:
        raise TableError(f"{where}: unknown class {t.name}")
    if t.name not in generic:
        raise TableError(f"{where}: non-generic class {t.name} given an argument")
    _check_bound(t.arg.lo, param, generic, names, where)
    _check_bound(t.arg.hi, param, generic, names, where)


def parse_class_table(text: str) -> ClassTable:
    decls: dict[str, ClassDecl] = {}
    lines: dict[str, int] = {}
    applied: dict[str, bool] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            decl, passes_param = _parse_decl(line, lineno)
        except TypeSyntaxError as exc:
            raise TableError(f"line {lineno}: {exc}") from None
        if decl.name == NULL:
            raise TableError(f"line {lineno}: Null is built in and cannot be declared")
        if decl.name in decls:
            raise TableError(f"line {lineno}: duplicate class {decl.name}")
        if decl.name == OBJECT and (decl.is_generic or decl.superclass is not None):
            raise TableError(f"line {lineno}: Object must be non-generic and have no superclass")
        decls[decl.name] = decl
        lines[decl.name] = lineno
        applied[decl.name] = passes_param
    if OBJECT not in decls:
        decls[OBJECT] = ClassDecl(OBJECT, superclass=None)
        lines[OBJECT] = 0
        applied[OBJECT] = False

    generic = {n for n, d in decls.items() if d.is_generic}
    names = set(decls) | {NULL}
    for n, d in decls.items():
        where = f"line {lines[n]}"
        s = d.superclass
        if s is None:
            continue
        if s == NULL or s not in decls:
            raise TableError(f"{where}: unknown superclass {s} of {n}")
        if not d.is_generic and s in generic:
            raise TableError(f"{where}: non-generic class cannot extend generic class ({n} extends {s})")
        if d.is_generic and s in generic and not applied[n]:
            raise TableError(f"{where}: {n} must pass its parameter to generic superclass {s}")
        if s not in generic and applied[n]:
            raise TableError(f"{where}: non-generic class {s} given an argument")
        for b in (d.lower_bound, d.upper_bound):
            if b is not None:
                _check_bound(b, d.param_name, generic, names, where)

    edges = [(n, d.superclass) for n, d in decls.items() if d.superclass is not None]
    has_sub = {s for _, s in edges}
    edges += [(NULL, n) for n in decls if n not in has_sub]
    try:
        poset = transitive_reduction(edges, names)
    except CycleError as exc:
        raise TableError(f"cyclic extends: {' -> '.join(exc.cycle)}") from None
    for n in decls:
        if not poset.leq(n, OBJECT):
            raise TableError(f"class {n} does not reach Object")
    return ClassTable(dict(sorted(decls.items())), poset, frozenset(generic), text)


# -- checking types against a table ------------------------------------------


def arity_problem(table: ClassTable, t: TypeExpr) -> str | None:
    """Describe the first arity/unknown-class problem in ``t``, or None."""
    if isinstance(t, NullType):
        return None
    if isinstance(t, TypeVar):
        return f"type variable {t.name} in a ground type"
    if not table.knows(t.name) or t.name == NULL:
        return f"unknown class {t.name}"
    if isinstance(t, NonGeneric):
        if table.is_generic(t.name):
            return f"generic class {t.name} needs a type argument"
        return None
    if not table.is_generic(t.name):
        return f"non-generic class {t.name} takes no type argument"
    return arity_problem(table, t.arg.lo) or arity_problem(table, t.arg.hi)


def interval_problem(table: ClassTable, a: IntervalArg) -> str | None:
    """Check ``lo <: hi`` for ``a`` and every interval nested in it."""
    from .judge import subtype

    for end in (a.lo, a.hi):
        if isinstance(end, App):
            problem = interval_problem(table, end.arg)
            if problem:
                return problem
    if not subtype(table, a.lo, a.hi):
        return f"malformed interval {a}: {render(a.lo)} is not a subtype of {render(a.hi)}"
    return None


def admittability_problem(table: ClassTable, t: TypeExpr) -> str | None:
    problem = arity_problem(table, t)
    if problem is None and isinstance(t, App):
        problem = interval_problem(table, t.arg)
    return problem


def check_type(table: ClassTable, t: TypeExpr) -> TypeExpr:
    problem = admittability_problem(table, t)
    if problem:
        raise AdmittabilityError(f"not admittable: {problem}")
    return t


def parse_type(text: str, table: ClassTable) -> TypeExpr:
    return check_type(table, parse_raw(text))


def parse_arg(text: str, table: ClassTable) -> IntervalArg:
    a = parse_raw_arg(text)
    problem = arity_problem(table, a.lo) or arity_problem(table, a.hi) or interval_problem(table, a)
    if problem:
        raise AdmittabilityError(f"not admittable: {problem}")
    return a


def erasure(t: TypeExpr) -> str:
    if isinstance(t, NullType):
        return NULL
    if isinstance(t, TypeVar):
        raise TypeError("erasure of a type variable")
    return t.name


def free_type(c: str, table: ClassTable) -> TypeExpr:
    if c == NULL:
        return NULL_TYPE
    if not table.knows(c):
        raise TableError(f"unknown class {c}")
    if table.is_generic(c):
        return App(c, ANY_ARG)
    return NonGeneric(c)
