"""Command-line front end.

    ordgen build --table h1.gt --depth 2 [--out s2.dot]
    ordgen sub --table h1.gt "LinkedList<String>" "List<?>"
    ordgen contains --table h1.gt "String" "? extends Object"
    ordgen galois --table h1.gt --depth 2
    ordgen fsub --table h2.gt Enum
    ordgen fsup --table h2.gt Enum
    ordgen valid --table h2.gt "Enum<Object>"
    ordgen dfbg --table t.gt --lower "C<T>" --upper Object CANDIDATE
    ordgen export-dot --table h1.gt --what subtyping

Boolean queries exit 0 for true and 1 for false; verification commands exit
0 on success and 1 on violation. Usage, parse and I/O errors exit 2.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from .construct import DEFAULT_CEILING, build, containment_poset
from .errors import OrdgenError
from .judge import (
    BoundSpec,
    check_galois,
    contains,
    dfbg_check,
    f_subtypes,
    f_supertypes,
    is_admittable,
    is_valid,
    subtype,
)
from .operators import INTERVAL, WILDCARD
from .poset import Poset
from .typesys import (
    NULL_TYPE,
    ClassTable,
    arity_problem,
    parse_arg,
    parse_class_table,
    parse_raw,
    parse_type,
    render,
    substitute,
)

_MODES = {"wildcards": WILDCARD, "wildcard": WILDCARD, "intervals": INTERVAL, "interval": INTERVAL}


@dataclass
class CliConfig:
    table_path: Path
    depth: int = 2
    mode: str = WILDCARD
    element_ceiling: int = DEFAULT_CEILING
    output_path: Path | None = None

    def __post_init__(self):
        if self.depth < 0:
            raise OrdgenError("--depth must be >= 0")
        if self.element_ceiling < 1:
            raise OrdgenError("--ceiling must be >= 1")


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(p: Poset, name: str = "G") -> str:
    """DOT text for the Hasse diagram of ``p``, edges from lower to upper."""
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    lines += [f"  {_quote(e)};" for e in p.elements]
    lines += [f"  {_quote(a)} -> {_quote(b)};" for a, b in sorted(p.covers)]
    lines.append("}")
    return "\n".join(lines) + "\n"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def make_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--table", required=True, type=Path, help="class-table file")
    common.add_argument("--depth", type=int, default=2)
    common.add_argument("--mode", choices=sorted(_MODES), default="wildcards")
    common.add_argument("--ceiling", type=int, default=DEFAULT_CEILING)
    common.add_argument("--out", type=Path, default=None)

    parser = _Parser(prog="ordgen", description="Generic subtyping constructed from subclassing.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("build", parents=[common], help="build S_depth and print its size")
    p = sub.add_parser("sub", parents=[common], help="decide T1 <: T2")
    p.add_argument("t1")
    p.add_argument("t2")
    p = sub.add_parser("contains", parents=[common], help="decide whether A1 is contained in A2")
    p.add_argument("a1")
    p.add_argument("a2")
    sub.add_parser("galois", parents=[common], help="verify the erasure Galois connection")
    for cmd in ("fsub", "fsup"):
        p = sub.add_parser(cmd, parents=[common], help="list F-subtypes / F-supertypes of a class")
        p.add_argument("cls")
    p = sub.add_parser("valid", parents=[common], help="admittability and validity of a type")
    p.add_argument("type")
    p = sub.add_parser("dfbg", parents=[common], help="check a candidate against lower/upper bounds")
    p.add_argument("--param", default="T")
    p.add_argument("--lower", default=None)
    p.add_argument("--upper", default=None)
    p.add_argument("candidate")
    p = sub.add_parser("export-dot", parents=[common], help="write a Hasse diagram in DOT")
    p.add_argument("--what", choices=["subtyping", "containment", "subclassing"], default="subtyping")
    return parser


def _emit(cfg: CliConfig, text: str, out) -> None:
    if cfg.output_path is not None:
        cfg.output_path.write_text(text, encoding="utf-8")
    else:
        out.write(text)


def _verdict(flag: bool, out) -> int:
    print("true" if flag else "false", file=out)
    return 0 if flag else 1


def _bound(text: str | None, param: str, table: ClassTable):
    if text is None:
        return None
    t = parse_raw(text, params=[param])
    # bounds may mention the parameter, so only arity is checked here
    problem = arity_problem(table, substitute(t, param, NULL_TYPE))
    if problem:
        raise OrdgenError(f"bad bound {text!r}: {problem}")
    return t


def dispatch(args, out) -> int:
    cfg = CliConfig(args.table, args.depth, _MODES[args.mode], args.ceiling, args.out)
    table = parse_class_table(cfg.table_path.read_text(encoding="utf-8"))
    cmd = args.command

    if cmd == "build":
        s = build(table, cfg.depth, cfg.mode, cfg.element_ceiling)
        print(f"depth: {cfg.depth}\nmode: {cfg.mode}\nelements: {len(s.poset)}\ncovers: {len(s.poset.covers)}", file=out)
        if cfg.output_path is not None:
            cfg.output_path.write_text(export_dot(s.poset), encoding="utf-8")
        return 0
    if cmd == "sub":
        return _verdict(subtype(table, parse_type(args.t1, table), parse_type(args.t2, table)), out)
    if cmd == "contains":
        return _verdict(contains(table, parse_arg(args.a1, table), parse_arg(args.a2, table)), out)
    if cmd == "galois":
        report = check_galois(table, cfg.depth, cfg.mode, ceiling=cfg.element_ceiling)
        print(report.summary(), file=out)
        for t, c, direction in report.counterexamples:
            print(f"  t={render(t)} c={c}: {direction}", file=out)
        return 0 if report.holds else 1
    if cmd in ("fsub", "fsup"):
        fn = f_subtypes if cmd == "fsub" else f_supertypes
        found = fn(table, args.cls, cfg.depth, cfg.mode)
        _emit(cfg, "".join(render(t) + "\n" for t in found), out)
        return 0
    if cmd == "valid":
        t = parse_raw(args.type)
        admittable = is_admittable(table, t)
        valid = admittable and is_valid(table, t, cfg.mode, cfg.element_ceiling)
        print(f"admittable: {str(admittable).lower()}, valid: {str(valid).lower()}", file=out)
        return 0 if valid else 1
    if cmd == "dfbg":
        spec = BoundSpec(args.param, _bound(args.lower, args.param, table), _bound(args.upper, args.param, table))
        return _verdict(dfbg_check(table, spec, parse_type(args.candidate, table)), out)
    if cmd == "export-dot":
        if args.what == "subclassing":
            p = table.class_poset
        elif args.what == "subtyping":
            p = build(table, cfg.depth, cfg.mode, cfg.element_ceiling).poset
        else:
            p = containment_poset(build(table, cfg.depth, cfg.mode, cfg.element_ceiling)).base
        _emit(cfg, export_dot(p), out)
        return 0
    raise AssertionError(cmd)


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = make_parser().parse_args(argv)
        return dispatch(args, out)
    except _UsageError as exc:
        print(f"ordgen: usage error: {exc}", file=err)
    except OrdgenError as exc:
        print(f"ordgen: error: {exc}", file=err)
    except OSError as exc:
        print(f"ordgen: {exc.strerror or exc}: {exc.filename or ''}".rstrip(": "), file=err)
    except RecursionError:
        print("ordgen: error: type nesting too deep", file=err)
    return 2


def main() -> None:
    sys.exit(run())
