from pathlib import Path

import pytest

from ordgen.typesys import parse_class_table

TABLES_DIR = Path(__file__).resolve().parent.parent / "tables"

H1_SRC = """\
class String extends Object
class List<T> extends Object
class LinkedList<T> extends List<T>
"""

H2_SRC = "class Enum<T extends Enum<T>> extends Object\n"

C_SRC = "class C<T> extends Object\n"

H3_SRC = (TABLES_DIR / "h3.gt").read_text()

PLAIN_SRC = """\
class Animal extends Object
class Cat extends Animal
class Dog extends Animal
"""

SOURCES = {"H1": H1_SRC, "H2": H2_SRC, "H3": H3_SRC, "C": C_SRC, "plain": PLAIN_SRC}
# parse once per session so that lru caches keyed on table identity are shared
TABLES = {name: parse_class_table(src) for name, src in SOURCES.items()}


@pytest.fixture
def h1():
    return TABLES["H1"]


@pytest.fixture
def h2():
    return TABLES["H2"]


@pytest.fixture
def h3():
    return TABLES["H3"]


@pytest.fixture
def ctab():
    return TABLES["C"]


# -- acceptance summary ------------------------------------------------------

_acceptance: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid or "criterion" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.when == "call" or report.outcome != "passed":
        if _acceptance.get(name) != "FAIL":
            _acceptance[name] = "PASS" if report.outcome == "passed" else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_acceptance):
        terminalreporter.write_line(f"{_acceptance[name]}  {name}")
