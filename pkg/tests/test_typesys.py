import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import TABLES
from ordgen.construct import build
from ordgen.errors import AdmittabilityError, TableError, TypeSyntaxError
from ordgen.judge import subtype, universe
from ordgen.typesys import (
    ANY_ARG,
    NULL_TYPE,
    App,
    IntervalArg,
    NonGeneric,
    TypeVar,
    depth,
    erasure,
    free_type,
    parse_arg,
    parse_class_table,
    parse_type,
    render,
    singleton,
)

STRING = NonGeneric("String")
OBJECT = NonGeneric("Object")


class TestClassTable:
    def test_h1(self, h1):
        assert h1.generic_set == {"List", "LinkedList"}
        assert h1.class_poset.covers == {
            ("LinkedList", "List"),
            ("List", "Object"),
            ("String", "Object"),
            ("Null", "LinkedList"),
            ("Null", "String"),
        }
        assert h1.leq("LinkedList", "List")

    def test_h2_f_bound(self, h2):
        d = h2.decls["Enum"]
        assert d.is_generic and d.param_name == "T"
        assert d.upper_bound == App("Enum", singleton(TypeVar("T")))
        assert d.lower_bound is None

    def test_lower_and_upper_bounds(self):
        t = parse_class_table("class C<T super C<T> extends Object> extends Object")
        d = t.decls["C"]
        assert d.lower_bound == App("C", singleton(TypeVar("T")))
        assert d.upper_bound == OBJECT

    def test_object_auto_declared(self):
        t = parse_class_table("# nothing here\n\n")
        assert t.class_names == ("Null", "Object")
        assert t.class_poset.covers == {("Null", "Object")}

    def test_explicit_object(self):
        t = parse_class_table("class Object\nclass A extends Object")
        assert t.class_names == ("A", "Null", "Object")

    def test_default_superclass(self):
        t = parse_class_table("class A")
        assert t.decls["A"].superclass == "Object"

    def test_generic_under_nongeneric(self, h3):
        assert h3.leq("Holder", "Thing")

    @pytest.mark.parametrize(
        "src, match",
        [
            ("class A extends B", "B"),
            ("class Foo extends List<T>\nclass List<T> extends Object", "non-generic class cannot extend generic class"),
            ("class List<T> extends Object\nclass Foo extends List", "non-generic class cannot extend generic class"),
            ("class A extends B\nclass B extends A", "cyclic"),
            ("class A\nclass A", "duplicate"),
            ("class Null", "Null"),
            ("class Object extends A\nclass A", "Object"),
            ("class L<T> extends Object\nclass M<U> extends L<X>", "unchanged"),
            ("class L<T> extends Object\nclass M<U> extends L", "must pass"),
            ("class A<T extends Nope<T>>", "Nope"),
            ("class A<T extends String<T>>\nclass String", "non-generic"),
            ("class A extends", "end of input"),
            ("class A ! B", "unexpected character"),
        ],
    )
    def test_errors(self, src, match):
        with pytest.raises(TableError, match=match):
            parse_class_table(src)


class TestParseType:
    def test_wildcards(self, h1):
        assert parse_type("List<? extends String>", h1) == App("List", IntervalArg(NULL_TYPE, STRING))
        assert parse_type("List<? super String>", h1) == App("List", IntervalArg(STRING, OBJECT))
        assert parse_type("List<?>", h1) == App("List", ANY_ARG)
        assert parse_type("List<String>", h1) == App("List", singleton(STRING))
        assert parse_type("List<[String,String]>", h1) == App("List", singleton(STRING))
        assert parse_type("Null", h1) == NULL_TYPE

    @pytest.mark.parametrize("text", ["String<Object>", "List", "List<List>", "Nope", "Object<?>"])
    def test_arity(self, h1, text):
        with pytest.raises(AdmittabilityError):
            parse_type(text, h1)

    def test_malformed_interval(self, h1):
        with pytest.raises(AdmittabilityError, match="malformed"):
            parse_type("List<[Object,String]>", h1)
        with pytest.raises(AdmittabilityError, match="malformed"):
            parse_type("List<List<[Object,String]>>", h1)

    @pytest.mark.parametrize("text", ["List<", "List<String", "List<String>>", "<>", "List<[String]>", ""])
    def test_syntax(self, h1, text):
        with pytest.raises(TypeSyntaxError):
            parse_type(text, h1)

    def test_parse_arg(self, h1):
        assert parse_arg("?", h1) == ANY_ARG
        assert parse_arg("? extends String", h1) == IntervalArg(NULL_TYPE, STRING)
        with pytest.raises(AdmittabilityError):
            parse_arg("[Object,String]", h1)


class TestMaps:
    def test_erasure(self, h1):
        assert erasure(parse_type("LinkedList<String>", h1)) == "LinkedList"
        assert erasure(STRING) == "String"
        assert erasure(NULL_TYPE) == "Null"

    def test_free_type(self, h1):
        assert free_type("List", h1) == App("List", ANY_ARG)
        assert render(free_type("List", h1)) == "List<?>"
        assert free_type("String", h1) == STRING
        assert free_type("Null", h1) == NULL_TYPE
        with pytest.raises(TableError):
            free_type("Nope", h1)

    def test_depth(self, h1):
        assert depth(STRING) == 0
        assert depth(parse_type("List<?>", h1)) == 1
        assert depth(App("List", IntervalArg(NULL_TYPE, App("List", singleton(STRING))))) == 2

    @pytest.mark.parametrize("name", sorted(TABLES))
    @pytest.mark.parametrize("i", [1, 2])
    def test_erasure_surjective(self, name, i):
        table = TABLES[name]
        assert {erasure(t) for t in universe(table, i)} == set(table.class_names)

    @pytest.mark.parametrize("name", ["H1", "H2", "H3"])
    def test_erasure_is_monotone(self, name):
        table = TABLES[name]
        ts = universe(table, 2)
        for t1 in ts:
            for t2 in ts:
                if subtype(table, t1, t2):
                    assert table.leq(erasure(t1), erasure(t2))


class TestRender:
    def test_examples(self):
        assert render(App("List", ANY_ARG)) == "List<?>"
        assert render(App("List", singleton(STRING))) == "List<String>"
        assert render(App("List", IntervalArg(STRING, NonGeneric("CharSequence")))) == "List<[String,CharSequence]>"
        assert render(App("List", IntervalArg(NULL_TYPE, STRING))) == "List<? extends String>"
        assert render(App("List", IntervalArg(STRING, OBJECT))) == "List<? super String>"

    def test_interval_with_chain(self, h3):
        t = parse_type("Box<[String,CharSequence]>", h3)
        assert render(t) == "Box<[String,CharSequence]>"

    @pytest.mark.parametrize("name", ["H1", "H2", "H3"])
    @pytest.mark.parametrize("mode", ["wildcard", "interval"])
    def test_round_trip_universe(self, name, mode):
        table = TABLES[name]
        for e in build(table, 2, mode).elements:
            t = parse_type(e, table)
            assert render(t) == e
            assert parse_type(render(t), table) == t

    @settings(max_examples=100, deadline=None)
    @given(st.data())
    def test_round_trip_nested(self, data):
        table = TABLES["H3"]
        pool = universe(table, 2, "interval")
        t = data.draw(st.sampled_from(pool))
        # wrap once more to reach depth 3 without materializing S_3
        g = data.draw(st.sampled_from(sorted(table.generic_set)))
        u = data.draw(st.sampled_from([x for x in pool if subtype(table, t, x)]))
        wrapped = App(g, IntervalArg(t, u))
        assert parse_type(render(wrapped), table) == wrapped
