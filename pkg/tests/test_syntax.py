import pytest

from nomset.atoms import Name
from nomset.lam import App, Lam, Var, all_terms, alpha_eq
from nomset.syntax import (
    NameTable,
    ParseError,
    parse_perm,
    parse_term,
    print_names,
    print_term,
)

x, y, z = Name(0), Name(1), Name(2)


def fresh_table():
    return NameTable.from_labels({"x": x, "y": y, "z": z})


def test_parse_identity_abstraction():
    table = NameTable()
    assert parse_term(r"\x. x", table) == Lam(x, Var(x))


def test_parse_application_of_abstraction():
    table = NameTable()
    got = parse_term(r"(\x. x y) z", table)
    assert got == App(Lam(x, App(Var(x), Var(y))), Var(z))


def test_parse_missing_body_is_an_error():
    with pytest.raises(ParseError) as err:
        parse_term(r"\x.")
    assert err.value.line == 1
    assert err.value.col == 4
    assert "body" in err.value.message


def test_parse_reports_position_of_unexpected_token():
    with pytest.raises(ParseError) as err:
        parse_term("x )")
    assert (err.value.line, err.value.col) == (1, 3)
    assert "expected" in err.value.message


def test_parse_error_on_second_line():
    with pytest.raises(ParseError) as err:
        parse_term("x\n  .")
    assert err.value.line == 2
    assert err.value.col == 3


def test_parse_unicode_lambda():
    table = NameTable()
    assert parse_term("λx. x", table) == Lam(x, Var(x))


def test_parse_primed_and_underscored_identifiers():
    table = NameTable()
    got = parse_term(r"\x'. x' foo_1", table)
    assert got == Lam(x, App(Var(x), Var(y)))
    assert table.by_label["x'"] == x
    assert table.by_label["foo_1"] == y


def test_application_is_left_associative():
    table = fresh_table()
    assert parse_term("x y z", table) == App(App(Var(x), Var(y)), Var(z))


def test_abstraction_body_extends_right():
    table = fresh_table()
    assert parse_term(r"\x. x y", table) == Lam(x, App(Var(x), Var(y)))


def test_parens_group_argument():
    table = fresh_table()
    assert parse_term("x (y z)", table) == App(Var(x), App(Var(y), Var(z)))


def test_rejects_trailing_garbage():
    with pytest.raises(ParseError):
        parse_term("x y )")


def test_rejects_unknown_character():
    with pytest.raises(ParseError) as err:
        parse_term("x # y")
    assert (err.value.line, err.value.col) == (1, 3)


def test_print_free_variable_uses_table_label():
    assert print_term(Var(x), fresh_table()) == "x"


def test_print_renames_binders_canonically():
    table = fresh_table()
    assert print_term(Lam(x, Var(x)), table) == r"\a. a"
    assert print_term(Lam(z, Var(z)), table) == r"\a. a"
    assert print_term(Lam(x, App(Var(x), Var(y))), table) == r"\a. a y"


def test_print_minimal_parentheses():
    table = fresh_table()
    assert print_term(App(App(Var(x), Var(y)), Var(z)), table) == "x y z"
    assert print_term(App(Var(x), App(Var(y), Var(z))), table) == "x (y z)"
    assert print_term(App(Lam(x, Var(x)), Var(y)), table) == r"(\a. a) y"
    assert print_term(App(Var(x), Lam(y, Var(y))), table) == r"x (\a. a)"


def test_print_nested_binders_get_distinct_labels():
    table = fresh_table()
    t = Lam(x, Lam(y, App(Var(x), Var(y))))
    assert print_term(t, table) == r"\a. \b. a b"


def test_print_binder_avoids_capturing_free_label():
    table = NameTable.from_labels({"a": y})
    assert print_term(Lam(x, App(Var(x), Var(y))), table) == r"\b. b a"


def test_print_synthesizes_labels_for_unregistered_names():
    table = NameTable()
    assert print_term(Var(Name(7)), table) == "n7"
    # Round trip through the same table keeps the identity.
    assert parse_term("n7", table) == Var(Name(7))


def test_print_is_deterministic():
    t = Lam(x, App(Lam(y, Var(y)), Var(z)))
    assert print_term(t, fresh_table()) == print_term(t, fresh_table())


def test_roundtrip_is_alpha_identity_on_enumerated_terms():
    pool = (x, y, z)
    table = fresh_table()
    for t in all_terms(4, pool):
        assert alpha_eq(parse_term(print_term(t, table), table), t)


def test_parse_perm_pairs():
    table = fresh_table()
    assert parse_perm("(x y)(y z)", table) == ((x, y), (y, z))


def test_parse_perm_interns_new_names():
    table = NameTable()
    got = parse_perm("(a b)", table)
    assert got == ((Name(0), Name(1)),)


def test_parse_perm_rejects_garbage():
    with pytest.raises(ParseError):
        parse_perm("(a)", fresh_table())
    with pytest.raises(ParseError):
        parse_perm("a b", fresh_table())


def test_print_names_sorted_by_label():
    table = fresh_table()
    assert print_names(frozenset({z, x}), table) == "x z"
    assert print_names(frozenset(), table) == ""


def test_name_table_is_bijective():
    table = NameTable()
    n1 = table.intern("foo")
    n2 = table.intern("bar")
    assert table.intern("foo") == n1
    assert n1 != n2
    assert table.label_of(n1) == "foo"
    with pytest.raises(ValueError):
        table._bind("foo", Name(99))
