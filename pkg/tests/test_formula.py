import pytest
from hypothesis import given

from boolops.errors import ParseError
from boolops.formula import (
    App,
    Connective,
    Const,
    Not,
    Var,
    VariableOrder,
    format_formula,
    parse,
    variables,
)
from conftest import formulas

AND = Connective.AND
OR = Connective.OR
XOR = Connective.XOR


def test_parse_conjunction():
    assert parse("x & y") == App(AND, (Var("x"), Var("y")))


def test_parse_negated_disjunction():
    assert parse("!(x | y)") == Not(App(OR, (Var("x"), Var("y"))))


def test_parse_majority():
    assert parse("maj(x, y, z)") == App(
        Connective.MAJ, (Var("x"), Var("y"), Var("z"))
    )


def test_precedence_not_and_or():
    assert parse("!x & y | z") == App(
        OR, (App(AND, (Not(Var("x")), Var("y"))), Var("z"))
    )


def test_precedence_xor_between_and_or():
    assert parse("a & b ^ c | d") == App(
        OR, (App(XOR, (App(AND, (Var("a"), Var("b"))), Var("c"))), Var("d"))
    )


def test_chain_flattening():
    f = parse("x & y & z")
    assert f == App(AND, (Var("x"), Var("y"), Var("z")))
    # Parenthesized groups keep their own node.
    g = parse("(x & y) & z")
    assert g == App(AND, (App(AND, (Var("x"), Var("y"))), Var("z")))
    assert f != g


def test_nand_nor_chains_left_associate():
    assert parse("a nand b nand c") == App(
        Connective.NAND,
        (App(Connective.NAND, (Var("a"), Var("b"))), Var("c")),
    )
    assert parse("a nor b | c") == App(
        OR, (App(Connective.NOR, (Var("a"), Var("b"))), Var("c"))
    )


def test_equiv_chains_left_associate():
    assert parse("a <-> b <-> c") == App(
        Connective.EQUIV,
        (App(Connective.EQUIV, (Var("a"), Var("b"))), Var("c")),
    )


def test_implication_family():
    assert parse("a -> b") == App(Connective.IMPLIES, (Var("a"), Var("b")))
    assert parse("a <- b") == App(Connective.CONVERSE_IMPLIES, (Var("a"), Var("b")))
    assert parse("a !-> b") == App(Connective.NON_IMPLIES, (Var("a"), Var("b")))
    assert parse("a !<- b") == App(
        Connective.CONVERSE_NON_IMPLIES, (Var("a"), Var("b"))
    )


def test_implication_is_non_associative():
    with pytest.raises(ParseError) as excinfo:
        parse("a -> b -> c")
    assert excinfo.value.position == 8
    parse("a -> (b -> c)")
    parse("(a -> b) -> c")


def test_constants():
    for text in ("0", "F", "f"):
        assert parse(text) == Const(0)
    for text in ("1", "T", "t"):
        assert parse(text) == Const(1)


def test_unicode_aliases():
    assert parse("x ∧ ¬y") == parse("x & !y")
    assert parse("a ⇒ b") == parse("a -> b")
    assert parse("a ⇐ b") == parse("a <- b")
    assert parse("a ≡ b") == parse("a <-> b")
    assert parse("x ⊕ y ∨ z") == parse("x ^ y | z")


def test_keywords_case_insensitive():
    assert parse("x NAND y") == parse("x nand y")
    assert parse("MAJ(x, y, z)") == parse("maj(x, y, z)")


def test_parse_error_position_and_expected():
    with pytest.raises(ParseError) as excinfo:
        parse("x &")
    assert excinfo.value.position == 4
    assert "identifier" in excinfo.value.expected


def test_parse_error_unbalanced_paren():
    with pytest.raises(ParseError) as excinfo:
        parse("(x | y")
    assert excinfo.value.position == 7
    assert "')'" in excinfo.value.expected


def test_parse_error_unknown_character():
    with pytest.raises(ParseError) as excinfo:
        parse("x @ y")
    assert excinfo.value.position == 3


def test_parse_error_trailing_garbage():
    with pytest.raises(ParseError) as excinfo:
        parse("x y")
    assert excinfo.value.position == 3
    assert "end of input" in excinfo.value.expected


def test_parse_error_empty():
    with pytest.raises(ParseError):
        parse("")
    with pytest.raises(ParseError):
        parse("   ")


def test_reserved_words_rejected_as_variables():
    with pytest.raises(ValueError):
        Var("maj")
    with pytest.raises(ValueError):
        Var("T")
    with pytest.raises(ValueError):
        Var("1bad")


def test_node_arity_validation():
    with pytest.raises(ValueError):
        App(Connective.IMPLIES, (Var("x"),))
    with pytest.raises(ValueError):
        App(Connective.MAJ, (Var("x"), Var("y")))
    with pytest.raises(ValueError):
        App(AND, (Var("x"),))


def test_variables_first_occurrence():
    assert variables(parse("y & x")).names == ("y", "x")
    assert variables(parse("x ^ y & x")).names == ("x", "y")
    assert variables(Const(1)).names == ()


def test_variable_order_rejects_duplicates():
    with pytest.raises(ValueError):
        VariableOrder(("x", "x"))


def test_format_examples():
    assert format_formula(parse("x & (y | z)")) == "x & (y | z)"
    assert format_formula(Not(Var("x"))) == "!x"
    assert format_formula(parse("x -> y")) == "x -> y"
    assert format_formula(parse("maj(x, !y, z & w)")) == "maj(x, !y, z & w)"


def test_format_keeps_structure_against_reflattening():
    f = App(AND, (App(AND, (Var("x"), Var("y"))), Var("z")))
    assert format_formula(f) == "(x & y) & z"
    g = App(AND, (Var("x"), App(AND, (Var("y"), Var("z")))))
    assert format_formula(g) == "x & (y & z)"


def test_format_kary_nand_prints_negated_conjunction():
    f = App(Connective.NAND, (Var("a"), Var("b"), Var("c")))
    assert format_formula(f) == "!(a & b & c)"


@given(formulas())
def test_roundtrip_parse_format(f):
    assert parse(format_formula(f)) == f


@given(formulas())
def test_variables_stable_under_reformat(f):
    assert variables(parse(format_formula(f))) == variables(f)


@given(formulas(kary_duals=True))
def test_format_always_reparses(f):
    # k-ary NAND/NOR lose their node shape but never their meaning; the
    # semantic check lives in the truth-table tests.
    parse(format_formula(f))
