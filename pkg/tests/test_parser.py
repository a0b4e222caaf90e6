"""Tests for the expression language."""

from fractions import Fraction

import pytest

from downup_engine.conformal import solve_conformal
from downup_engine.expr import (
    element_from_source,
    parse_expression,
    parse_polynomial,
    parse_scalar,
    to_source,
    tokenize,
)
from downup_engine.expr.parser import BinOp, Num, Pow, Sym
from downup_engine.poly.univariate import UniPoly
from downup_engine.scalars import CyclotomicScalar
from downup_engine.utils.errors import ExprSyntaxError, UnknownSymbol


def test_tokenize():
    tokens = list(tokenize("2*h^3 - 1/2"))
    assert [t.type for t in tokens] == ["number", "mul", "name", "caret", "number", "minus", "number"]
    assert tokens[-1].value == "1/2"
    assert tokens[2].where == (2, 3)


def test_precedence():
    tree = parse_expression("u + 2*h^3")
    assert tree == BinOp("+", Sym("u"), BinOp("*", Num(Fraction(2)), Pow(Sym("h"), 3)))


@pytest.mark.parametrize(
    "source",
    ["2*h^3 - 1/2*d", "-(h + 1)*u", "h - (u - d)", "h - u - d", "(u - d)^2", "zeta(8)^3 + 1", "(1/2)^2"],
)
def test_to_source_reproduces_canonical_text(source):
    tree = parse_expression(source)
    assert to_source(tree) == source
    assert parse_expression(to_source(tree)) == tree


@pytest.mark.parametrize(
    "source, message, caret",
    [
        ("u**2", "'**' is not an operator; write powers with '^'", " ^^"),
        ("2h", "unexpected 'h' (multiplication must be written with '*')", " ^"),
        ("1/0", "zero denominator", "^^^"),
        ("h^1/2", "exponents must be nonnegative integers", "  ^^^"),
        ("zeta(0)", "zeta needs a positive integer conductor", "     ^"),
        ("u $ d", "unexpected character '$'", "  ^"),
        ("", "empty expression", "^"),
    ],
)
def test_syntax_errors(source, message, caret):
    with pytest.raises(ExprSyntaxError) as excinfo:
        parse_expression(source)
    err = excinfo.value
    assert err.message == message
    assert err.name == "SyntaxError"
    assert err.usage
    assert err.caret_line() == caret


def test_unclosed_parenthesis():
    with pytest.raises(ExprSyntaxError, match="expected rpar, found end of input"):
        parse_expression("(h + 1")


def test_unknown_symbol():
    with pytest.raises(UnknownSymbol) as excinfo:
        parse_expression("x + 1")
    assert excinfo.value.name == "UnknownSymbol"
    assert excinfo.value.caret_line() == "^"


def test_parse_scalar():
    assert parse_scalar("-1/2") == CyclotomicScalar.from_fraction(Fraction(-1, 2))
    expected = CyclotomicScalar.one() + 2 * CyclotomicScalar.zeta(8) ** 3
    assert parse_scalar("1 + 2*zeta(8)^3") == expected
    assert parse_scalar("zeta(4)^2") == -1
    with pytest.raises(UnknownSymbol):
        parse_scalar("h")


def test_parse_polynomial():
    assert parse_polynomial("(h + 1)^2") == UniPoly.from_list([1, 2, 1])
    assert parse_polynomial("3").format("h") == "3"
    assert parse_polynomial("x^2 - x", var="x").format("x") == "x^2 - x"
    bound = parse_polynomial("c*h", bindings={"c": CyclotomicScalar.from_int(2)})
    assert bound.format("h") == "2*h"


def test_element_from_source(classic, classic_params):
    assert str(element_from_source(classic, "d*u")) == "2*u*d + h"
    assert element_from_source(classic, "2") == classic.scalar(2)
    assert element_from_source(classic, "(u + d)^2") == (classic.u() + classic.d()) ** 2


def test_element_H_needs_psi(classic, classic_params):
    with pytest.raises(UnknownSymbol):
        element_from_source(classic, "H")
    psi = solve_conformal(classic_params).psi
    x = element_from_source(classic, "H - u*d", psi=psi)
    assert x == classic.poly_h(psi)


def test_element_bindings(classic):
    c = CyclotomicScalar.from_int(5)
    x = element_from_source(classic, "h^2 - c", bindings={"c": c})
    assert x == classic.h() ** 2 - classic.scalar(5)
