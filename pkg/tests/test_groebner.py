"""Tests for lex Groebner bases and vanishing ideals, checked against sympy."""

from fractions import Fraction

import pytest
import sympy

from downup_engine.poly import BiPoly
from downup_engine.poly.groebner import PointSet2D, groebner_basis, ideal_membership, spoly, vanishing_ideal

X, Y = sympy.symbols("x y")


def rational(value):
    q = Fraction(value)
    return sympy.Rational(q.numerator, q.denominator)


def to_sympy(g: BiPoly):
    return sum((rational(c.to_fraction()) * X**i * Y**j for (i, j), c in g.items()), sympy.Integer(0))


def sympy_reduced_basis(polys):
    basis = sympy.groebner(polys, X, Y, order="lex", domain=sympy.QQ)
    return {sympy.expand(sympy.Poly(p, X, Y, domain=sympy.QQ).monic().as_expr()) for p in basis.exprs}


def ours(basis):
    return {sympy.expand(to_sympy(g)) for g in basis}


def test_groebner_basis_matches_sympy():
    x, y = BiPoly.x(), BiPoly.y()
    F = [x**2 + y**2 - 1, x - y]
    G = groebner_basis(F)
    assert ours(G) == sympy_reduced_basis([to_sympy(f) for f in F])
    # ascending by lex leading monomial
    assert [g.leading_monomial() for g in G] == sorted(g.leading_monomial() for g in G)


def test_spoly_cancels_leading_terms():
    x, y = BiPoly.x(), BiPoly.y()
    f, g = x**2 + y, x * y + 1
    s = spoly(f, g)
    assert s.coeff(2, 1) == 0
    assert s == y**2 - x


@pytest.mark.parametrize(
    "points",
    [
        [(0, 0), (1, 0), (0, 1)],
        [(1, 2), (1, 3), (2, 2), (Fraction(1, 2), 5)],
        [(3, 3)],
    ],
)
def test_vanishing_ideal(points):
    G = vanishing_ideal(points)
    for g in G:
        for a, b in points:
            assert g(a, b) == 0
    # the ideal of a finite point set is the intersection of the maximal ideals
    ideal = None
    for a, b in points:
        point_ideal = [X - rational(a), Y - rational(b)]
        ideal = point_ideal if ideal is None else [p * q for p in ideal for q in point_ideal]
    assert ours(G) == sympy_reduced_basis(ideal)


def test_vanishing_ideal_of_three_points():
    G = vanishing_ideal([(0, 0), (1, 0), (0, 1)])
    assert [g.format() for g in G] == ["y^2 - y", "x*y", "x^2 - x"]


def test_duplicate_points_collapse():
    assert len(PointSet2D.of([(1, 1), (1, 1), (2, 1)])) == 2


def test_empty_point_set_is_rejected():
    with pytest.raises(ValueError):
        vanishing_ideal([])


def test_ideal_membership():
    G = vanishing_ideal([(0, 0), (1, 0), (0, 1)])
    x, y = BiPoly.x(), BiPoly.y()
    assert ideal_membership(x * y * (x + 3), G)
    assert ideal_membership(x**3 - x, G)
    assert not ideal_membership(x, G)
