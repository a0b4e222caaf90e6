"""
Lexicographic Groebner bases in two variables and vanishing ideals of points.

Buchberger's algorithm with the coprime-leading-monomial criterion, then
minimalization and interreduction to the reduced monic basis. The first
variable is the larger one in the lex order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable

from downup_engine.poly.bivariate import BiPoly, Monomial, lex_key
from downup_engine.poly.univariate import as_scalar
from downup_engine.scalars import CyclotomicScalar
from downup_engine.utils.logging_setup import get_logger

logger = get_logger("downup_engine.poly.groebner")


@dataclass(frozen=True)
class PointSet2D:
    """Pairwise distinct points of the affine plane."""

    points: tuple[tuple[CyclotomicScalar, CyclotomicScalar], ...]

    def __post_init__(self):
        seen: list[tuple[CyclotomicScalar, CyclotomicScalar]] = []
        for p in self.points:
            if p in seen:
                raise ValueError(f"point {tuple(map(str, p))} listed twice")
            seen.append(p)

    @classmethod
    def of(cls, pairs: Iterable[tuple[Any, Any]]) -> "PointSet2D":
        unique: list[tuple[CyclotomicScalar, CyclotomicScalar]] = []
        for a, b in pairs:
            point = (as_scalar(a), as_scalar(b))
            if point not in unique:
                unique.append(point)
        return cls(tuple(unique))

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)


def _lm(f: BiPoly) -> Monomial:
    return f.leading_monomial(lex_key)


def _divides(a: Monomial, b: Monomial) -> bool:
    return a[0] <= b[0] and a[1] <= b[1]


def _lcm(a: Monomial, b: Monomial) -> Monomial:
    return (max(a[0], b[0]), max(a[1], b[1]))


def spoly(f: BiPoly, g: BiPoly) -> BiPoly:
    """Return the s-polynomial of monic polynomials f and g."""
    lmf, lmg = _lm(f), _lm(g)
    lcm = _lcm(lmf, lmg)
    s1 = f.mul_monomial((lcm[0] - lmf[0], lcm[1] - lmf[1]))
    s2 = g.mul_monomial((lcm[0] - lmg[0], lcm[1] - lmg[1]))
    return s1 - s2


def reduce(f: BiPoly, G: list[BiPoly]) -> BiPoly:
    """Return the remainder when f is divided by the polynomials G."""
    p = f
    remainder = BiPoly(names=f.names)
    while not p.is_zero():
        m = _lm(p)
        c = p.coeff(*m)
        for g in G:
            lmg = _lm(g)
            if _divides(lmg, m):
                p = p - g.mul_monomial((m[0] - lmg[0], m[1] - lmg[1]), c / g.coeff(*lmg))
                break
        else:
            term = BiPoly.monomial(m[0], m[1], c, f.names)
            remainder = remainder + term
            p = p - term
    return remainder


def _update(G: list[BiPoly], P: set[tuple[int, int]], f: BiPoly):
    lmf = _lm(f)
    new_pairs = set()
    for i, g in enumerate(G):
        lmg = _lm(g)
        # coprime leading monomials reduce to zero
        if _lcm(lmg, lmf) != (lmg[0] + lmf[0], lmg[1] + lmf[1]):
            new_pairs.add((i, len(G)))
    return G + [f], P | new_pairs


def minimalize(G: list[BiPoly]) -> list[BiPoly]:
    """Return a minimal Groebner basis from an arbitrary Groebner basis G."""
    Gmin: list[BiPoly] = []
    for f in sorted(G, key=lambda h: lex_key(_lm(h))):
        if all(not _divides(_lm(g), _lm(f)) for g in Gmin):
            Gmin.append(f)
    return Gmin


def interreduce(G: list[BiPoly]) -> list[BiPoly]:
    """Return the reduced Groebner basis from a minimal Groebner basis G."""
    Gred = []
    for i in range(len(G)):
        g = reduce(G[i], G[:i] + G[i + 1:])
        Gred.append(g.monic())
    return Gred


def groebner_basis(F: Iterable[BiPoly]) -> list[BiPoly]:
    """Reduced lex Groebner basis of the ideal generated by F, ascending by leading monomial."""
    G: list[BiPoly] = []
    P: set[tuple[int, int]] = set()
    for f in F:
        if not f.is_zero():
            G, P = _update(G, P, f.monic())
    if not G:
        return []

    processed = 0
    while P:
        i, j = min(P, key=lambda p: (lex_key(_lcm(_lm(G[p[0]]), _lm(G[p[1]]))), p))
        P.remove((i, j))
        processed += 1
        r = reduce(spoly(G[i], G[j]), G)
        if not r.is_zero():
            G, P = _update(G, P, r.monic())

    logger.debug(f"Buchberger finished: {processed} pairs, {len(G)} polynomials before reduction")
    return sorted(interreduce(minimalize(G)), key=lambda g: lex_key(_lm(g)))


def ideal_membership(f: BiPoly, G: list[BiPoly]) -> bool:
    """Membership by reduction against a Groebner basis G."""
    return reduce(f, G).is_zero()


def vanishing_ideal(points: PointSet2D | Iterable[tuple[Any, Any]], names: tuple[str, str] = ("x", "y")) -> list[BiPoly]:
    """
    Reduced lex Groebner basis of the polynomials vanishing on ``points``.

    The starting generators are the product of (x - a) over the distinct
    first coordinates together with, for each first coordinate a, the
    interpolation factor prod_{a' != a} (x - a') times the product of
    (y - b) over the points above a.
    """
    pts = points if isinstance(points, PointSet2D) else PointSet2D.of(points)
    if not len(pts):
        raise ValueError("vanishing_ideal needs at least one point")

    x, y = BiPoly.x(names), BiPoly.y(names)
    xs: list[CyclotomicScalar] = []
    for a, _ in pts:
        if a not in xs:
            xs.append(a)

    generators = []
    full = BiPoly.constant(1, names)
    for a in xs:
        full = full * (x - a)
    generators.append(full)
    for a in xs:
        others = BiPoly.constant(1, names)
        for other in xs:
            if other != a:
                others = others * (x - other)
        fibre = BiPoly.constant(1, names)
        for a2, b in pts:
            if a2 == a:
                fibre = fibre * (y - b)
        generators.append(others * fibre)

    basis = groebner_basis(generators)
    for g in basis:
        for a, b in pts:
            if g(a, b):
                raise ArithmeticError(f"generator {g} does not vanish at ({a}, {b})")
    return basis
