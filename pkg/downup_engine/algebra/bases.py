"""
Alternative monomial orderings and their change of basis to u^i h^j d^k.

Monomials are filtered by weighted degree: deg h = 1 and
deg u = deg d = max(1, ceil(deg phi / 2)). The rewriting rules never raise
this degree, so every ordering spans the same finite-dimensional piece.
"""

from __future__ import annotations

from math import ceil

from downup_engine.algebra.params import AlgebraParams
from downup_engine.algebra.pbw import PBWAlgebra, PBWElement
from downup_engine.poly import linalg

STANDARD_ORDER = "uhd"
ALTERNATIVE_ORDERS = ("udh", "dhu", "duh", "hud", "hdu")


def generator_weight(params: AlgebraParams) -> int:
    return max(1, ceil(params.phi.degree / 2))


def bounded_triples(params: AlgebraParams, bound: int) -> list[tuple[int, int, int]]:
    """Exponent triples (i, j, k) of weighted degree at most ``bound``."""
    e = generator_weight(params)
    triples = []
    for i in range(bound // e + 1):
        for k in range((bound - e * i) // e + 1):
            for j in range(bound - e * (i + k) + 1):
                triples.append((i, j, k))
    return sorted(triples)


def ordered_monomial(algebra: PBWAlgebra, order: str, i: int, j: int, k: int) -> PBWElement:
    """The product of u^i, h^j, d^k taken in the letter order given by ``order``."""
    exponents = {"u": i, "h": j, "d": k}
    result = algebra.one()
    for letter in order:
        result = result * algebra.atom(letter) ** exponents[letter]
    return result


def change_of_basis_matrix(algebra: PBWAlgebra, order: str, bound: int):
    """Columns: standard coordinates of the ``order`` monomials, rows: standard monomials."""
    triples = bounded_triples(algebra.params, bound)
    index = {t: n for n, t in enumerate(triples)}
    matrix = linalg.zeros(len(triples), len(triples))
    for col, (i, j, k) in enumerate(triples):
        for term, c in ordered_monomial(algebra, order, i, j, k).terms():
            if term not in index:
                raise ArithmeticError(f"{order} monomial {(i, j, k)} left the weight filtration at {term}")
            matrix[index[term]][col] = c
    return matrix, triples


def check_bases(algebra: PBWAlgebra, bound: int = 5) -> dict[str, bool]:
    """Invertibility of the change of basis for every alternative ordering."""
    return {
        order: linalg.is_invertible(change_of_basis_matrix(algebra, order, bound)[0])
        for order in ALTERNATIVE_ORDERS
    }
