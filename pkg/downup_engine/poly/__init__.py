"""Commutative polynomial layer: one and two variables, Groebner bases, functional equations."""

from downup_engine.poly.bivariate import BiPoly, bidegree, bidegree_key, lex_key
from downup_engine.poly.univariate import UniPoly, as_scalar, twisted_substitute

__all__ = [
    "UniPoly",
    "BiPoly",
    "as_scalar",
    "bidegree",
    "bidegree_key",
    "lex_key",
    "twisted_substitute",
]
