"""
Sparse polynomials in two commuting variables.

Exponent pairs are (i, j) for x^i y^j. The bidegree order lets the second
variable dominate: (i, j) > (i', j') iff j > j', or j == j' and i > i'.
"""

from __future__ import annotations

from typing import Any, Mapping

from downup_engine.poly.univariate import UniPoly, as_scalar, format_terms, power_text
from downup_engine.scalars import CyclotomicScalar

Scalar = CyclotomicScalar
Monomial = tuple[int, int]


def bidegree_key(monomial: Monomial) -> tuple[int, int]:
    i, j = monomial
    return (j, i)


def lex_key(monomial: Monomial) -> tuple[int, int]:
    """Lexicographic order with the first variable largest."""
    return monomial


class BiPoly:
    """Immutable map (i, j) -> nonzero scalar."""

    __slots__ = ("_coeffs", "names")

    def __init__(self, coeffs: Mapping[Monomial, Any] | None = None, names: tuple[str, str] = ("x", "y")):
        clean: dict[Monomial, Scalar] = {}
        for (i, j), value in (coeffs or {}).items():
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent in {(i, j)}")
            scalar = as_scalar(value)
            if scalar:
                clean[(i, j)] = scalar
        object.__setattr__(self, "_coeffs", clean)
        object.__setattr__(self, "names", tuple(names))

    def __setattr__(self, name, value):
        raise AttributeError("BiPoly is immutable")

    @classmethod
    def constant(cls, value: Any, names: tuple[str, str] = ("x", "y")) -> "BiPoly":
        return cls({(0, 0): value}, names)

    @classmethod
    def monomial(cls, i: int, j: int, value: Any = 1, names: tuple[str, str] = ("x", "y")) -> "BiPoly":
        return cls({(i, j): value}, names)

    @classmethod
    def x(cls, names: tuple[str, str] = ("x", "y")) -> "BiPoly":
        return cls({(1, 0): 1}, names)

    @classmethod
    def y(cls, names: tuple[str, str] = ("x", "y")) -> "BiPoly":
        return cls({(0, 1): 1}, names)

    @classmethod
    def from_unipoly(cls, f: UniPoly, variable: int = 0, names: tuple[str, str] = ("x", "y")) -> "BiPoly":
        if variable == 0:
            return cls({(e, 0): c for e, c in f.items()}, names)
        return cls({(0, e): c for e, c in f.items()}, names)

    def renamed(self, names: tuple[str, str]) -> "BiPoly":
        return BiPoly(self._coeffs, names)

    @property
    def coeffs(self) -> dict[Monomial, Scalar]:
        return dict(self._coeffs)

    def items(self):
        return sorted(self._coeffs.items(), key=lambda kv: bidegree_key(kv[0]))

    def monomials(self) -> set[Monomial]:
        return set(self._coeffs)

    def coeff(self, i: int, j: int) -> Scalar:
        return self._coeffs.get((i, j), CyclotomicScalar.zero())

    def is_zero(self) -> bool:
        return not self._coeffs

    def bidegree(self) -> Monomial | None:
        if not self._coeffs:
            return None
        return max(self._coeffs, key=bidegree_key)

    def leading_monomial(self, key=lex_key) -> Monomial:
        return max(self._coeffs, key=key)

    def leading_coefficient(self, key=lex_key) -> Scalar:
        return self._coeffs[self.leading_monomial(key)]

    def monic(self, key=lex_key) -> "BiPoly":
        if not self._coeffs:
            return self
        return self.scale(self.leading_coefficient(key).inverse())

    def degree_in(self, variable: int) -> int:
        return max((m[variable] for m in self._coeffs), default=-1)

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def _coerce(self, other) -> "BiPoly | None":
        if isinstance(other, BiPoly):
            return other
        scalar = CyclotomicScalar.coerce(other)
        return None if scalar is None else BiPoly.constant(scalar, self.names)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        result = dict(self._coeffs)
        for m, c in other._coeffs.items():
            result[m] = result[m] + c if m in result else c
        return BiPoly(result, self.names)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly({m: -c for m, c in self._coeffs.items()}, self.names)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, value: Any) -> "BiPoly":
        c = as_scalar(value)
        return BiPoly({m: c * v for m, v in self._coeffs.items()}, self.names)

    def mul_monomial(self, monomial: Monomial, value: Any = 1) -> "BiPoly":
        a, b = monomial
        c = as_scalar(value)
        return BiPoly({(i + a, j + b): c * v for (i, j), v in self._coeffs.items()}, self.names)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        result: dict[Monomial, Scalar] = {}
        for (i1, j1), c1 in self._coeffs.items():
            for (i2, j2), c2 in other._coeffs.items():
                m = (i1 + i2, j1 + j2)
                result[m] = result[m] + c1 * c2 if m in result else c1 * c2
        return BiPoly(result, self.names)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = BiPoly.constant(1, self.names)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._coeffs == other._coeffs

    __hash__ = None

    # ------------------------------------------------------------------
    # Evaluation and substitution
    # ------------------------------------------------------------------

    def __call__(self, x: Any, y: Any) -> Scalar:
        xs, ys = as_scalar(x), as_scalar(y)
        total = CyclotomicScalar.zero()
        for (i, j), c in self._coeffs.items():
            total = total + c * xs**i * ys**j
        return total

    def substitute(self, x_image: "BiPoly", y_image: "BiPoly") -> "BiPoly":
        """g(x_image, y_image); the result carries the images' variable names."""
        names = x_image.names
        x_powers: dict[int, BiPoly] = {}
        y_powers: dict[int, BiPoly] = {}
        total = BiPoly(names=names)
        for (i, j), c in self._coeffs.items():
            if i not in x_powers:
                x_powers[i] = x_image**i
            if j not in y_powers:
                y_powers[j] = y_image**j
            total = total + (x_powers[i] * y_powers[j]).scale(c)
        return BiPoly(total._coeffs, names)

    def format(self, names: tuple[str, str] | None = None) -> str:
        xname, yname = names or self.names
        ordered = sorted(self._coeffs.items(), key=lambda kv: bidegree_key(kv[0]), reverse=True)
        terms = []
        for (i, j), c in ordered:
            parts = [p for p in (power_text(xname, i), power_text(yname, j)) if p]
            terms.append((c, "*".join(parts)))
        return format_terms(terms)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"BiPoly({self.format()})"


def bidegree(g: BiPoly) -> Monomial | None:
    """Maximal exponent pair under the order where the second variable dominates."""
    return g.bidegree()
