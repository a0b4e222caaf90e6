"""Sparse univariate polynomials over the cyclotomic scalars."""

from __future__ import annotations

from typing import Any, Callable, Iterable, Mapping

from downup_engine.scalars import CyclotomicScalar

Scalar = CyclotomicScalar


def as_scalar(value: Any) -> Scalar:
    scalar = CyclotomicScalar.coerce(value)
    if scalar is None:
        raise TypeError(f"expected an exact scalar, got {type(value).__name__}")
    return scalar


def format_terms(terms: Iterable[tuple[Scalar, str]]) -> str:
    """
    Join (coefficient, monomial text) pairs in the expression grammar.

    An empty monomial text marks a constant term. Compound coefficients are
    parenthesised; single-coordinate coefficients carry their sign outside.
    """
    pieces: list[tuple[str, str]] = []
    for coeff, mono in terms:
        if coeff.is_compound():
            sign, body = "+", f"({coeff})*{mono}" if mono else f"({coeff})"
        else:
            negative = any(c < 0 for c in coeff.coeffs)
            magnitude = -coeff if negative else coeff
            if mono:
                body = mono if magnitude == 1 else f"{magnitude}*{mono}"
            else:
                body = str(magnitude)
            sign = "-" if negative else "+"
        pieces.append((sign, body))
    if not pieces:
        return "0"
    first_sign, first_body = pieces[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in pieces[1:]:
        text += f" {sign} {body}"
    return text


def power_text(var: str, exponent: int) -> str:
    if exponent == 0:
        return ""
    return var if exponent == 1 else f"{var}^{exponent}"


class UniPoly:
    """Immutable map exponent -> nonzero scalar. Degree of 0 is -1."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, Any] | None = None):
        clean: dict[int, Scalar] = {}
        for exponent, value in (coeffs or {}).items():
            if exponent < 0:
                raise ValueError(f"negative exponent {exponent}")
            scalar = as_scalar(value)
            if scalar:
                clean[exponent] = scalar
        object.__setattr__(self, "_coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    @classmethod
    def x(cls) -> "UniPoly":
        return cls({1: 1})

    @classmethod
    def constant(cls, value: Any) -> "UniPoly":
        return cls({0: value})

    @classmethod
    def monomial(cls, exponent: int, value: Any = 1) -> "UniPoly":
        return cls({exponent: value})

    @classmethod
    def from_list(cls, values: Iterable[Any]) -> "UniPoly":
        """Coefficients listed from degree 0 upwards."""
        return cls(dict(enumerate(values)))

    @property
    def coeffs(self) -> dict[int, Scalar]:
        return dict(self._coeffs)

    def items(self):
        return sorted(self._coeffs.items())

    @property
    def degree(self) -> int:
        return max(self._coeffs, default=-1)

    def coeff(self, exponent: int) -> Scalar:
        return self._coeffs.get(exponent, CyclotomicScalar.zero())

    @property
    def leading_coefficient(self) -> Scalar:
        return self.coeff(self.degree)

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_constant(self) -> bool:
        return self.degree <= 0

    def is_monomial(self) -> bool:
        return len(self._coeffs) == 1

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def __add__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        result = dict(self._coeffs)
        for e, c in other._coeffs.items():
            result[e] = result[e] + c if e in result else c
        return UniPoly(result)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        result: dict[int, Scalar] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                result[e] = result[e] + c1 * c2 if e in result else c1 * c2
        return UniPoly(result)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = UniPoly.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self._coeffs == other._coeffs

    __hash__ = None

    # ------------------------------------------------------------------
    # Evaluation and composition
    # ------------------------------------------------------------------

    def __call__(self, value: Any) -> Scalar:
        x = as_scalar(value)
        result = CyclotomicScalar.zero()
        for exponent in range(self.degree, -1, -1):
            result = result * x + self.coeff(exponent)
        return result

    def evaluate(self, value: Any, one: Any, scale: Callable[[Scalar, Any], Any] | None = None):
        """
        Horner evaluation in any ring that has ``+`` and ``*``.

        ``one`` is the ring identity; ``scale(c, a)`` multiplies a ring
        element by a scalar (defaults to ``c * a``).
        """
        scale = scale or (lambda c, a: c * a)
        result = scale(CyclotomicScalar.zero(), one)
        for exponent in range(self.degree, -1, -1):
            result = result * value + scale(self.coeff(exponent), one)
        return result

    def compose(self, inner: "UniPoly") -> "UniPoly":
        result = UniPoly()
        for exponent in range(self.degree, -1, -1):
            result = result * inner + UniPoly.constant(self.coeff(exponent))
        return result

    def twisted_substitute(self, a: Any, b: Any) -> "UniPoly":
        """f(a*x + b)."""
        return self.compose(UniPoly({1: a, 0: b}))

    def format(self, var: str = "x") -> str:
        return format_terms(
            (c, power_text(var, e)) for e, c in sorted(self._coeffs.items(), reverse=True)
        )

    def __str__(self):
        return self.format("x")

    def __repr__(self):
        return f"UniPoly({self.format('x')})"


def _as_poly(value: Any) -> UniPoly | None:
    if isinstance(value, UniPoly):
        return value
    scalar = CyclotomicScalar.coerce(value)
    return None if scalar is None else UniPoly.constant(scalar)


def twisted_substitute(f: UniPoly, a: Any, b: Any) -> UniPoly:
    """Compute f(a*x + b) exactly."""
    return f.twisted_substitute(a, b)
