"""
Exact arithmetic in cyclotomic fields Q(zeta_N).

A scalar is a conductor N plus rational coordinates on the power basis
1, zeta_N, ..., zeta_N^(phi(N)-1), always reduced modulo the N-th cyclotomic
polynomial. Mixed conductors are lifted to their lcm before any operation,
so equality stays decidable and nothing is ever approximated.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from numbers import Rational
from typing import Iterable

import sympy

from downup_engine.utils.errors import DivisionByZero, ZeroInput
from downup_engine.utils.logging_setup import get_logger

logger = get_logger("downup_engine.scalars")

_X = sympy.Symbol("x")


@lru_cache(maxsize=None)
def cyclotomic_modulus(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, lowest degree first."""
    poly = sympy.Poly(sympy.cyclotomic_poly(n, _X), _X)
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


@lru_cache(maxsize=None)
def _mobius(n: int) -> int:
    exponents = sympy.factorint(n).values()
    if any(e > 1 for e in exponents):
        return 0
    return -1 if len(exponents) % 2 else 1


@lru_cache(maxsize=None)
def _trace_weights(n: int) -> tuple[Fraction, ...]:
    # Tr(zeta_n^k) / [Q(zeta_n):Q] for each basis power k
    weights = []
    for k in range(int(sympy.totient(n))):
        m = n // gcd(n, k)
        weights.append(Fraction(_mobius(m), int(sympy.totient(m))))
    return tuple(weights)


def _reduce(coeffs: list[Fraction], n: int) -> tuple[Fraction, ...]:
    modulus = cyclotomic_modulus(n)
    deg = len(modulus) - 1
    work = list(coeffs) + [Fraction(0)] * max(0, deg - len(coeffs))
    for top in range(len(work) - 1, deg - 1, -1):
        lead = work[top]
        if lead:
            base = top - deg
            for t in range(deg):
                work[base + t] -= lead * modulus[t]
            work[top] = Fraction(0)
    return tuple(work[:deg])


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, sympy.Rational):
        return Fraction(int(value.p), int(value.q))
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


class CyclotomicScalar:
    """Immutable element of Q(zeta_N)."""

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs: Iterable = (0,)):
        if conductor < 1:
            raise ValueError(f"conductor must be positive, got {conductor}")
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(
            self, "coeffs", _reduce([_as_fraction(c) for c in coeffs], conductor)
        )

    def __setattr__(self, name, value):
        raise AttributeError("CyclotomicScalar is immutable")

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def from_value(cls, value, conductor: int = 1) -> "CyclotomicScalar":
        if isinstance(value, CyclotomicScalar):
            return value.lift(lcm(conductor, value.conductor))
        return cls(conductor, [_as_fraction(value)])

    @classmethod
    def from_int(cls, value: int, conductor: int = 1) -> "CyclotomicScalar":
        return cls(conductor, [value])

    @classmethod
    def from_fraction(cls, value: Fraction, conductor: int = 1) -> "CyclotomicScalar":
        return cls(conductor, [value])

    @classmethod
    def zero(cls, conductor: int = 1) -> "CyclotomicScalar":
        return cls(conductor, [0])

    @classmethod
    def one(cls, conductor: int = 1) -> "CyclotomicScalar":
        return cls(conductor, [1])

    @classmethod
    def zeta(cls, conductor: int, power: int = 1) -> "CyclotomicScalar":
        """zeta_N^power for any integer power."""
        power %= conductor
        coeffs = [0] * (power + 1)
        coeffs[power] = 1
        return cls(conductor, coeffs)

    @staticmethod
    def coerce(value) -> "CyclotomicScalar | None":
        if isinstance(value, CyclotomicScalar):
            return value
        try:
            return CyclotomicScalar(1, [_as_fraction(value)])
        except TypeError:
            return None

    # ------------------------------------------------------------------
    # Queries
    # ------------------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def lift(self, conductor: int) -> "CyclotomicScalar":
        """Re-express in Q(zeta_M) for a multiple M of the current conductor."""
        if conductor % self.conductor:
            raise ValueError(
                f"cannot lift conductor {self.conductor} to non-multiple {conductor}"
            )
        if conductor == self.conductor:
            return self
        step = conductor // self.conductor
        spread = [Fraction(0)] * (step * (len(self.coeffs) - 1) + 1)
        for k, c in enumerate(self.coeffs):
            spread[k * step] = c
        return CyclotomicScalar(conductor, spread)

    def _common(self, other: "CyclotomicScalar"):
        if self.conductor == other.conductor:
            return self, other
        n = lcm(self.conductor, other.conductor)
        return self.lift(n), other.lift(n)

    # ------------------------------------------------------------------
    # Field operations
    # ------------------------------------------------------------------

    def __add__(self, other):
        other = CyclotomicScalar.coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._common(other)
        return CyclotomicScalar(a.conductor, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicScalar(self.conductor, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = CyclotomicScalar.coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = CyclotomicScalar.coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = CyclotomicScalar.coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._common(other)
        if len(a.coeffs) == 1:
            return CyclotomicScalar(a.conductor, [a.coeffs[0] * b.coeffs[0]])
        product = [Fraction(0)] * (2 * len(a.coeffs) - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        product[i + j] += x * y
        return CyclotomicScalar(a.conductor, product)

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicScalar":
        if self.is_zero():
            raise DivisionByZero("division by zero in cyclotomic field")
        if self.is_rational():
            return CyclotomicScalar(self.conductor, [1 / self.coeffs[0]])
        domain_coeffs = [sympy.Rational(c.numerator, c.denominator) for c in reversed(self.coeffs)]
        modulus = [sympy.Integer(c) for c in reversed(cyclotomic_modulus(self.conductor))]
        inv = sympy.Poly(domain_coeffs, _X, domain=sympy.QQ).invert(
            sympy.Poly(modulus, _X, domain=sympy.QQ)
        )
        return CyclotomicScalar(
            self.conductor, [_as_fraction(sympy.Rational(c)) for c in reversed(inv.all_coeffs())]
        )

    def __truediv__(self, other):
        other = CyclotomicScalar.coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = CyclotomicScalar.coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self
        if exponent < 0:
            base = self.inverse()
            exponent = -exponent
        result = CyclotomicScalar.one(self.conductor)
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # ------------------------------------------------------------------
    # Equality, hashing, printing
    # ------------------------------------------------------------------

    def __eq__(self, other):
        other = CyclotomicScalar.coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._common(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        # normalized trace is invariant under lifting
        weights = _trace_weights(self.conductor)
        return hash(sum((c * w for c, w in zip(self.coeffs, weights)), Fraction(0)))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"CyclotomicScalar({self.conductor}, {[str(c) for c in self.coeffs]})"

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                body = str(abs(c))
            else:
                root = f"zeta({self.conductor})" if k == 1 else f"zeta({self.conductor})^{k}"
                body = root if abs(c) == 1 else f"{abs(c)}*{root}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        if not parts:
            return "0"
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def is_compound(self) -> bool:
        """True when printing needs parentheses inside a product."""
        return sum(1 for c in self.coeffs if c) > 1


@dataclass(frozen=True)
class OrderValue:
    """Multiplicative order; ``value`` is None for infinite order."""

    value: int | None = None

    @property
    def is_finite(self) -> bool:
        return self.value is not None

    def __str__(self):
        return "inf" if self.value is None else str(self.value)


INFINITE = OrderValue(None)


def field_conductor(conductor: int) -> int:
    """Even conductor describing the same field (Q(zeta_n) = Q(zeta_2n) for odd n)."""
    return conductor if conductor % 2 == 0 else 2 * conductor


def order(z: CyclotomicScalar) -> OrderValue:
    """Multiplicative order of z; only divisors of lcm(2, N) can occur."""
    if z.is_zero():
        raise ZeroInput("order of zero is undefined")
    if z.is_rational():
        value = z.to_fraction()
        if value == 1:
            return OrderValue(1)
        if value == -1:
            return OrderValue(2)
        return INFINITE
    for d in sympy.divisors(lcm(2, z.conductor)):
        if z**d == 1:
            return OrderValue(int(d))
    return INFINITE


def is_root_of_unity(z: CyclotomicScalar) -> bool:
    return order(z).is_finite


def roots_of_unity(conductor: int) -> list[CyclotomicScalar]:
    """All roots of unity of Q(zeta_conductor)."""
    n = field_conductor(conductor)
    return [CyclotomicScalar.zeta(n, k) for k in range(n)]


def power_index(
    base: CyclotomicScalar, target: CyclotomicScalar, bound: int = 64
) -> tuple[int | None, bool]:
    """
    Find k with base**k == target.

    Returns (k, proved). ``proved`` is False only when the bounded search ran
    out without an answer, in which case k is None and a solution beyond
    the bound is not excluded.
    """
    if base.is_zero() or target.is_zero():
        raise ZeroInput("power_index needs nonzero scalars")
    n = order(base)
    if n.is_finite:
        for k in range(n.value):
            if base**k == target:
                return k, True
        return None, True
    if base.is_rational() and target.is_rational():
        a, t = abs(base.to_fraction()), abs(target.to_fraction())
        step = 1 if (a > 1) == (t >= 1) else -1
        k, value = 0, Fraction(1)
        grow = a if step == 1 else 1 / a
        # |base|^k moves monotonically towards |target|
        while (value < t) if grow > 1 else (value > t):
            value *= grow
            k += step
        if value == t and base**k == target:
            return k, True
        return None, True
    for k in range(-bound, bound + 1):
        if base**k == target:
            return k, True
    return None, False


def _gauss_sum(p: int) -> CyclotomicScalar:
    # square root of (-1)^((p-1)/2) p inside Q(zeta_p)
    from sympy.ntheory import legendre_symbol

    coeffs = [0] * p
    for a in range(1, p):
        coeffs[a] = legendre_symbol(a, p)
    return CyclotomicScalar(p, coeffs)


def _sqrt_squarefree(m: int, conductor: int) -> CyclotomicScalar | None:
    field = field_conductor(conductor)
    root = CyclotomicScalar.one()
    needed = 1
    remainder = m
    for p in sorted(sympy.factorint(abs(m))):
        if p == 2:
            continue
        star = p if p % 4 == 1 else -p
        root = root * _gauss_sum(p)
        needed *= p
        remainder //= star
    if remainder == -1:
        root, needed = root * CyclotomicScalar.zeta(4), needed * 4
    elif remainder == 2:
        root = root * (CyclotomicScalar.zeta(8) + CyclotomicScalar.zeta(8, 7))
        needed *= 8
    elif remainder == -2:
        root = root * (CyclotomicScalar.zeta(8) + CyclotomicScalar.zeta(8, 3))
        needed *= 8
    if field % needed:
        return None
    return root.lift(lcm(field, root.conductor))


def rational_square_root(q: Fraction, conductor: int) -> CyclotomicScalar | None:
    """Square root of a rational inside Q(zeta_conductor), or None."""
    if q == 0:
        return CyclotomicScalar.zero(conductor)
    value = q.numerator * q.denominator
    outside, squarefree = 1, -1 if value < 0 else 1
    for p, e in sympy.factorint(abs(value)).items():
        outside *= p ** (e // 2)
        if e % 2:
            squarefree *= p
    base = _sqrt_squarefree(squarefree, conductor)
    if base is None:
        return None
    return base * Fraction(outside, q.denominator)


def square_root(z: CyclotomicScalar) -> CyclotomicScalar | None:
    """
    An element y of the ambient field with y*y == z, or None.

    Searches decompositions z = q * w with q rational and w a root of unity;
    roots outside that shape are not found.
    """
    if z.is_zero():
        return z
    roots = roots_of_unity(z.conductor)
    for w in roots:
        q = z / w
        if not q.is_rational():
            continue
        half = next((y for y in roots if y * y == w), None)
        if half is None:
            continue
        rq = rational_square_root(q.to_fraction(), z.conductor)
        if rq is not None:
            root = half * rq
            logger.debug(f"square root of {z} found as ({half}) * ({rq})")
            return root
    return None
