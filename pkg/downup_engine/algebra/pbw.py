"""
PBW normal forms in a generalized down-up algebra.

Elements are stored in blocks: (a, e) -> f means the summand u^a f(h) d^e.
With sigma(x) = r*x + gamma the algebra satisfies

    f(h) u^i = u^i f(sigma^i h)
    d^k f(h) = f(sigma^k h) d^k
    d u^i    = s^i u^i d + u^(i-1) g_i(h),  g_i = sum_{t<i} s^t phi(sigma^(i-1-t) h)

and d^c u^i is expanded recursively from the last identity. Products of
blocks only need those expansions, which are memoised per (c, i).
"""

from __future__ import annotations

from typing import Any, Iterable, Sequence

from downup_engine.algebra.params import AlgebraParams
from downup_engine.poly.univariate import UniPoly, as_scalar, format_terms, power_text
from downup_engine.scalars import CyclotomicScalar
from downup_engine.utils.logging_setup import get_logger

logger = get_logger("downup_engine.algebra.pbw")

Block = tuple[int, int]
Blocks = dict[Block, UniPoly]
Term = tuple[int, int, int]

ATOMS = ("u", "d", "h")


def _add_block(target: Blocks, key: Block, f: UniPoly):
    if f.is_zero():
        return
    total = target[key] + f if key in target else f
    if total.is_zero():
        target.pop(key, None)
    else:
        target[key] = total


class PBWAlgebra:
    """The algebra L(phi, r, s, gamma) with its multiplication in PBW form."""

    def __init__(self, params: AlgebraParams, cache_enabled: bool = True):
        self.params = params
        self.cache_enabled = cache_enabled
        self._swap_cache: dict[tuple[int, int], Blocks] = {}
        self._g_cache: dict[int, UniPoly] = {}

    # ------------------------------------------------------------------
    # Element constructors
    # ------------------------------------------------------------------

    def zero(self) -> "PBWElement":
        return PBWElement(self, {})

    def one(self) -> "PBWElement":
        return self.scalar(1)

    def scalar(self, value: Any) -> "PBWElement":
        return PBWElement(self, {(0, 0): UniPoly.constant(value)})

    def u(self) -> "PBWElement":
        return self.monomial(1, 0, 0)

    def d(self) -> "PBWElement":
        return self.monomial(0, 0, 1)

    def h(self) -> "PBWElement":
        return self.monomial(0, 1, 0)

    def monomial(self, i: int, j: int, k: int, value: Any = 1) -> "PBWElement":
        return PBWElement(self, {(i, k): UniPoly.monomial(j, value)})

    def poly_h(self, f: UniPoly) -> "PBWElement":
        return PBWElement(self, {(0, 0): f})

    def block(self, a: int, f: UniPoly, e: int) -> "PBWElement":
        """u^a f(h) d^e."""
        return PBWElement(self, {(a, e): f})

    def from_terms(self, terms: dict[Term, Any]) -> "PBWElement":
        blocks: Blocks = {}
        for (i, j, k), c in terms.items():
            _add_block(blocks, (i, k), UniPoly.monomial(j, c))
        return PBWElement(self, blocks)

    def atom(self, name: str) -> "PBWElement":
        if name == "u":
            return self.u()
        if name == "d":
            return self.d()
        if name == "h":
            return self.h()
        raise ValueError(f"unknown atom {name!r}")

    # ------------------------------------------------------------------
    # Swap identities
    # ------------------------------------------------------------------

    def sigma(self, f: UniPoly, times: int = 1) -> UniPoly:
        return self.params.sigma(f, times)

    def g_poly(self, i: int) -> UniPoly:
        """g_i with d u^i = s^i u^i d + u^(i-1) g_i(h)."""
        if i in self._g_cache:
            return self._g_cache[i]
        p = self.params
        total = UniPoly()
        for t in range(i):
            total = total + self.sigma(p.phi, i - 1 - t) * (p.s**t)
        self._g_cache[i] = total
        return total

    def d_power_u_power(self, c: int, i: int) -> Blocks:
        """Blocks of d^c u^i."""
        if c == 0 or i == 0:
            return {(i, c): UniPoly.constant(1)}
        key = (c, i)
        if self.cache_enabled and key in self._swap_cache:
            return self._swap_cache[key]

        result: Blocks = {}
        si = self.params.s**i
        for (a, e), f in self.d_power_u_power(c - 1, i).items():
            _add_block(result, (a, e + 1), f * si)
        g = self.g_poly(i)
        if not g.is_zero():
            for (a, e), f in self.d_power_u_power(c - 1, i - 1).items():
                _add_block(result, (a, e), f * self.sigma(g, e))

        if self.cache_enabled:
            self._swap_cache[key] = result
            logger.debug(f"cached d^{c} u^{i}: {len(result)} blocks")
        return result

    def multiply_blocks(self, left: Blocks, right: Blocks) -> Blocks:
        # (u^a f d^c)(u^i g d^k) = sum u^(a+a') f(sigma^a' h) p(h) g(sigma^e' h) d^(e'+k)
        result: Blocks = {}
        for (a, c), f in left.items():
            for (i, k), g in right.items():
                for (a2, e2), p in self.d_power_u_power(c, i).items():
                    poly = self.sigma(f, a2) * p * self.sigma(g, e2)
                    _add_block(result, (a + a2, e2 + k), poly)
        return result

    # ------------------------------------------------------------------
    # Public operations
    # ------------------------------------------------------------------

    def multiply(self, x: "PBWElement", y: "PBWElement") -> "PBWElement":
        return PBWElement(self, self.multiply_blocks(x.blocks, y.blocks))

    def normalize(self, word: Iterable[Any]) -> "PBWElement":
        """Standard-basis form of a product of atoms ('u', 'd', 'h') and scalars."""
        result = self.one()
        for item in word:
            factor = self.atom(item) if isinstance(item, str) else self.scalar(as_scalar(item))
            result = self.multiply(result, factor)
        return result

    def rewrite_word(self, word: Sequence[Any]) -> "PBWElement":
        """
        Normal form by literal application of

            h u -> r u h + gamma u
            d h -> r h d + gamma d
            d u -> s u d + phi(h)

        to the leftmost out-of-order pair until every word reads u* h* d*.
        """
        p = self.params
        coefficient = CyclotomicScalar.one()
        letters = []
        for item in word:
            if isinstance(item, str):
                if item not in ATOMS:
                    raise ValueError(f"unknown atom {item!r}")
                letters.append(item)
            else:
                coefficient = coefficient * as_scalar(item)

        pending: dict[tuple[str, ...], CyclotomicScalar] = {tuple(letters): coefficient}
        normal: dict[tuple[str, ...], CyclotomicScalar] = {}
        rank = {"u": 0, "h": 1, "d": 2}
        phi_words = [(("h",) * e, c) for e, c in p.phi.items()]

        while pending:
            w, c = pending.popitem()
            if not c:
                continue
            pos = next((t for t in range(len(w) - 1) if rank[w[t]] > rank[w[t + 1]]), None)
            if pos is None:
                normal[w] = normal.get(w, CyclotomicScalar.zero()) + c
                continue
            head, pair, tail = w[:pos], w[pos : pos + 2], w[pos + 2 :]
            if pair == ("h", "u"):
                replacements = [(("u", "h"), p.r), (("u",), p.gamma)]
            elif pair == ("d", "h"):
                replacements = [(("h", "d"), p.r), (("d",), p.gamma)]
            else:
                replacements = [(("u", "d"), p.s)] + phi_words
            for middle, factor in replacements:
                if factor:
                    key = head + middle + tail
                    pending[key] = pending.get(key, CyclotomicScalar.zero()) + c * factor

        terms: dict[Term, CyclotomicScalar] = {}
        for w, c in normal.items():
            if c:
                key = (w.count("u"), w.count("h"), w.count("d"))
                terms[key] = terms.get(key, CyclotomicScalar.zero()) + c
        return self.from_terms(terms)

    def clear_cache(self):
        self._swap_cache.clear()
        self._g_cache.clear()


class PBWElement:
    """Immutable element of a PBWAlgebra, kept in standard-basis form."""

    __slots__ = ("algebra", "_blocks")

    def __init__(self, algebra: PBWAlgebra, blocks: Blocks):
        clean = {key: f for key, f in blocks.items() if not f.is_zero()}
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "_blocks", clean)

    def __setattr__(self, name, value):
        raise AttributeError("PBWElement is immutable")

    @property
    def blocks(self) -> Blocks:
        return dict(self._blocks)

    def terms(self) -> list[tuple[Term, CyclotomicScalar]]:
        """(i, j, k) -> coefficient of u^i h^j d^k, lexicographic in (i, j, k)."""
        out = []
        for (i, k), f in self._blocks.items():
            for j, c in f.items():
                out.append(((i, j, k), c))
        return sorted(out, key=lambda t: t[0])

    def coeff(self, i: int, j: int, k: int) -> CyclotomicScalar:
        f = self._blocks.get((i, k))
        return f.coeff(j) if f is not None else CyclotomicScalar.zero()

    def is_zero(self) -> bool:
        return not self._blocks

    def is_scalar(self) -> bool:
        return all(key == (0, 0) and f.is_constant() for key, f in self._blocks.items())

    def degrees(self) -> set[int]:
        return {a - e for a, e in self._blocks}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def component(self, degree: int) -> "PBWElement":
        return PBWElement(self.algebra, {k: f for k, f in self._blocks.items() if k[0] - k[1] == degree})

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def _coerce(self, other) -> "PBWElement | None":
        if isinstance(other, PBWElement):
            if other.algebra is not self.algebra and other.algebra.params != self.algebra.params:
                raise ValueError("elements belong to different algebras")
            return other
        if isinstance(other, UniPoly):
            return self.algebra.poly_h(other)
        scalar = CyclotomicScalar.coerce(other)
        return None if scalar is None else self.algebra.scalar(scalar)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        result = dict(self._blocks)
        for key, f in other._blocks.items():
            _add_block(result, key, f)
        return PBWElement(self.algebra, result)

    __radd__ = __add__

    def __neg__(self):
        return PBWElement(self.algebra, {k: -f for k, f in self._blocks.items()})

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

    def scale(self, value: Any) -> "PBWElement":
        c = as_scalar(value)
        return PBWElement(self.algebra, {k: f * c for k, f in self._blocks.items()})

    def __mul__(self, other):
        if isinstance(other, PBWElement):
            self._coerce(other)
            return self.algebra.multiply(self, other)
        scalar = CyclotomicScalar.coerce(other)
        if scalar is not None:
            return self.scale(scalar)
        if isinstance(other, UniPoly):
            return self.algebra.multiply(self, self.algebra.poly_h(other))
        return NotImplemented

    def __rmul__(self, other):
        scalar = CyclotomicScalar.coerce(other)
        if scalar is not None:
            return self.scale(scalar)
        if isinstance(other, UniPoly):
            return self.algebra.multiply(self.algebra.poly_h(other), self)
        return NotImplemented

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = self.algebra.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other) if not isinstance(other, PBWElement) else other
        if other is None:
            return NotImplemented
        return self._blocks == other._blocks

    __hash__ = None

    def __bool__(self):
        return not self.is_zero()

    # ------------------------------------------------------------------
    # Printing
    # ------------------------------------------------------------------

    def format(self) -> str:
        pieces = []
        for (i, j, k), c in reversed(self.terms()):
            parts = [p for p in (power_text("u", i), power_text("h", j), power_text("d", k)) if p]
            pieces.append((c, "*".join(parts)))
        return format_terms(pieces)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"PBWElement({self.format()})"


def commutator(x: PBWElement, y: PBWElement) -> PBWElement:
    return x * y - y * x


def homogeneous_decomposition(x: PBWElement) -> tuple[dict[int, PBWElement], int]:
    """Components by degree (#u - #d) and the length, the number of nonzero components."""
    components = {g: x.component(g) for g in sorted(x.degrees())}
    return components, len(components)


def is_central(x: PBWElement) -> bool:
    """x commutes with the generators u, d and h."""
    algebra = x.algebra
    return all(commutator(x, gen).is_zero() for gen in (algebra.u(), algebra.d(), algebra.h()))
