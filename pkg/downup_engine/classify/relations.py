"""
The relation group S(r, s) = {(i, j) : r^i = s^j} and distinctive polynomials.

When neither r nor s is a root of unity S is cyclic and its generator is
written (n, m) with m >= 0 (r^n = s^m) or (n, -m) with m > 0 (r^n s^m = 1).
When both are roots of unity S has rank two.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Any

import sympy

from downup_engine.poly.bivariate import BiPoly
from downup_engine.poly.univariate import as_scalar
from downup_engine.scalars import CyclotomicScalar, order, power_index
from downup_engine.utils.errors import HypothesisFailed, UndecidableAtBound
from downup_engine.utils.logging_setup import get_logger

logger = get_logger("downup_engine.classify.relations")


@dataclass(frozen=True)
class RelationGroup:
    kind: str  # Trivial | SameSign | OppositeSign | Lattice
    n: int = 0
    m: int = 0
    basis: tuple[tuple[int, int], ...] = ()
    proved: bool = True
    note: str = ""

    @property
    def generator(self) -> tuple[int, int] | None:
        if self.kind == "SameSign":
            return (self.n, self.m)
        if self.kind == "OppositeSign":
            return (self.n, -self.m)
        return None

    def multiple(self, i: int, j: int) -> int | None:
        """k with (i, j) = k * generator, for the cyclic kinds."""
        g = self.generator
        if g is None:
            return 0 if (i, j) == (0, 0) else None
        gi, gj = g
        if gi:
            if i % gi:
                return None
            k = i // gi
        elif gj:
            if j % gj:
                return None
            k = j // gj
        else:
            return None
        return k if (k * gi, k * gj) == (i, j) else None

    def contains(self, i: int, j: int) -> bool:
        if self.kind == "Lattice":
            (a, _), (b, c) = self.basis
            # basis (a, 0), (b, c) with c > 0
            if j % c:
                return False
            return (i - (j // c) * b) % a == 0
        return self.multiple(i, j) is not None

    def coset_equal(self, p: tuple[int, int], q: tuple[int, int]) -> bool:
        return self.contains(p[0] - q[0], p[1] - q[1])

    def __str__(self):
        if self.kind == "Trivial":
            return "trivial"
        if self.kind == "Lattice":
            return "<" + ", ".join(f"({a},{b})" for a, b in self.basis) + ">"
        gi, gj = self.generator
        return f"<({gi},{gj})>"

    def describe(self) -> dict[str, Any]:
        out: dict[str, Any] = {"kind": self.kind, "text": str(self), "proved": self.proved}
        if self.generator is not None:
            out["generator"] = list(self.generator)
        if self.basis:
            out["basis"] = [list(v) for v in self.basis]
        if self.note:
            out["note"] = self.note
        return out


def _cyclic(i: int, j: int, note: str = "", proved: bool = True) -> RelationGroup:
    if i < 0 or (i == 0 and j < 0):
        i, j = -i, -j
    if j >= 0:
        return RelationGroup("SameSign", i, j, proved=proved, note=note)
    return RelationGroup("OppositeSign", i, -j, proved=proved, note=note)


def _prime_exponents(q: Fraction) -> dict[int, int]:
    exps = dict(sympy.factorint(abs(q.numerator)))
    for p, e in sympy.factorint(q.denominator).items():
        exps[p] = exps.get(p, 0) - e
    exps.pop(1, None)
    return {int(p): int(e) for p, e in exps.items() if e}


def _rational_relation(r: CyclotomicScalar, s: CyclotomicScalar) -> RelationGroup:
    a, b = _prime_exponents(r.to_fraction()), _prime_exponents(s.to_fraction())
    p = min(a)
    if not b.get(p):
        return RelationGroup("Trivial")
    g = gcd(a[p], b[p])
    i, j = b[p] // g, a[p] // g
    primes = set(a) | set(b)
    if any(i * a.get(q, 0) != j * b.get(q, 0) for q in primes):
        return RelationGroup("Trivial")
    if i < 0:
        i, j = -i, -j
    if r**i != s**j:
        # magnitudes agree, signs disagree
        i, j = 2 * i, 2 * j
    return _cyclic(i, j)


def _declared(r: CyclotomicScalar, s: CyclotomicScalar, declared: Any) -> RelationGroup:
    if declared == "trivial":
        return RelationGroup("Trivial", proved=False, note="declared trivial")
    n, m = declared
    if n == 0 and m == 0:
        return RelationGroup("Trivial", proved=False, note="declared trivial")
    if r**n != s**m:
        raise HypothesisFailed("declared relation holds", f"r^{n} != s^{m}")
    g = gcd(n, m)
    # reduce to the primitive relation among the divisors of g
    for k in sorted(int(t) for t in sympy.divisors(g)):
        if r ** (n // k) == s ** (m // k):
            best = k
    return _cyclic(n // best, m // best, note="declared relation", proved=True)


def compute_S(r: Any, s: Any, bound: int = 64, declared: Any = None) -> RelationGroup:
    """
    Exact when a root of unity is involved or both scalars are rational;
    otherwise a declared relation is verified, or a bounded search over
    1 <= i <= bound, |j| <= bound is run.
    """
    r, s = as_scalar(r), as_scalar(s)
    if r.is_zero() or s.is_zero():
        raise HypothesisFailed("rs != 0", "r and s must be nonzero")
    o_r, o_s = order(r), order(s)

    if o_r.is_finite and o_s.is_finite:
        j1 = next(j for j in range(1, o_s.value + 1) if power_index(r, s**j)[0] is not None)
        i1 = power_index(r, s**j1)[0]
        return RelationGroup("Lattice", basis=((o_r.value, 0), (i1, j1)))
    if o_r.is_finite:
        return RelationGroup("SameSign", o_r.value, 0)
    if o_s.is_finite:
        return RelationGroup("SameSign", 0, o_s.value)
    if r.is_rational() and s.is_rational():
        return _rational_relation(r, s)
    if declared is not None:
        return _declared(r, s, declared)

    s_powers = {j: s**j for j in range(-bound, bound + 1)}
    for i in range(1, bound + 1):
        ri = r**i
        for j in sorted(s_powers, key=abs):
            if j and s_powers[j] == ri:
                logger.info(f"relation r^{i} = s^{j} found by search")
                return _cyclic(i, j, note=f"found by search up to {bound}")
    raise UndecidableAtBound(bound)


def is_distinctive(exponents, S: RelationGroup) -> bool:
    """r^i s^j pairwise distinct over the exponent pairs (i, j)."""
    pts = sorted(set(exponents))
    for a in range(len(pts)):
        for b in range(a):
            (i, j), (i2, j2) = pts[a], pts[b]
            if S.contains(i - i2, -(j - j2)):
                return False
    return True


def _rewrite_target(S: RelationGroup, first: tuple[int, int], second: tuple[int, int]):
    """
    For a conflicting pair return (source, target, k): the source monomial
    is congruent to c^k times the target modulo I_c.
    """
    (i, j), (i2, j2) = first, second
    k = S.multiple(i - i2, j2 - j)
    if k is None:
        return None
    if k < 0:
        return _rewrite_target(S, second, first)
    if S.kind == "SameSign" and S.m == 0:
        # I_c = <h^n - c>: h^(i'+kn) -> c^k h^i'
        return first, second, k
    if S.kind == "SameSign":
        # I_c = <H^m - c h^n>: h^i' H^(j+km) -> c^k h^(i'+kn) H^j
        return second, first, k
    # I_c = <h^n H^m - c>: h^(i'+kn) H^(j'+km) -> c^k h^i' H^j'
    return first, second, k


def distinctive_reduce(g: BiPoly, S: RelationGroup, c: Any) -> BiPoly:
    """Rewrite g modulo I_c until its monomials are distinctive."""
    if S.kind == "Lattice":
        raise HypothesisFailed("S cyclic", "I_c is not defined when both r and s are roots of unity")
    if S.kind == "Trivial":
        return g
    c = as_scalar(c)
    if c.is_zero():
        raise HypothesisFailed("c != 0", "I_c needs a nonzero constant")

    coeffs = g.coeffs
    while True:
        monos = sorted(coeffs)
        step = None
        for a in range(len(monos)):
            for b in range(a):
                step = _rewrite_target(S, monos[a], monos[b])
                if step is not None:
                    break
            if step is not None:
                break
        if step is None:
            return BiPoly(coeffs, g.names)
        source, target, k = step
        value = coeffs.pop(source) * c**k
        total = coeffs.get(target, CyclotomicScalar.zero()) + value
        if total.is_zero():
            coeffs.pop(target, None)
        else:
            coeffs[target] = total


def ideal_generator(S: RelationGroup, c: Any, names: tuple[str, str] = ("h", "H")) -> BiPoly:
    """The generator of I_c in (h, H)."""
    c = as_scalar(c)
    if S.kind == "SameSign" and S.m == 0:
        return BiPoly({(S.n, 0): 1, (0, 0): -c}, names)
    if S.kind == "SameSign":
        return BiPoly({(0, S.m): 1, (S.n, 0): -c}, names)
    if S.kind == "OppositeSign":
        return BiPoly({(S.n, S.m): 1, (0, 0): -c}, names)
    raise HypothesisFailed("S cyclic and nontrivial", f"no I_c for S = {S}")


def witness_constant(S: RelationGroup, lam: Any, mu: Any) -> CyclotomicScalar:
    """c for which I_c kills the conformal weight module with h-eigenvalue lambda and H-eigenvalue mu at v_0."""
    lam, mu = as_scalar(lam), as_scalar(mu)
    if S.kind == "SameSign" and S.m == 0:
        return lam**S.n
    if S.kind == "SameSign":
        return mu**S.m / lam**S.n
    if S.kind == "OppositeSign":
        return lam**S.n * mu**S.m
    raise HypothesisFailed("S cyclic and nontrivial", f"no I_c for S = {S}")
