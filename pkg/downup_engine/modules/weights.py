"""
Weights and their orbits under Phi(lambda, beta) = (r*lambda + gamma, s*beta + phi(lambda)).

A weight (lambda, beta) records the eigenvalues of h and ud on a weight
vector. Orbits are computed lazily in both directions; Phi is invertible
because r and s are nonzero.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from downup_engine.algebra.params import AlgebraParams
from downup_engine.poly.univariate import as_scalar
from downup_engine.scalars import CyclotomicScalar, order, power_index
from downup_engine.utils.logging_setup import get_logger

logger = get_logger("downup_engine.modules.weights")


@dataclass(frozen=True)
class Weight:
    lam: CyclotomicScalar
    beta: CyclotomicScalar

    @classmethod
    def of(cls, lam: Any, beta: Any) -> "Weight":
        return cls(as_scalar(lam), as_scalar(beta))

    def is_zero(self) -> bool:
        return self.lam.is_zero() and self.beta.is_zero()

    def __str__(self):
        return f"({self.lam}, {self.beta})"


def phi_map(params: AlgebraParams, w: Weight) -> Weight:
    return Weight(params.r * w.lam + params.gamma, params.s * w.beta + params.phi(w.lam))


def phi_inverse(params: AlgebraParams, w: Weight) -> Weight:
    lam = (w.lam - params.gamma) / params.r
    return Weight(lam, (w.beta - params.phi(lam)) / params.s)


class WeightOrbit:
    """Weights (lambda_i, beta_i) = Phi^i(base) for all integers i, computed on demand."""

    def __init__(self, params: AlgebraParams, base: Weight, window: tuple[int, int] = (-20, 20), period_search: int = 64):
        self.params = params
        self.base = base
        self.window = window
        self.period_search = period_search
        self._forward = [base]
        self._backward = [base]
        self._period: int | None = None
        self._period_known = False

    def weight(self, i: int) -> Weight:
        if i >= 0:
            while len(self._forward) <= i:
                self._forward.append(phi_map(self.params, self._forward[-1]))
            return self._forward[i]
        while len(self._backward) <= -i:
            self._backward.append(phi_inverse(self.params, self._backward[-1]))
        return self._backward[-i]

    def lam(self, i: int) -> CyclotomicScalar:
        return self.weight(i).lam

    def beta(self, i: int) -> CyclotomicScalar:
        return self.weight(i).beta

    @property
    def period(self) -> int | None:
        """Least m <= period_search with Phi^m(base) = base."""
        if not self._period_known:
            self._period = next(
                (m for m in range(1, self.period_search + 1) if self.weight(m) == self.base),
                None,
            )
            self._period_known = True
            if self._period is not None:
                logger.debug(f"orbit of {self.base} has period {self._period}")
        return self._period

    def weights(self) -> list[tuple[int, Weight]]:
        a, b = self.window
        return [(i, self.weight(i)) for i in range(a, b + 1)]

    def describe(self) -> dict[str, Any]:
        return {
            "base": [str(self.base.lam), str(self.base.beta)],
            "window": list(self.window),
            "period": self.period,
            "weights": [[i, str(w.lam), str(w.beta)] for i, w in self.weights()],
        }


def orbit(params: AlgebraParams, base: Weight, window: tuple[int, int] = (-20, 20), period_search: int = 64) -> WeightOrbit:
    a, b = window
    if a > b:
        raise ValueError(f"empty window {window}")
    return WeightOrbit(params, base, window, period_search)


@dataclass(frozen=True)
class SimplicityCertificate:
    """Outcome of the simplicity criterion for W(lambda, beta): all weights distinct and every beta_i nonzero."""

    kind: str  # SimpleByCriterion | PeriodicCase | Inconclusive
    reason: str
    period: int | None = None

    def describe(self) -> dict[str, Any]:
        return {"kind": self.kind, "period": self.period, "reason": self.reason}


def _nonvanishing(base: CyclotomicScalar, target: CyclotomicScalar, bound: int) -> tuple[bool | None, str]:
    """Decide whether mu * base^i = target is impossible for all integers i (target != 0, mu folded in)."""
    k, proved = power_index(base, target, bound)
    if k is not None:
        return False, f"beta vanishes at index {k}"
    if not proved:
        return None, f"no vanishing index within |i| <= {bound}, larger ones not excluded"
    return True, "beta_i never vanishes"


def simplicity_certificate(orb: WeightOrbit, bound: int = 64) -> SimplicityCertificate:
    """
    Certify the simplicity criterion where closed forms make it provable.

    Never reports SimpleByCriterion without a proof covering every index:
    periodic orbits are reported as such, and anything outside the closed
    forms is Inconclusive.
    """
    from downup_engine.conformal.solver import ConformalData, solve_conformal

    params = orb.params
    a, b = orb.window
    for i in range(a, b + 1):
        if orb.beta(i).is_zero():
            return SimplicityCertificate("Inconclusive", f"criterion violated: beta_{i} = 0")

    if orb.period is not None:
        return SimplicityCertificate(
            "PeriodicCase", f"Phi^{orb.period} fixes the base weight", orb.period
        )

    r, s, gamma = params.r, params.s, params.gamma
    if gamma and r != 1:
        return SimplicityCertificate("Inconclusive", "no closed form for r != 1 with gamma != 0")
    data = solve_conformal(params)
    if not isinstance(data, ConformalData):
        return SimplicityCertificate("Inconclusive", "no closed form for nonconformal parameters")
    psi = data.psi
    lam = orb.base.lam
    # H acts on v_i by s^i * c
    c = orb.base.beta + psi(lam)

    if gamma:
        distinct = "lambda_i = lambda + i*gamma are distinct"
        if psi.is_zero():
            if c.is_zero():
                return SimplicityCertificate("Inconclusive", "criterion violated: beta_i = 0 for every i")
            return SimplicityCertificate("SimpleByCriterion", f"{distinct}; beta_i = s^i*c with c != 0")
        if psi.is_constant():
            if c.is_zero():
                return SimplicityCertificate("SimpleByCriterion", f"{distinct}; beta_i = -C != 0")
            ok, why = _nonvanishing(s, psi.coeff(0) / c, bound)
            kind = "SimpleByCriterion" if ok else "Inconclusive"
            return SimplicityCertificate(kind, f"{distinct}; {why}")
        return SimplicityCertificate("Inconclusive", "no closed form for beta_i with nonconstant psi")

    # gamma = 0: lambda_i = r^i lambda, beta_i = s^i mu - psi(r^i lambda)
    if not lam.is_zero() and not order(r).is_finite:
        distinct = "lambda_i = r^i*lambda are distinct"
    elif not c.is_zero() and not order(s).is_finite:
        distinct = "H-eigenvalues s^i*mu are distinct"
    else:
        return SimplicityCertificate("Inconclusive", "weights are not provably distinct")

    if psi.is_zero():
        if c.is_zero():
            return SimplicityCertificate("Inconclusive", "criterion violated: beta_i = 0 for every i")
        return SimplicityCertificate("SimpleByCriterion", f"{distinct}; beta_i = s^i*mu with mu != 0")
    if psi.is_monomial():
        j = psi.degree
        const = psi.coeff(j) * lam**j
        if const.is_zero():
            if c.is_zero():
                return SimplicityCertificate("Inconclusive", "criterion violated: beta_i = 0 for every i")
            return SimplicityCertificate("SimpleByCriterion", f"{distinct}; beta_i = s^i*mu with mu != 0")
        if c.is_zero():
            return SimplicityCertificate("SimpleByCriterion", f"{distinct}; beta_i = -C*(r^i*lambda)^j != 0")
        ok, why = _nonvanishing(s / r**j, const / c, bound)
        kind = "SimpleByCriterion" if ok else "Inconclusive"
        return SimplicityCertificate(kind, f"{distinct}; {why}")
    return SimplicityCertificate("Inconclusive", "no closed form for beta_i with this psi")
