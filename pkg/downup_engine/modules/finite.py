"""
Finite-dimensional simple modules and their annihilators.

Matrices act on column vectors: column j is the image of v_j. Three
families are built from a weight orbit:

    F_hw(lambda, n)   u v_i = v_(i+1), d v_i = beta_i v_(i-1), h v_i = lambda_i v_i
    F_c(zeta, rho)    u v_i = rho v_(i+1), d v_i = rho^-1 beta_i v_(i-1)
    Fbar_c(zeta, rho) u v_i = rho^-1 beta_(i+1) v_(i+1), d v_i = rho v_(i-1)

with cyclic indices for the last two. In every case ud acts on v_i by beta_i.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from downup_engine.algebra.graded import HW, GradedForm, from_graded_form
from downup_engine.algebra.params import AlgebraParams
from downup_engine.algebra.pbw import PBWAlgebra, PBWElement
from downup_engine.modules.weights import Weight, WeightOrbit, orbit
from downup_engine.poly import linalg
from downup_engine.poly.groebner import PointSet2D, vanishing_ideal
from downup_engine.poly.univariate import as_scalar
from downup_engine.scalars import CyclotomicScalar
from downup_engine.utils.errors import HypothesisFailed
from downup_engine.utils.logging_setup import get_logger

logger = get_logger("downup_engine.modules.finite")

Matrix = linalg.Matrix


@dataclass(frozen=True)
class FiniteModulePresentation:
    params: AlgebraParams
    kind: str  # HighestWeight | Cyclic | CyclicBar
    mat_u: Matrix
    mat_d: Matrix
    mat_h: Matrix
    weights: tuple[Weight, ...]
    rho: CyclotomicScalar | None = None
    eta: CyclotomicScalar | None = None
    extra: dict[str, Any] = field(default_factory=dict, compare=False)

    @property
    def dim(self) -> int:
        return len(self.mat_h)

    def phi_of_h(self) -> Matrix:
        result = linalg.zeros(self.dim, self.dim)
        power = linalg.identity(self.dim)
        for e in range(self.params.phi.degree + 1):
            result = linalg.matadd(result, linalg.matscale(self.params.phi.coeff(e), power))
            power = linalg.matmul(power, self.mat_h)
        return result

    def relation_checks(self) -> dict[str, bool]:
        p = self.params
        u, d, h = self.mat_u, self.mat_d, self.mat_h
        mm, sub, sc = linalg.matmul, linalg.matsub, linalg.matscale
        return {
            "hu-ruh=gamma*u": linalg.is_zero_matrix(sub(sub(mm(h, u), sc(p.r, mm(u, h))), sc(p.gamma, u))),
            "dh-rhd=gamma*d": linalg.is_zero_matrix(sub(sub(mm(d, h), sc(p.r, mm(h, d))), sc(p.gamma, d))),
            "du-sud=phi(h)": linalg.is_zero_matrix(sub(sub(mm(d, u), sc(p.s, mm(u, d))), self.phi_of_h())),
        }

    def describe(self) -> dict[str, Any]:
        out = {
            "kind": self.kind,
            "dim": self.dim,
            "weights": [[str(w.lam), str(w.beta)] for w in self.weights],
            "u": linalg.format_matrix(self.mat_u),
            "d": linalg.format_matrix(self.mat_d),
            "h": linalg.format_matrix(self.mat_h),
            "relations": self.relation_checks(),
        }
        if self.rho is not None:
            out["rho"] = str(self.rho)
            out["eta"] = str(self.eta)
        out.update(self.extra)
        return out


def _checked(module: FiniteModulePresentation) -> FiniteModulePresentation:
    failed = [name for name, ok in module.relation_checks().items() if not ok]
    if failed:
        raise ArithmeticError(f"{module.kind} module violates {', '.join(failed)}")
    logger.debug(f"built {module.kind} module of dimension {module.dim}")
    return module


def _distinct(weights: list[Weight]) -> bool:
    return all(weights[a] != weights[b] for a in range(len(weights)) for b in range(a))


def build_Fhw(params: AlgebraParams, lam: Any, n: int, max_dim: int = 64) -> FiniteModulePresentation:
    """The (n+1)-dimensional highest weight module from the orbit of (lambda, 0)."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n + 1 > max_dim:
        raise HypothesisFailed("dim <= max_dim", f"dimension {n + 1} exceeds max_dim {max_dim}")
    orb = orbit(params, Weight(as_scalar(lam), CyclotomicScalar.zero()), (0, n + 1))
    weights = [orb.weight(i) for i in range(n + 2)]
    if weights[n + 1].beta:
        raise HypothesisFailed("beta_(n+1) = 0", f"beta_{n + 1} = {weights[n + 1].beta} is not zero")
    for i in range(1, n + 1):
        if weights[i].beta.is_zero():
            raise HypothesisFailed("beta_i != 0 for 1 <= i <= n", f"beta_{i} = 0")
    if not _distinct(weights[: n + 1]):
        raise HypothesisFailed("weights distinct", "weights lambda_0..lambda_n are not distinct")

    dim = n + 1
    u, d, h = linalg.zeros(dim, dim), linalg.zeros(dim, dim), linalg.zeros(dim, dim)
    for i in range(dim):
        h[i][i] = weights[i].lam
        if i + 1 < dim:
            u[i + 1][i] = CyclotomicScalar.one()
        if i > 0:
            d[i - 1][i] = weights[i].beta
    return _checked(
        FiniteModulePresentation(params, "HighestWeight", u, d, h, tuple(weights[:dim]), extra={"lambda": str(lam), "n": n})
    )


def _cyclic_orbit(params: AlgebraParams, base: Weight, rho: Any, period_search: int) -> tuple[WeightOrbit, int, CyclotomicScalar]:
    rho = as_scalar(rho)
    if rho.is_zero():
        raise HypothesisFailed("rho != 0", "rho must be nonzero")
    orb = orbit(params, base, (0, period_search), period_search)
    m = orb.period
    if m is None:
        raise HypothesisFailed("orbit periodic", f"no period up to {period_search}")
    for i in range(m):
        if orb.weight(i).is_zero():
            raise HypothesisFailed("(lambda_i, beta_i) != (0, 0)", f"weight {i} is (0, 0)")
    return orb, m, rho


def _eta(orb: WeightOrbit, m: int, rho: CyclotomicScalar) -> CyclotomicScalar:
    product = CyclotomicScalar.one()
    for i in range(m):
        product = product * orb.beta(i)
    return product * rho ** (-m)


def build_Fc(params: AlgebraParams, base: Weight, rho: Any, period_search: int = 64) -> FiniteModulePresentation:
    orb, m, rho = _cyclic_orbit(params, base, rho, period_search)
    u, d, h = linalg.zeros(m, m), linalg.zeros(m, m), linalg.zeros(m, m)
    inv = rho.inverse()
    for i in range(m):
        h[i][i] = orb.lam(i)
        u[(i + 1) % m][i] = u[(i + 1) % m][i] + rho
        d[(i - 1) % m][i] = d[(i - 1) % m][i] + inv * orb.beta(i)
    weights = tuple(orb.weight(i) for i in range(m))
    return _checked(FiniteModulePresentation(params, "Cyclic", u, d, h, weights, rho, _eta(orb, m, rho)))


def build_Fc_bar(params: AlgebraParams, base: Weight, rho: Any, period_search: int = 64) -> FiniteModulePresentation:
    orb, m, rho = _cyclic_orbit(params, base, rho, period_search)
    u, d, h = linalg.zeros(m, m), linalg.zeros(m, m), linalg.zeros(m, m)
    inv = rho.inverse()
    for i in range(m):
        h[i][i] = orb.lam(i)
        u[(i + 1) % m][i] = u[(i + 1) % m][i] + inv * orb.beta(i + 1)
        d[(i - 1) % m][i] = d[(i - 1) % m][i] + rho
    weights = tuple(orb.weight(i) for i in range(m))
    return _checked(FiniteModulePresentation(params, "CyclicBar", u, d, h, weights, rho, _eta(orb, m, rho)))


def weight_ideal(module: FiniteModulePresentation, algebra: PBWAlgebra) -> list[PBWElement]:
    """Generators of the (h, ud)-polynomials vanishing on the module's weights."""
    points = PointSet2D.of((w.lam, w.beta) for w in module.weights)
    return [from_graded_form(algebra, GradedForm(0, g.renamed(HW))) for g in vanishing_ideal(points, HW)]


def annihilator_generators(module: FiniteModulePresentation, algebra: PBWAlgebra | None = None) -> list[PBWElement]:
    """
    u^(n+1), d^(n+1) and the weight ideal for F_hw; u^m - rho^m, d^m - eta
    and the weight ideal for F_c (u and d exchanged for Fbar_c).
    """
    algebra = algebra or PBWAlgebra(module.params)
    u, d = algebra.u(), algebra.d()
    dim = module.dim
    if module.kind == "HighestWeight":
        head = [u**dim, d**dim]
    elif module.kind == "Cyclic":
        head = [u**dim - module.rho**dim, d**dim - module.eta]
    else:
        head = [d**dim - module.rho**dim, u**dim - module.eta]
    return head + weight_ideal(module, algebra)


def evaluate(module: FiniteModulePresentation, x: PBWElement) -> Matrix:
    """The matrix of x, each monomial u^i h^j d^k read as a product of matrices."""
    dim = module.dim
    powers: dict[tuple[str, int], Matrix] = {}

    def power(name: str, e: int) -> Matrix:
        if (name, e) not in powers:
            base = {"u": module.mat_u, "h": module.mat_h, "d": module.mat_d}[name]
            powers[(name, e)] = linalg.matpow(base, e)
        return powers[(name, e)]

    total = linalg.zeros(dim, dim)
    for (i, j, k), c in x.terms():
        term = linalg.matmul(linalg.matmul(power("u", i), power("h", j)), power("d", k))
        total = linalg.matadd(total, linalg.matscale(c, term))
    return total


def verify_annihilates(module: FiniteModulePresentation, x: PBWElement) -> bool:
    return linalg.is_zero_matrix(evaluate(module, x))
