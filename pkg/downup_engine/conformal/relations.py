"""Identities satisfied by H = ud + psi(h): commutation with u and d, central elements, products."""

from __future__ import annotations

from math import lcm

from downup_engine.algebra.graded import HH, to_hH_coordinates
from downup_engine.algebra.params import AlgebraParams
from downup_engine.algebra.pbw import PBWAlgebra, PBWElement, is_central
from downup_engine.conformal.solver import ConformalData, solve_conformal
from downup_engine.conformal.split import NonconformalSplit
from downup_engine.poly.bivariate import BiPoly
from downup_engine.poly.univariate import UniPoly
from downup_engine.scalars import order
from downup_engine.utils.errors import HypothesisFailed


def h_element(algebra: PBWAlgebra, psi: UniPoly) -> PBWElement:
    return algebra.u() * algebra.d() + algebra.poly_h(psi)


def check_H_relations(
    data: ConformalData | NonconformalSplit, algebra: PBWAlgebra | None = None
) -> dict[str, PBWElement]:
    """
    Residuals of Hu = s u (H + T) and dH = s (H + T) d.

    T is zero in the conformal case and h^j phitilde(h^n) for a split. Both
    residuals are zero when the data is correct.
    """
    params = data.params
    algebra = algebra or PBWAlgebra(params)
    if isinstance(data, ConformalData):
        psi, twist = data.psi, UniPoly()
    else:
        psi, twist = data.psi0, data.twist()
    H = h_element(algebra, psi)
    shifted = H + algebra.poly_h(twist)
    u, d, s = algebra.u(), algebra.d(), params.s
    return {
        "Hu": H * u - (u * shifted).scale(s),
        "dH": d * H - (shifted * d).scale(s),
    }


def check_H_power_relation(split: NonconformalSplit, k: int, algebra: PBWAlgebra | None = None) -> PBWElement:
    """Residual of H u^k = s^k u^k (H + k T)."""
    algebra = algebra or PBWAlgebra(split.params)
    H = h_element(algebra, split.psi0)
    uk = algebra.u() ** k
    rhs = (uk * (H + algebra.poly_h(split.twist() * k))).scale(split.params.s**k)
    return H * uk - rhs


def known_central_elements(
    params: AlgebraParams, algebra: PBWAlgebra | None = None
) -> list[tuple[str, PBWElement]]:
    """
    Central elements that follow from the orders of r and s:
    h^n (gamma = 0, o(r) = n), H^m (conformal, o(s) = m) and u^N, d^N
    (gamma = 0, conformal, N = lcm(o(r), o(s))).
    """
    algebra = algebra or PBWAlgebra(params)
    n, m = order(params.r), order(params.s)
    gamma_zero = params.gamma.is_zero()
    data = None
    if gamma_zero or params.r == 1:
        result = solve_conformal(params, algebra)
        data = result if isinstance(result, ConformalData) else None

    found: list[tuple[str, PBWElement]] = []
    if gamma_zero and n.is_finite:
        found.append((f"h^{n.value}", algebra.h() ** n.value))
    if data is not None and m.is_finite:
        found.append((f"H^{m.value}", data.H**m.value))
    if gamma_zero and data is not None and n.is_finite and m.is_finite:
        big_n = lcm(n.value, m.value)
        found.append((f"u^{big_n}", algebra.u() ** big_n))
        found.append((f"d^{big_n}", algebra.d() ** big_n))
    for label, element in found:
        if not is_central(element):
            raise ArithmeticError(f"{label} failed the centrality check")
    return found


def product_identity_r1(data: ConformalData, k: int, degree_bound: int = 12) -> tuple[BiPoly, BiPoly]:
    """
    For r = 1, gamma != 0 and constant psi = C: u^k d^k and
    (-1)^k prod_{i<k} (C - s^(-i) H), both in (h, H) coordinates.
    """
    params = data.params
    if params.r != 1 or not params.gamma or not data.psi.is_constant():
        raise HypothesisFailed("r = 1, gamma != 0 and psi constant")
    algebra = data.H.algebra
    c = data.psi.coeff(0)
    lhs = to_hH_coordinates(algebra.u() ** k * algebra.d() ** k, data.psi, degree_bound)
    big_h = BiPoly.y(HH)
    rhs = BiPoly.constant((-1) ** k, HH)
    for i in range(k):
        rhs = rhs * (BiPoly.constant(c, HH) - big_h.scale(params.s ** (-i)))
    return lhs, rhs


def product_identity_gamma0(data: ConformalData, k: int, degree_bound: int = 12) -> tuple[BiPoly, BiPoly]:
    """
    For gamma = 0 and psi = C h^j: d^k u^k and
    prod_{i=1..k} s^i [H - (r^j/s)^i C h^j], both in (h, H) coordinates.
    """
    params, psi = data.params, data.psi
    if params.gamma or len(psi.coeffs) > 1:
        raise HypothesisFailed("gamma = 0 and psi a single monomial C h^j")
    j = max(psi.degree, 0)
    c = psi.coeff(j)
    algebra = data.H.algebra
    lhs = to_hH_coordinates(algebra.d() ** k * algebra.u() ** k, psi, degree_bound)
    theta = params.r**j / params.s
    rhs = BiPoly.constant(1, HH)
    for i in range(1, k + 1):
        factor = BiPoly.y(HH) - BiPoly.monomial(j, 0, theta**i * c, HH)
        rhs = rhs * factor.scale(params.s**i)
    return lhs, rhs
