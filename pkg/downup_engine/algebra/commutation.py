"""Commutation polynomials f_k with d^k u - s^k u d^k = f_k(h) d^(k-1)."""

from __future__ import annotations

from typing import Any

from downup_engine.algebra.params import AlgebraParams
from downup_engine.algebra.pbw import PBWAlgebra
from downup_engine.poly.univariate import UniPoly, as_scalar


def commutation_fk(params: AlgebraParams, k: int) -> UniPoly:
    """f_1 = phi, f_(k+1)(h) = s^k phi(h) + f_k(r h + gamma)."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    f = params.phi
    for step in range(1, k):
        f = params.phi * (params.s**step) + params.sigma(f)
    return f


def commutation_fk_conformal(params: AlgebraParams, psi: UniPoly, k: int) -> UniPoly:
    """s^k psi(h) - psi(sigma^k h), valid whenever s psi(x) - psi(sigma x) = phi(x)."""
    return psi * (params.s**k) - params.sigma(psi, k)


def commutation_fk_nonconformal(params: AlgebraParams, phi0: UniPoly, c: Any, j: int, k: int) -> UniPoly:
    """
    Closed form when gamma = 0 and phi = phi0 + s*C*h^j with s = r^j:
    sum_{i<k} s^i phi0(r^(k-i-1) h) + k s^k C h^j.
    """
    s, r = params.s, params.r
    total = UniPoly.monomial(j, as_scalar(c) * k * s**k)
    for i in range(k):
        total = total + phi0.twisted_substitute(r ** (k - i - 1), 0) * (s**i)
    return total


def verify_commutation(algebra: PBWAlgebra, k: int, fk: UniPoly | None = None) -> bool:
    """Check d^k u - s^k u d^k = f_k(h) d^(k-1) by normalization."""
    params = algebra.params
    fk = commutation_fk(params, k) if fk is None else fk
    d, u = algebra.d(), algebra.u()
    lhs = d**k * u - (u * d**k).scale(params.s**k)
    return lhs == algebra.block(0, fk, k - 1)
