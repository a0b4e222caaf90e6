"""
Conformal/nonconformal decomposition of phi when gamma = 0.

If s = r^j with a_j != 0 the algebra is not conformal. Fixing j (reduced
mod n when r has finite order n), phi splits as

    phi(h) = phi0(h) + s * h^j * phitilde(h^n)

where phi0 keeps the monomials h^i with i != j mod n and is conformal. When r
has infinite order the nonconformal part is the single monomial s*C*h^j.
"""

from __future__ import annotations

from dataclasses import dataclass

from downup_engine.algebra.params import AlgebraParams
from downup_engine.conformal.solver import ConformalData, NotConformal, solve_conformal
from downup_engine.poly.univariate import UniPoly
from downup_engine.scalars import CyclotomicScalar, order
from downup_engine.utils.errors import IsConformal, UnsupportedRegime


@dataclass(frozen=True)
class NonconformalSplit:
    params: AlgebraParams
    j: int
    n: int | None  # order of r, None when infinite
    phi0: UniPoly
    phi_tilde: UniPoly
    psi0: UniPoly

    @property
    def phi1(self) -> UniPoly:
        return self.twist() * self.params.s

    @property
    def C(self) -> CyclotomicScalar:
        """phitilde(0); the whole of phitilde when r has infinite order."""
        return self.phi_tilde.coeff(0)

    def twist(self) -> UniPoly:
        """T(h) = h^j * phitilde(h^n), so that Hu = s u (H + T)."""
        inner = self.phi_tilde if self.n is None else self.phi_tilde.compose(UniPoly.monomial(self.n))
        return inner * UniPoly.monomial(self.j)


def nonconformal_split(params: AlgebraParams) -> NonconformalSplit:
    if params.gamma:
        raise UnsupportedRegime("the nonconformal split is defined for gamma = 0")
    result = solve_conformal(params)
    if isinstance(result, ConformalData):
        raise IsConformal(f"{params} is conformal (psi = {result.psi.format('h')})")
    assert isinstance(result, NotConformal) and result.j is not None

    s, phi = params.s, params.phi
    n = order(params.r).value
    j = result.j % n if n else result.j

    phi1: dict[int, CyclotomicScalar] = {}
    tilde: dict[int, CyclotomicScalar] = {}
    for i, a in phi.items():
        if (n and i >= j and (i - j) % n == 0) or (not n and i == j):
            phi1[i] = a
            tilde[(i - j) // n if n else 0] = a / s
    phi0 = phi - UniPoly(phi1)

    conformal_part = solve_conformal(params.with_(phi=phi0))
    if not isinstance(conformal_part, ConformalData):
        raise ArithmeticError(f"conformal part {phi0.format('h')} has no psi")
    return NonconformalSplit(params, j, n, phi0, UniPoly(tilde), conformal_part.psi)
