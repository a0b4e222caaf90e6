"""
The conformal equation s*psi(x) - psi(r*x + gamma) = phi(x).

When it has a polynomial solution psi, the element H = ud + psi(h) satisfies
Hu = suH and dH = sHd. Two regimes are handled: gamma = 0, and r = 1 with
gamma != 0. Anything else must be shifted to gamma = 0 first.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from downup_engine.algebra.params import AlgebraParams
from downup_engine.algebra.pbw import PBWAlgebra, PBWElement
from downup_engine.poly import linalg
from downup_engine.poly.univariate import UniPoly
from downup_engine.utils.errors import UnsupportedRegime
from downup_engine.utils.logging_setup import get_logger

logger = get_logger("downup_engine.conformal.solver")


@dataclass(frozen=True)
class ConformalData:
    params: AlgebraParams
    psi: UniPoly
    H: PBWElement
    kernel_exponents: frozenset[int] = field(default_factory=frozenset)

    def psi_class(self) -> str:
        """'zero', 'constant' or 'nonconstant'."""
        if self.psi.is_zero():
            return "zero"
        return "constant" if self.psi.is_constant() else "nonconstant"


@dataclass(frozen=True)
class NotConformal:
    """No polynomial psi exists; ``j`` is the first exponent with s = r^j and a_j != 0."""

    params: AlgebraParams
    j: int | None

    @property
    def reason(self) -> str:
        if self.j is None:
            return "conformal equation has no polynomial solution"
        return f"s=r^{self.j} and a_{self.j}!=0"

    def __str__(self):
        return f"not conformal: {self.reason}"


def kernel_exponents(params: AlgebraParams) -> frozenset[int]:
    """Exponents j <= deg phi with s = r^j."""
    return frozenset(j for j in range(max(params.phi.degree, 0) + 1) if params.s == params.r**j)


def conformal_operator(params: AlgebraParams, degree: int) -> list[list]:
    """Matrix of psi -> s*psi(x) - psi(r*x + gamma) on polynomials of degree <= ``degree``."""
    columns = []
    for t in range(degree + 1):
        mono = UniPoly.monomial(t)
        image = mono * params.s - mono.twisted_substitute(params.r, params.gamma)
        columns.append([image.coeff(row) for row in range(degree + 1)])
    return [[columns[c][row] for c in range(degree + 1)] for row in range(degree + 1)]


def solve_conformal(params: AlgebraParams, algebra: PBWAlgebra | None = None) -> ConformalData | NotConformal:
    """
    Solve for psi by exact linear algebra.

    The degree window is deg phi, or deg phi + 1 when r = 1 and gamma != 0.
    Free variables of the system (the kernel monomials) are set to zero, so
    psi is canonical.
    """
    r, gamma = params.r, params.gamma
    if r != 1 and gamma:
        raise UnsupportedRegime("conformal analysis needs gamma = 0 or r = 1; apply gamma_shift first")

    phi = params.phi
    degree = max(phi.degree, 0) + (1 if r == 1 and gamma else 0)
    matrix = conformal_operator(params, degree)
    rhs = [phi.coeff(t) for t in range(degree + 1)]
    solution = linalg.solve(matrix, rhs)
    logger.debug(f"conformal solve: degree window {degree}, solvable={solution is not None}")

    if solution is None:
        j = next(
            (t for t in range(phi.degree + 1) if params.s == r**t and phi.coeff(t)),
            None,
        )
        logger.info(f"{params} is not conformal (j={j})")
        return NotConformal(params, j)

    psi = UniPoly(dict(enumerate(solution)))
    algebra = algebra or PBWAlgebra(params)
    H = algebra.u() * algebra.d() + algebra.poly_h(psi)
    return ConformalData(params, psi, H, kernel_exponents(params))


def is_conformal(params: AlgebraParams) -> bool:
    return isinstance(solve_conformal(params), ConformalData)


def conformal_residual(params: AlgebraParams, psi: UniPoly) -> UniPoly:
    """s*psi(x) - psi(r*x + gamma) - phi(x); zero exactly when psi solves the equation."""
    return psi * params.s - psi.twisted_substitute(params.r, params.gamma) - params.phi
