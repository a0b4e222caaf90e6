"""
Kernels of twisted functional equations on bivariate polynomials.

The operator is

    g(x, y)  ->  g(rho*x + shift, tau*x^j + sigma*y) - mu*g(x, y)

restricted to polynomials with x-degree <= a_max and y-degree <= b_max.
Coefficient matching is a dense exact linear system.
"""

from __future__ import annotations

from typing import Any

from downup_engine.poly import linalg
from downup_engine.poly.bivariate import BiPoly, Monomial, bidegree_key
from downup_engine.poly.univariate import as_scalar
from downup_engine.utils.logging_setup import get_logger

logger = get_logger("downup_engine.poly.functional")


def twisted_image(g: BiPoly, rho: Any, sigma: Any, tau: Any, j: int, shift: Any = 0) -> BiPoly:
    """g(rho*x + shift, tau*x^j + sigma*y)."""
    x, y = BiPoly.x(g.names), BiPoly.y(g.names)
    x_image = x.scale(rho) + as_scalar(shift)
    y_image = BiPoly.monomial(j, 0, tau, g.names) + y.scale(sigma)
    return g.substitute(x_image, y_image)


def functional_equation_kernel(
    rho: Any,
    sigma: Any,
    tau: Any,
    j: int,
    mu: Any,
    bound: tuple[int, int],
    shift: Any = 0,
) -> list[BiPoly]:
    """
    Basis of the polynomials g with g(rho*x + shift, tau*x^j + sigma*y) = mu*g(x, y)
    inside the box x-degree <= bound[0], y-degree <= bound[1].

    Each basis polynomial is scaled so its bidegree-leading coefficient is 1;
    the list is ordered by bidegree.
    """
    a_max, b_max = bound
    if a_max < 0 or b_max < 0:
        raise ValueError(f"bounds must be nonnegative, got {bound}")
    mu = as_scalar(mu)

    columns: list[Monomial] = [(a, b) for b in range(b_max + 1) for a in range(a_max + 1)]
    images = []
    for a, b in columns:
        g = BiPoly.monomial(a, b)
        images.append(twisted_image(g, rho, sigma, tau, j, shift) - g.scale(mu))

    rows = sorted({m for image in images for m in image.monomials()}, key=bidegree_key)
    matrix = [[image.coeff(*m) for image in images] for m in rows]
    vectors = linalg.nullspace(matrix, cols=len(columns))
    logger.debug(f"functional kernel: {len(rows)}x{len(columns)} system, nullity {len(vectors)}")

    basis = []
    for v in vectors:
        g = BiPoly({m: c for m, c in zip(columns, v)})
        basis.append(g.monic(key=bidegree_key))
    return sorted(basis, key=lambda g: bidegree_key(g.bidegree()))


def satisfies_functional_equation(
    g: BiPoly, rho: Any, sigma: Any, tau: Any, j: int, mu: Any, shift: Any = 0
) -> bool:
    return twisted_image(g, rho, sigma, tau, j, shift) == g.scale(mu)
