"""
Isomorphisms between down-up algebras given by affine changes of generators.

Every map here sends the target generators to

    h' = alpha*h + beta,   u' = kappa*u,   d' = d

inside the source algebra, and is checked by normalizing the target
relations on those images.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from downup_engine.algebra.params import AlgebraParams
from downup_engine.algebra.pbw import PBWAlgebra, PBWElement
from downup_engine.poly.univariate import UniPoly, as_scalar
from downup_engine.scalars import CyclotomicScalar
from downup_engine.utils.errors import RequiresRNotOne, ZeroInput
from downup_engine.utils.logging_setup import get_logger

logger = get_logger("downup_engine.conformal.isomorphisms")


@dataclass(frozen=True)
class Isomorphism:
    source: AlgebraParams
    target: AlgebraParams
    alpha: CyclotomicScalar = field(default_factory=CyclotomicScalar.one)
    beta: CyclotomicScalar = field(default_factory=CyclotomicScalar.zero)
    kappa: CyclotomicScalar = field(default_factory=CyclotomicScalar.one)
    steps: tuple[str, ...] = ()

    def images(self, algebra: PBWAlgebra | None = None) -> dict[str, PBWElement]:
        algebra = algebra or PBWAlgebra(self.source)
        return {
            "h": algebra.h().scale(self.alpha) + self.beta,
            "u": algebra.u().scale(self.kappa),
            "d": algebra.d(),
        }

    def then(self, other: "Isomorphism") -> "Isomorphism":
        """Compose with an isomorphism whose source is this target."""
        return Isomorphism(
            self.source,
            other.target,
            other.alpha * self.alpha,
            other.alpha * self.beta + other.beta,
            other.kappa * self.kappa,
            self.steps + other.steps,
        )

    def describe(self) -> dict[str, Any]:
        images = {
            "h": UniPoly({1: self.alpha, 0: self.beta}).format("h"),
            "u": UniPoly({1: self.kappa}).format("u"),
            "d": "d",
        }
        return {"steps": list(self.steps), "images": images, "target": self.target.describe()}


def verify_isomorphism(target: AlgebraParams, images: dict[str, PBWElement]) -> bool:
    """The images of the target generators satisfy the target relations in the source algebra."""
    h, u, d = images["h"], images["u"], images["d"]
    algebra = h.algebra
    phi_h = target.phi.evaluate(h, algebra.one(), lambda c, a: a.scale(c))
    residuals = (
        h * u - (u * h).scale(target.r) - u.scale(target.gamma),
        d * h - (h * d).scale(target.r) - d.scale(target.gamma),
        d * u - (u * d).scale(target.s) - phi_h,
    )
    return all(res.is_zero() for res in residuals)


def _checked(iso: Isomorphism) -> Isomorphism:
    if not verify_isomorphism(iso.target, iso.images()):
        raise ArithmeticError(f"generator map {iso.steps} does not respect the relations")
    return iso


def gamma_shift(params: AlgebraParams) -> AlgebraParams:
    """L(phi, r, s, gamma) with r != 1 is L(phi(x - gamma/(r-1)), r, s, 0)."""
    return gamma_shift_isomorphism(params).target


def gamma_shift_isomorphism(params: AlgebraParams) -> Isomorphism:
    if params.r == 1:
        raise RequiresRNotOne("gamma can only be shifted away when r != 1")
    c = params.gamma / (params.r - 1)
    target = params.with_(phi=params.phi.twisted_substitute(1, -c), gamma=CyclotomicScalar.zero())
    logger.info(f"gamma shift by {c}: {params} -> {target}")
    return _checked(Isomorphism(params, target, beta=c, steps=("gamma_shift",)))


def rescale_h(params: AlgebraParams, c: Any) -> Isomorphism:
    """h' = h/c gives L(phi(c x), r, s, gamma/c)."""
    c = as_scalar(c)
    if c.is_zero():
        raise ZeroInput("rescale_h needs a nonzero factor")
    target = params.with_(phi=params.phi.twisted_substitute(c, 0), gamma=params.gamma / c)
    return _checked(Isomorphism(params, target, alpha=c.inverse(), steps=(f"rescale_h({c})",)))


def rescale_u(params: AlgebraParams, c: Any) -> Isomorphism:
    """u' = c u gives L(c phi, r, s, gamma)."""
    c = as_scalar(c)
    if c.is_zero():
        raise ZeroInput("rescale_u needs a nonzero factor")
    target = params.with_(phi=params.phi * c)
    return _checked(Isomorphism(params, target, kappa=c, steps=(f"rescale_u({c})",)))


def standard_form(params: AlgebraParams) -> Isomorphism:
    """Bring gamma to 0 or 1 and phi to a monic polynomial or zero."""
    iso = Isomorphism(params, params)
    if iso.target.gamma and iso.target.r != 1:
        iso = iso.then(gamma_shift_isomorphism(iso.target))
    if iso.target.gamma and iso.target.gamma != 1:
        iso = iso.then(rescale_h(iso.target, iso.target.gamma))
    phi = iso.target.phi
    if not phi.is_zero() and phi.leading_coefficient != 1:
        iso = iso.then(rescale_u(iso.target, phi.leading_coefficient.inverse()))
    return iso
