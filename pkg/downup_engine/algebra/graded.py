"""
Graded coordinates.

A homogeneous element of degree g is u^g f(h, W) for g >= 0 and
f(h, W) d^(-g) for g < 0, where W is the image of ud in the degree-zero
subalgebra, a commutative polynomial ring in h and W.
"""

from __future__ import annotations

from dataclasses import dataclass

from downup_engine.algebra.pbw import PBWAlgebra, PBWElement
from downup_engine.poly.bivariate import BiPoly
from downup_engine.poly.univariate import UniPoly
from downup_engine.utils.errors import DegreeBoundExceeded, NotHomogeneous, SingularChangeOfBasis
from downup_engine.utils.logging_setup import get_logger

logger = get_logger("downup_engine.algebra.graded")

HW = ("h", "W")
HH = ("h", "H")


@dataclass(frozen=True)
class GradedForm:
    degree: int
    payload: BiPoly

    def __str__(self):
        body = self.payload.format(HW)
        if self.degree > 0:
            prefix = "u" if self.degree == 1 else f"u^{self.degree}"
            return f"{prefix}*({body})"
        if self.degree < 0:
            suffix = "d" if self.degree == -1 else f"d^{-self.degree}"
            return f"({body})*{suffix}"
        return body


def _h_power_w_power(algebra: PBWAlgebra, a: int, b: int, w: dict[int, PBWElement]) -> PBWElement:
    if b not in w:
        w[b] = (algebra.u() * algebra.d()) ** b
    return algebra.monomial(0, a, 0) * w[b]


def _place(algebra: PBWAlgebra, degree: int, core: PBWElement) -> PBWElement:
    if degree >= 0:
        return algebra.monomial(degree, 0, 0) * core
    return core * algebra.monomial(0, 0, -degree)


def to_graded_form(x: PBWElement, degree_bound: int = 12) -> GradedForm:
    """
    Express a homogeneous element in (h, W) coordinates.

    The monomial u^g h^a W^b has leading PBW term u^(g+b) h^a d^b (for g >= 0)
    with coefficient r^(ab) s^(b(b-1)/2); elimination runs from the largest
    (d-exponent, h-exponent) downwards.
    """
    if not x.is_homogeneous():
        raise NotHomogeneous(f"element has components in degrees {sorted(x.degrees())}")
    algebra = x.algebra
    degree = next(iter(x.degrees()), 0)
    offset = max(0, -degree)
    w_cache: dict[int, PBWElement] = {}

    payload: dict[tuple[int, int], object] = {}
    remainder = x
    while not remainder.is_zero():
        (i, j, k), c = max(remainder.terms(), key=lambda t: (t[0][2], t[0][1]))
        a, b = j, k - offset
        if a + b > degree_bound:
            raise DegreeBoundExceeded(f"term h^{a} W^{b} is beyond degree bound {degree_bound}")
        basis = _place(algebra, degree, _h_power_w_power(algebra, a, b, w_cache))
        lead = basis.coeff(i, j, k)
        if lead.is_zero():
            raise SingularChangeOfBasis(f"h^{a} W^{b} has no leading term u^{i} h^{j} d^{k}")
        factor = c / lead
        payload[(a, b)] = factor
        remainder = remainder - basis.scale(factor)

    logger.debug(f"graded form in degree {degree}: {len(payload)} monomials")
    return GradedForm(degree, BiPoly(payload, HW))


def from_graded_form(algebra: PBWAlgebra, form: GradedForm) -> PBWElement:
    w = algebra.u() * algebra.d()
    core = algebra.zero()
    for (a, b), c in form.payload.items():
        core = core + (algebra.monomial(0, a, 0) * w**b).scale(c)
    return _place(algebra, form.degree, core)


def to_hH_coordinates(x: PBWElement, psi: UniPoly, degree_bound: int = 12) -> BiPoly:
    """A degree-zero element as a polynomial in h and H = ud + psi(h)."""
    form = to_graded_form(x, degree_bound)
    if form.degree != 0:
        raise NotHomogeneous(f"expected a degree-0 element, got degree {form.degree}")
    h, big_h = BiPoly.x(HH), BiPoly.y(HH)
    return form.payload.substitute(h, big_h - BiPoly.from_unipoly(psi, 0, HH))


def from_hH_coordinates(algebra: PBWAlgebra, g: BiPoly, psi: UniPoly) -> PBWElement:
    """g(h, H) as an algebra element, H = ud + psi(h)."""
    big_h = algebra.u() * algebra.d() + algebra.poly_h(psi)
    total = algebra.zero()
    powers: dict[int, PBWElement] = {}
    for (a, b), c in g.items():
        if b not in powers:
            powers[b] = big_h**b
        total = total + (algebra.monomial(0, a, 0) * powers[b]).scale(c)
    return total
