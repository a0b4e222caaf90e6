"""
Infinite-dimensional modules observed on a window of basis vectors.

A WindowModule has rules u(i), d(i), h(i) giving the image of v_i for every
integer i. Relations are checked by applying words letter by letter, never
through normal forms, on the interior of the window.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable

from downup_engine.algebra.params import AlgebraParams
from downup_engine.algebra.pbw import PBWElement
from downup_engine.modules.weights import Weight, WeightOrbit, orbit
from downup_engine.poly.univariate import UniPoly, as_scalar
from downup_engine.scalars import CyclotomicScalar, order, square_root
from downup_engine.utils.errors import HypothesisFailed, NeedsSquareRootOfR
from downup_engine.utils.logging_setup import get_logger

logger = get_logger("downup_engine.modules.window")

Vector = dict[int, CyclotomicScalar]
Rule = Callable[[int], Vector]


def _add(target: Vector, index: int, value: CyclotomicScalar):
    total = target[index] + value if index in target else value
    if total.is_zero():
        target.pop(index, None)
    else:
        target[index] = total


def _combine(*parts: tuple[Any, Vector]) -> Vector:
    out: Vector = {}
    for c, vec in parts:
        c = as_scalar(c)
        if c:
            for i, v in vec.items():
                _add(out, i, c * v)
    return out


@dataclass
class WindowModule:
    params: AlgebraParams
    rules: dict[str, Rule]
    window: tuple[int, int]
    margin: int
    name: str = "window"
    notes: list[str] = field(default_factory=list)

    def apply(self, generator: str, vector: Vector) -> Vector:
        rule = self.rules[generator]
        out: Vector = {}
        for i, c in vector.items():
            for j, v in rule(i).items():
                _add(out, j, c * v)
        return out

    def apply_word(self, word: str, vector: Vector) -> Vector:
        """Apply a word such as 'hud', rightmost letter first."""
        for letter in reversed(word):
            vector = self.apply(letter, vector)
        return vector

    def apply_poly_h(self, f: UniPoly, vector: Vector) -> Vector:
        out: Vector = {}
        power = dict(vector)
        for e in range(f.degree + 1):
            c = f.coeff(e)
            if c:
                for i, v in power.items():
                    _add(out, i, c * v)
            power = self.apply("h", power)
        return out

    def act(self, element: PBWElement, vector: Vector) -> Vector:
        """Action of a PBW element, each monomial u^i h^j d^k applied literally."""
        out: Vector = {}
        for (i, j, k), c in element.terms():
            image = self.apply_word("u" * i + "h" * j + "d" * k, vector)
            for idx, v in image.items():
                _add(out, idx, c * v)
        return out

    @staticmethod
    def basis(i: int) -> Vector:
        return {i: CyclotomicScalar.one()}

    def interior(self) -> range:
        a, b = self.window
        return range(a + self.margin, b - self.margin + 1)

    def relation_residuals(self, phi: UniPoly | None = None) -> dict[str, list[int]]:
        """Interior indices where hu-ruh-gamma*u, dh-rhd-gamma*d or du-sud-phi(h) is nonzero on v_i."""
        p = self.params
        phi = p.phi if phi is None else phi
        failures: dict[str, list[int]] = {"hu-ruh=gamma*u": [], "dh-rhd=gamma*d": [], "du-sud=phi(h)": []}
        for i in self.interior():
            v = self.basis(i)
            checks = {
                "hu-ruh=gamma*u": _combine(
                    (1, self.apply_word("hu", v)), (-p.r, self.apply_word("uh", v)), (-p.gamma, self.apply("u", v))
                ),
                "dh-rhd=gamma*d": _combine(
                    (1, self.apply_word("dh", v)), (-p.r, self.apply_word("hd", v)), (-p.gamma, self.apply("d", v))
                ),
                "du-sud=phi(h)": _combine(
                    (1, self.apply_word("du", v)), (-p.s, self.apply_word("ud", v)), (-1, self.apply_poly_h(phi, v))
                ),
            }
            for name, residual in checks.items():
                if residual:
                    failures[name].append(i)
        return failures

    def relations_hold(self) -> bool:
        return not any(self.relation_residuals().values())

    def describe(self) -> dict[str, Any]:
        a, b = self.window
        sample = {}
        for i in (a, 0, b):
            if a <= i <= b:
                sample[str(i)] = {
                    g: {str(k): str(v) for k, v in sorted(self.apply(g, self.basis(i)).items())} for g in ("u", "d", "h")
                }
        residuals = self.relation_residuals()
        return {
            "name": self.name,
            "window": [a, b],
            "margin": self.margin,
            "relations": {name: not bad for name, bad in residuals.items()},
            "sample": sample,
            "notes": list(self.notes),
        }


def universal_weight_window(
    params: AlgebraParams, base: Weight, window: tuple[int, int] = (-20, 20), orb: WeightOrbit | None = None
) -> WindowModule:
    """
    W(lambda, beta) with h v_i = lambda_i v_i and

        u v_i = v_(i+1) (i >= 0),        u v_i = beta_(i+1) v_(i+1) (i < 0),
        d v_i = beta_i v_(i-1) (i > 0),  d v_i = v_(i-1) (i <= 0).
    """
    orb = orb or orbit(params, base, window)
    one = CyclotomicScalar.one()

    def u_rule(i: int) -> Vector:
        c = one if i >= 0 else orb.beta(i + 1)
        return {i + 1: c} if c else {}

    def d_rule(i: int) -> Vector:
        c = orb.beta(i) if i > 0 else one
        return {i - 1: c} if c else {}

    def h_rule(i: int) -> Vector:
        lam = orb.lam(i)
        return {i: lam} if lam else {}

    return WindowModule(params, {"u": u_rule, "d": d_rule, "h": h_rule}, window, 1, name="W(lambda,beta)")


def conformal_weight_window(
    params: AlgebraParams, lam: Any, mu: Any, window: tuple[int, int] = (-20, 20)
) -> WindowModule:
    """W(lambda, mu - psi(lambda)): H acts on v_i by s^i mu."""
    from downup_engine.conformal.solver import ConformalData, solve_conformal

    data = solve_conformal(params)
    if not isinstance(data, ConformalData):
        raise HypothesisFailed("conformal", str(data))
    lam, mu = as_scalar(lam), as_scalar(mu)
    module = universal_weight_window(params, Weight(lam, mu - data.psi(lam)), window)
    module.name = "W(lambda,mu-psi(lambda))"
    return module


def exotic_module_r1(
    s: Any, gamma: Any, C: Any, n: int, window: tuple[int, int] = (-30, 30), mirror: bool = False
) -> WindowModule:
    """
    The non-weight module for r = 1, gamma != 0, psi = C:
    u v_i = v_(i+1), h v_i = v_(i-n) + i*gamma v_i, d v_i = (s^i - 1) C v_(i-1).
    ``mirror`` exchanges the roles of u and d.
    """
    s, gamma, C = as_scalar(s), as_scalar(gamma), as_scalar(C)
    if n < 1:
        raise HypothesisFailed("n >= 1", f"n must be positive, got {n}")
    if gamma.is_zero():
        raise HypothesisFailed("gamma != 0", "gamma must be nonzero")
    if C and s**n != 1:
        raise HypothesisFailed("C = 0 or s^n = 1", f"s^{n} = {s ** n} with C = {C}")
    params = AlgebraParams(UniPoly.constant((s - 1) * C), CyclotomicScalar.one(), s, gamma)
    one = CyclotomicScalar.one()

    def coefficient(k: int) -> CyclotomicScalar:
        return (s**k - 1) * C

    def drop_zero(vec: Vector) -> Vector:
        return {k: v for k, v in vec.items() if v}

    if not mirror:
        rules = {
            "u": lambda i: {i + 1: one},
            "h": lambda i: _combine((1, {i - n: one}), (i * gamma, {i: one})),
            "d": lambda i: drop_zero({i - 1: coefficient(i)}),
        }
    else:
        rules = {
            "u": lambda i: drop_zero({i + 1: coefficient(i + 1)}),
            "h": lambda i: _combine((1, {i + n: one}), (i * gamma, {i: one})),
            "d": lambda i: {i - 1: one},
        }
    module = WindowModule(params, rules, window, n + 1, name="exotic-r1-mirror" if mirror else "exotic-r1")
    logger.debug(f"{module.name}: s={s}, gamma={gamma}, C={C}, n={n}")
    return module


def exotic_module_conformal(
    r: Any, s: Any, C: Any, j: int, m: int, window: tuple[int, int] = (-30, 30)
) -> WindowModule:
    """
    The non-weight module for gamma = 0, phi = (s - r^j) C x^j, with
    theta = r^j / s of order m and n = j*m:
    u v_i = v_(i+1), d v_i = C s^i (1 - theta^i) v_(i-n-1), h v_i = r^(i+e) v_(i-m)
    where e = m(j-1)/2. A square root of r is needed only when m(j-1) is odd.
    """
    r, s, C = as_scalar(r), as_scalar(s), as_scalar(C)
    if j < 0 or m < 1:
        raise HypothesisFailed("j >= 0 and m >= 1", f"got j={j}, m={m}")
    theta = r**j / s
    if s**m != r ** (j * m):
        raise HypothesisFailed("s^m = r^(jm)", f"s^{m} != r^{j * m}")
    if order(theta).value != m:
        raise HypothesisFailed("o(theta) = m", f"theta = {theta} has order {order(theta)}")
    n = j * m
    twice_e = m * (j - 1)
    half = CyclotomicScalar.one()
    if twice_e % 2:
        root = square_root(r)
        if root is None:
            raise NeedsSquareRootOfR(f"no square root of r = {r} in Q(zeta_{r.conductor}); try doubling the conductor")
        half = root
    # r^e with e possibly a half-integer
    r_e = r ** (twice_e // 2) * half

    params = AlgebraParams(UniPoly.monomial(j, (s - r**j) * C), r, s, CyclotomicScalar.zero())
    one = CyclotomicScalar.one()

    def d_rule(i: int) -> Vector:
        c = C * s**i * (1 - theta**i)
        return {i - n - 1: c} if c else {}

    rules = {
        "u": lambda i: {i + 1: one},
        "h": lambda i: {i - m: r**i * r_e},
        "d": d_rule,
    }
    return WindowModule(params, rules, window, max(n, m) + 1, name="exotic-conformal")
