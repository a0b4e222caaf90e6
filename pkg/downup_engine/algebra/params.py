"""
Parameters (phi, r, s, gamma) of a generalized down-up algebra.

L(phi, r, s, gamma) is generated by d, u, h subject to

    hu - ruh = gamma*u,   dh - rhd = gamma*d,   du - sud = phi(h),

and is noetherian exactly when rs != 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from math import lcm
from typing import Any

from downup_engine.poly.univariate import UniPoly, as_scalar
from downup_engine.scalars import CyclotomicScalar
from downup_engine.utils.config_loader import get_nested
from downup_engine.utils.errors import ConfigError, NotNoetherian


@dataclass(frozen=True)
class AlgebraParams:
    phi: UniPoly
    r: CyclotomicScalar
    s: CyclotomicScalar
    gamma: CyclotomicScalar
    conductor: int = 1
    # [n, m] with m signed, "trivial", or None
    declared_relation: Any = field(default=None, compare=False)

    def __post_init__(self):
        for name in ("r", "s", "gamma"):
            object.__setattr__(self, name, as_scalar(getattr(self, name)))
        if not isinstance(self.phi, UniPoly):
            raise TypeError(f"phi must be a UniPoly, got {type(self.phi).__name__}")
        if self.r.is_zero() or self.s.is_zero():
            raise NotNoetherian(f"rs must be nonzero (r={self.r}, s={self.s})")
        n = self.conductor
        for value in (self.r, self.s, self.gamma, *self.phi.coeffs.values()):
            n = lcm(n, value.conductor)
        object.__setattr__(self, "conductor", n)

    @classmethod
    def of(cls, phi: Any, r: Any, s: Any, gamma: Any = 0, conductor: int = 1, declared_relation: Any = None):
        """Convenience constructor; phi may be a UniPoly or a coefficient list (low degree first)."""
        if not isinstance(phi, UniPoly):
            phi = UniPoly.from_list(phi)
        return cls(phi, as_scalar(r), as_scalar(s), as_scalar(gamma), conductor, declared_relation)

    def sigma(self, f: UniPoly, times: int = 1) -> UniPoly:
        """f(sigma^times(x)) where sigma(x) = r*x + gamma."""
        if times == 0:
            return f
        if self.r == 1:
            return f.twisted_substitute(1, self.gamma * times)
        rk = self.r**times
        # sigma^k(x) = r^k x + gamma (r^k - 1) / (r - 1)
        return f.twisted_substitute(rk, self.gamma * (rk - 1) / (self.r - 1))

    def with_(self, **changes) -> "AlgebraParams":
        return replace(self, **changes)

    def describe(self) -> dict[str, str]:
        return {
            "phi": self.phi.format("h"),
            "r": str(self.r),
            "s": str(self.s),
            "gamma": str(self.gamma),
        }

    def __str__(self):
        d = self.describe()
        return f"L(phi={d['phi']}, r={d['r']}, s={d['s']}, gamma={d['gamma']})"


def _scalar_from_config(value: Any, name: str) -> CyclotomicScalar:
    from downup_engine.expr.parser import parse_scalar

    if isinstance(value, (int, float)) and not isinstance(value, bool):
        if isinstance(value, float) and not value.is_integer():
            raise ConfigError(f"algebra.{name}: write non-integers as fractions, got {value}")
        return CyclotomicScalar.from_int(int(value))
    if isinstance(value, str):
        return parse_scalar(value)
    raise ConfigError(f"algebra.{name}: expected a scalar literal, got {value!r}")


def algebra_params_from_config(config: dict) -> AlgebraParams:
    """Build AlgebraParams from the ``algebra`` section of a loaded config."""
    from downup_engine.expr.parser import parse_polynomial

    section = get_nested(config, "algebra", default={})
    if not isinstance(section, dict):
        raise ConfigError("algebra section must be a mapping")

    conductor = get_nested(config, "algebra", "conductor", default=1)
    if not isinstance(conductor, int) or conductor < 1:
        raise ConfigError(f"algebra.conductor must be a positive integer, got {conductor!r}")

    scalars = {}
    for name, default in (("r", 1), ("s", 1), ("gamma", 0)):
        scalars[name] = _scalar_from_config(section.get(name, default), name)

    raw_phi = section.get("phi", 0)
    if isinstance(raw_phi, list):
        phi = UniPoly.from_list(_scalar_from_config(v, "phi") for v in raw_phi)
    elif isinstance(raw_phi, (int, str)):
        phi = parse_polynomial(str(raw_phi), "h")
    else:
        raise ConfigError(f"algebra.phi: expected an expression or coefficient list, got {raw_phi!r}")

    relation = section.get("declared_relation")
    if relation is not None and relation != "trivial":
        if not (isinstance(relation, list) and len(relation) == 2 and all(isinstance(v, int) for v in relation)):
            raise ConfigError(f"algebra.declared_relation must be null, 'trivial' or [n, m], got {relation!r}")
        relation = tuple(relation)

    return AlgebraParams(phi, scalars["r"], scalars["s"], scalars["gamma"], conductor, relation)
