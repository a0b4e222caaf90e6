"""
Classification of primitive ideals.

classify() picks the regime, computes the invariants a table row is keyed
on and returns the matching row's ideal families with their constraints
on the parameter c.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from downup_engine.algebra.params import AlgebraParams
from downup_engine.algebra.pbw import PBWAlgebra, PBWElement
from downup_engine.classify import tables
from downup_engine.classify.relations import RelationGroup, compute_S
from downup_engine.classify.tables import FamilyTemplate, TableRow, render
from downup_engine.conformal.isomorphisms import gamma_shift
from downup_engine.conformal.solver import ConformalData, solve_conformal
from downup_engine.conformal.split import NonconformalSplit, nonconformal_split
from downup_engine.poly.univariate import UniPoly
from downup_engine.scalars import order
from downup_engine.utils.errors import HypothesisFailed
from downup_engine.utils.logging_setup import get_logger

logger = get_logger("downup_engine.classify.engine")

STANDING_NOTE = (
    "families exclude the annihilators of finite-dimensional simple modules; "
    "those come from the fhw, fc and fcbar modules"
)


@dataclass(frozen=True)
class IdealFamily:
    ideal: str
    generators: tuple[str, ...]
    constraint: str
    excluded_roots: tuple[str, ...]
    row: str

    def instantiate(self, algebra: PBWAlgebra, c: Any = None, psi: UniPoly | None = None) -> list[PBWElement]:
        """Generators as elements of ``algebra`` with the parameter c bound."""
        from downup_engine.expr.parser import element_from_source
        from downup_engine.poly.univariate import as_scalar

        bindings = {}
        if c is not None:
            c = as_scalar(c)
            if self.constraint and c.is_zero():
                raise HypothesisFailed("c != 0", f"{self.ideal} needs a nonzero c")
            bindings["c"] = c
        return [element_from_source(algebra, g, psi=psi, bindings=bindings) for g in self.generators]

    def to_dict(self) -> dict[str, Any]:
        return {
            "ideal": self.ideal,
            "generators": list(self.generators),
            "constraint": self.constraint,
            "excluded_roots": list(self.excluded_roots),
        }


@dataclass
class ClassificationReport:
    regime: str
    row: str
    inputs: dict[str, Any]
    families: list[IdealFamily]
    notes: list[str] = field(default_factory=list)
    params: AlgebraParams | None = None
    psi: UniPoly | None = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "regime": self.regime,
            "row": self.row,
            "inputs": self.inputs,
            "families": [f.to_dict() for f in self.families],
            "notes": list(self.notes),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        lines = [f"regime: {self.regime}", f"row: {self.row}"]
        lines += [f"  {k} = {v}" for k, v in self.inputs.items()]
        if self.families:
            lines.append("primitive ideals:")
            for fam in self.families:
                text = f"  {fam.ideal}"
                if fam.constraint:
                    text += f"  ({fam.constraint})"
                lines.append(text)
        else:
            lines.append("primitive ideals: none beyond finite-dimensional annihilators")
        lines += [f"note: {n}" for n in self.notes]
        return "\n".join(lines)


def _excluded_roots(template: FamilyTemplate, k: int, psi: UniPoly | None, split: NonconformalSplit | None):
    c = UniPoly.x()
    if template.exclusion == "power":
        C = psi.coeff(0)
        return ((c**k - UniPoly.constant(C**k)).format("c"),)
    if template.exclusion == "monomial":
        C = psi.leading_coefficient
        return ((c - UniPoly.constant(C**k)).format("c"),)
    if template.exclusion == "phitilde" and split is not None and not split.phi_tilde.is_constant():
        return (split.phi_tilde.format("c"),)
    return ()


def _families(
    row: TableRow,
    values: dict[str, int],
    power: int = 0,
    psi: UniPoly | None = None,
    split: NonconformalSplit | None = None,
) -> list[IdealFamily]:
    out = []
    for t in row.families:
        out.append(
            IdealFamily(
                ideal=render(t.ideal, **values),
                generators=tuple(render(g, **values) for g in t.generators),
                constraint=render(t.constraint, **values),
                excluded_roots=_excluded_roots(t, power, psi, split),
                row=row.row,
            )
        )
    return out


def _report(row: TableRow, inputs: dict[str, Any], families: list[IdealFamily], notes: list[str], params, psi=None):
    notes = notes + list(row.notes) + [STANDING_NOTE]
    logger.info(f"{params}: regime {row.regime}, row {row.row}")
    return ClassificationReport(row.regime, row.row, inputs, families, notes, params, psi)


def _psi_is_monomial_of_exponent(psi: UniPoly, j: int) -> bool:
    return not psi.is_zero() and psi.is_monomial() and psi.degree == j


def _classify_r1(params: AlgebraParams, inputs: dict[str, Any], notes: list[str]) -> ClassificationReport:
    data = solve_conformal(params)
    assert isinstance(data, ConformalData)
    o_s = order(params.s)
    inputs["psi"] = data.psi.format("h")
    key = ("finite" if o_s.is_finite else "inf", data.psi_class())
    row = tables.R1_GAMMA_ROWS[key]
    n = o_s.value or 0
    return _report(row, inputs, _families(row, {"n": n}, n, data.psi), notes, params, data.psi)


def _classify_conformal(
    params: AlgebraParams, data: ConformalData, inputs: dict[str, Any], notes: list[str], bound: int, declared: Any
) -> ClassificationReport:
    o_r, o_s = order(params.r), order(params.s)
    psi = data.psi
    inputs["psi"] = psi.format("h")
    if o_r.is_finite or o_s.is_finite:
        key = (
            "finite" if o_r.is_finite else "inf",
            "finite" if o_s.is_finite else "inf",
            "any" if o_r.is_finite else data.psi_class(),
        )
        row = tables.CONFORMAL_ROOT_ROWS[key]
        n, m = o_r.value or 0, o_s.value or 0
        return _report(row, inputs, _families(row, {"n": n, "m": m}, m, psi), notes, params, psi)

    S = compute_S(params.r, params.s, bound=bound, declared=declared)
    inputs["S"] = str(S)
    if S.note:
        notes = notes + [f"S(r,s): {S.note}"]
    psi_key = "zero" if psi.is_zero() else "nonzero"
    values = {"n": S.n, "m": S.m, "jm": S.n}
    if S.kind == "Trivial":
        key = ("Trivial", psi_key)
    elif S.kind == "OppositeSign":
        key = ("OppositeSign", psi_key)
    elif S.kind == "SameSign" and S.m > 0 and S.n % S.m == 0:
        j = S.n // S.m
        if psi.is_zero():
            key = ("Divisible", "zero")
        elif _psi_is_monomial_of_exponent(psi, j):
            key = ("Divisible", "monomial")
        else:
            key = ("Divisible", "other")
    elif S.kind == "SameSign":
        key = ("SameSign", psi_key)
    else:
        raise HypothesisFailed("S cyclic", f"unexpected relation group {S}")
    row = tables.CONFORMAL_GENERIC_ROWS[key]
    return _report(row, inputs, _families(row, values, S.m, psi), notes, params, psi)


def _classify_nonconformal(params: AlgebraParams, inputs: dict[str, Any], notes: list[str]) -> ClassificationReport:
    split = nonconformal_split(params)
    inputs["j"] = split.j
    inputs["phi0"] = split.phi0.format("h")
    inputs["phitilde"] = split.phi_tilde.format("h")
    if split.n is None:
        row = tables.NONCONFORMAL_ROWS[("inf", "any")]
        return _report(row, inputs, _families(row, {}), notes, params)
    if split.j > 0:
        key = ("finite", "j-positive")
    else:
        key = ("finite", "j0-zero" if split.C.is_zero() else "j0-nonzero")
    row = tables.NONCONFORMAL_ROWS[key]
    return _report(row, inputs, _families(row, {"n": split.n}, split=split), notes, params)


def classify(params: AlgebraParams, bound: int = 64, declared: Any = None) -> ClassificationReport:
    """
    Primitive ideals of L(phi, r, s, gamma) that are not annihilators of
    finite-dimensional simple modules.

    r != 1 with gamma != 0 is first moved to gamma = 0. Raises
    UndecidableAtBound when S(r, s) cannot be decided within ``bound``.
    """
    notes: list[str] = []
    if params.gamma and params.r != 1:
        shifted = gamma_shift(params)
        notes.append(f"classified after the isomorphism {params} -> {shifted} (h -> h + gamma/(r-1))")
        params = shifted
    if declared is None:
        declared = params.declared_relation

    inputs: dict[str, Any] = dict(params.describe())
    inputs["order_r"] = str(order(params.r))
    inputs["order_s"] = str(order(params.s))

    if params.gamma:
        return _classify_r1(params, inputs, notes)
    data = solve_conformal(params)
    if isinstance(data, ConformalData):
        return _classify_conformal(params, data, inputs, notes, bound, declared)
    return _classify_nonconformal(params, inputs, notes)
