"""Conformality: psi and H, gamma elimination and the nonconformal split."""

from downup_engine.conformal.isomorphisms import gamma_shift, standard_form, verify_isomorphism
from downup_engine.conformal.solver import ConformalData, NotConformal, solve_conformal
from downup_engine.conformal.split import NonconformalSplit, nonconformal_split

__all__ = [
    "ConformalData",
    "NotConformal",
    "NonconformalSplit",
    "gamma_shift",
    "nonconformal_split",
    "solve_conformal",
    "standard_form",
    "verify_isomorphism",
]
