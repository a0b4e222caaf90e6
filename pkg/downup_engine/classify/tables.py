"""
Primitive-ideal tables as data.

Each row is keyed by the invariants the engine computes (orders of r and s,
the relation group, the class of psi, the split data) and lists ideal
families. Generator templates are expressions in u, d, h, H and the family
parameter c; ``{n}``, ``{m}`` and ``{jm}`` are filled from the row match.
Families exclude the annihilators of finite-dimensional simple modules.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field


@dataclass(frozen=True)
class FamilyTemplate:
    ideal: str
    generators: tuple[str, ...]
    constraint: str = ""
    # none | power (c^k != C^k) | monomial (c != C^m) | phitilde (phitilde(c) != 0)
    exclusion: str = "none"


@dataclass(frozen=True)
class TableRow:
    row: str
    regime: str
    families: tuple[FamilyTemplate, ...]
    notes: tuple[str, ...] = field(default=())


ZERO = FamilyTemplate("{{0}}", ())  # rendered through str.format
U = FamilyTemplate("<u>", ("u",))
D = FamilyTemplate("<d>", ("d",))
H = FamilyTemplate("<H>", ("H",))
SMALL_H = FamilyTemplate("<h>", ("h",))


def _one(text: str, constraint: str = "c != 0", exclusion: str = "none") -> FamilyTemplate:
    return FamilyTemplate(f"<{text}>", (text,), constraint, exclusion)


H_PRIMITIVE_NOTE = "<H> is listed for psi = 0, although its primitivity is only established for psi not identically zero"
PHITILDE_NOTE = "the constant-term condition p(0) is evaluated as phitilde(0)"

R1_GAMMA_ROWS = {
    ("inf", "zero"): TableRow("r1-gamma/infinite-s/psi-zero", "R1GammaNonzero", (ZERO, U, D)),
    ("inf", "constant"): TableRow("r1-gamma/infinite-s/psi-nonzero", "R1GammaNonzero", (ZERO, H)),
    ("inf", "nonconstant"): TableRow("r1-gamma/infinite-s/psi-nonzero", "R1GammaNonzero", (ZERO, H)),
    ("finite", "zero"): TableRow(
        "r1-gamma/finite-s/psi-zero",
        "R1GammaNonzero",
        (H, U, D, _one("H^{n} - c^{n}")),
        (H_PRIMITIVE_NOTE,),
    ),
    ("finite", "constant"): TableRow(
        "r1-gamma/finite-s/psi-constant",
        "R1GammaNonzero",
        (
            H,
            FamilyTemplate("<u^{n}>", ("u^{n}",)),
            FamilyTemplate("<d^{n}>", ("d^{n}",)),
            _one("H^{n} - c^{n}", "c != 0, c^{n} != C^{n}", "power"),
        ),
    ),
    ("finite", "nonconstant"): TableRow(
        "r1-gamma/finite-s/psi-nonconstant", "R1GammaNonzero", (H, _one("H^{n} - c^{n}"))
    ),
}

CONFORMAL_ROOT_ROWS = {
    ("finite", "finite", "any"): TableRow(
        "conformal-gamma0/roots/both-finite",
        "FiniteDimOnly",
        (),
        ("r and s are both roots of unity: every primitive ideal annihilates a finite-dimensional simple module",),
    ),
    ("finite", "inf", "any"): TableRow(
        "conformal-gamma0/roots/finite-r", "ConformalGamma0", (SMALL_H, _one("h^{n} - c"))
    ),
    ("inf", "finite", "zero"): TableRow(
        "conformal-gamma0/roots/finite-s/psi-zero", "ConformalGamma0", (U, D, _one("H^{m} - c"))
    ),
    ("inf", "finite", "constant"): TableRow(
        "conformal-gamma0/roots/finite-s/psi-constant",
        "ConformalGamma0",
        (
            FamilyTemplate("<u^{m}>", ("u^{m}",)),
            FamilyTemplate("<d^{m}>", ("d^{m}",)),
            H,
            _one("H^{m} - c^{m}", "c != 0, c^{m} != C^{m}", "power"),
        ),
    ),
    ("inf", "finite", "nonconstant"): TableRow(
        "conformal-gamma0/roots/finite-s/psi-nonconstant", "ConformalGamma0", (H, _one("H^{m} - c"))
    ),
}

CONFORMAL_GENERIC_ROWS = {
    ("Trivial", "zero"): TableRow("conformal-gamma0/generic/trivial/psi-zero", "ConformalGamma0", (ZERO, SMALL_H, U, D)),
    ("Trivial", "nonzero"): TableRow("conformal-gamma0/generic/trivial/psi-nonzero", "ConformalGamma0", (ZERO, SMALL_H, H)),
    ("OppositeSign", "zero"): TableRow(
        "conformal-gamma0/generic/opposite/psi-zero", "ConformalGamma0", (SMALL_H, U, D, _one("h^{n}*H^{m} - c"))
    ),
    ("OppositeSign", "nonzero"): TableRow(
        "conformal-gamma0/generic/opposite/psi-nonzero", "ConformalGamma0", (SMALL_H, H, _one("h^{n}*H^{m} - c"))
    ),
    ("Divisible", "monomial"): TableRow(
        "conformal-gamma0/generic/divisible/psi-monomial",
        "ConformalGamma0",
        (
            SMALL_H,
            H,
            FamilyTemplate("<u^{m}>", ("u^{m}",)),
            FamilyTemplate("<d^{m}>", ("d^{m}",)),
            _one("H^{m} - c*h^{jm}", "c != 0, c != C^{m}", "monomial"),
        ),
    ),
    ("Divisible", "zero"): TableRow(
        "conformal-gamma0/generic/divisible/psi-zero", "ConformalGamma0", (SMALL_H, U, D, _one("H^{m} - c*h^{jm}"))
    ),
    ("Divisible", "other"): TableRow(
        "conformal-gamma0/generic/divisible/psi-other", "ConformalGamma0", (SMALL_H, H, _one("H^{m} - c*h^{jm}"))
    ),
    ("SameSign", "zero"): TableRow(
        "conformal-gamma0/generic/same-sign/psi-zero", "ConformalGamma0", (SMALL_H, U, D, _one("H^{m} - c*h^{n}"))
    ),
    ("SameSign", "nonzero"): TableRow(
        "conformal-gamma0/generic/same-sign/psi-nonzero", "ConformalGamma0", (SMALL_H, H, _one("H^{m} - c*h^{n}"))
    ),
}

_PHITILDE = "c != 0, phitilde(c) != 0"

NONCONFORMAL_ROWS = {
    ("inf", "any"): TableRow("nonconformal-gamma0/infinite-r", "NonconformalGamma0", (ZERO, SMALL_H)),
    ("finite", "j0-zero"): TableRow(
        "nonconformal-gamma0/finite-r/j-zero/phitilde0-zero",
        "NonconformalGamma0",
        (_one("h^{n} - c", _PHITILDE, "phitilde"),),
        (PHITILDE_NOTE,),
    ),
    ("finite", "j0-nonzero"): TableRow(
        "nonconformal-gamma0/finite-r/j-zero/phitilde0-nonzero",
        "NonconformalGamma0",
        (SMALL_H, _one("h^{n} - c", _PHITILDE, "phitilde")),
        (PHITILDE_NOTE,),
    ),
    ("finite", "j-positive"): TableRow(
        "nonconformal-gamma0/finite-r/j-positive",
        "NonconformalGamma0",
        (_one("h^{n} - c", _PHITILDE, "phitilde"),),
    ),
}

ALL_ROWS = (
    list(R1_GAMMA_ROWS.values())
    + list(CONFORMAL_ROOT_ROWS.values())
    + list(CONFORMAL_GENERIC_ROWS.values())
    + list(NONCONFORMAL_ROWS.values())
)

_POWER_ONE = re.compile(r"\^1(?![0-9])")


def render(template: str, **values: int) -> str:
    """Fill exponents and drop ^1."""
    return _POWER_ONE.sub("", template.format(**values))
