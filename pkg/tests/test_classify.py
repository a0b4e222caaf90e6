"""Tests for the classification engine: golden reports and family cross-checks."""

import json
from fractions import Fraction

import pytest

from downup_engine.algebra import AlgebraParams, PBWAlgebra
from downup_engine.classify import classify, compute_S, witness_constant
from downup_engine.classify.engine import STANDING_NOTE
from downup_engine.modules import conformal_weight_window, exotic_module_r1
from downup_engine.scalars import CyclotomicScalar
from downup_engine.utils.errors import HypothesisFailed, UndecidableAtBound

# golden name -> (phi coefficients, r, s, gamma)
GOLDEN_CASES = {
    "r1_gamma_infinite_s_psi_zero": ([], 1, 2, 1),
    "r1_gamma_infinite_s_psi_constant": ([1], 1, 2, 1),
    "r1_gamma_infinite_s_psi_nonconstant": ([0, 1], 1, 2, 1),
    "r1_gamma_finite_s_psi_zero": ([], 1, -1, 1),
    "r1_gamma_finite_s_psi_constant": ([-2], 1, -1, 1),
    "r1_gamma_finite_s_psi_nonconstant": ([0, 1], 1, -1, 1),
    "conformal_roots_both_finite": ([], -1, -1, 0),
    "conformal_roots_finite_r": ([0, 1], -1, 2, 0),
    "conformal_roots_finite_s_psi_zero": ([], 2, -1, 0),
    "conformal_roots_finite_s_psi_constant": ([-2], 2, -1, 0),
    "conformal_roots_finite_s_psi_nonconstant": ([0, 1], 2, -1, 0),
    "conformal_trivial_psi_zero": ([], 2, 3, 0),
    "conformal_trivial_psi_nonzero": ([0, 1], 2, 3, 0),
    "conformal_opposite_psi_zero": ([], 2, Fraction(1, 2), 0),
    "conformal_opposite_psi_nonzero": ([0, 1], 2, Fraction(1, 2), 0),
    "conformal_divisible_psi_monomial": ([0, 0, -8], 2, -4, 0),
    "conformal_divisible_psi_zero": ([], 2, 4, 0),
    "conformal_divisible_psi_other": ([0, 1], 2, 4, 0),
    "conformal_same_sign_psi_zero": ([], 4, 8, 0),
    "conformal_same_sign_psi_nonzero": ([0, 1], 4, 8, 0),
    "nonconformal_infinite_r": ([0, 1], 2, 2, 0),
    "nonconformal_j_zero_phitilde0_zero": ([0, 1], 1, 1, 0),
    "nonconformal_j_zero_phitilde0_nonzero": ([1, 0, 1], -1, 1, 0),
    "nonconformal_j_positive": ([0, 1], -1, -1, 0),
    "gamma_shifted_trivial_psi_nonzero": ([0, 1], 2, 3, 1),
}


@pytest.mark.parametrize("name", sorted(GOLDEN_CASES))
def test_golden_reports(name, golden_dir):
    phi, r, s, gamma = GOLDEN_CASES[name]
    report = classify(AlgebraParams.of(phi, r, s, gamma))
    expected = (golden_dir / "classify" / f"{name}.json").read_text()
    assert report.to_json() + "\n" == expected


def test_every_golden_file_has_a_case(golden_dir):
    names = {p.stem for p in (golden_dir / "classify").glob("*.json")}
    assert names == set(GOLDEN_CASES)


def test_report_always_carries_the_standing_note():
    for phi, r, s, gamma in GOLDEN_CASES.values():
        report = classify(AlgebraParams.of(phi, r, s, gamma))
        assert report.notes[-1] == STANDING_NOTE
        assert json.loads(report.to_json())["regime"] == report.regime


def test_text_rendering():
    report = classify(AlgebraParams.of([], 2, 4, 0))
    text = report.to_text()
    assert text.splitlines()[0] == "regime: ConformalGamma0"
    assert "  <H - c*h^2>  (c != 0)" in text.splitlines()

    empty = classify(AlgebraParams.of([], -1, -1, 0)).to_text()
    assert "primitive ideals: none beyond finite-dimensional annihilators" in empty


def test_gamma_shift_note():
    report = classify(AlgebraParams.of([0, 1], 2, 3, 1))
    assert report.notes[0].startswith("classified after the isomorphism")
    assert report.params.gamma == 0


def test_undecidable_relation_group():
    r = CyclotomicScalar.one() + CyclotomicScalar.zeta(4)
    s = CyclotomicScalar.from_int(2) + CyclotomicScalar.zeta(4)
    with pytest.raises(UndecidableAtBound) as excinfo:
        classify(AlgebraParams.of([], r, s, 0), bound=4)
    assert excinfo.value.bound == 4


def test_declared_relation_reaches_the_generic_rows():
    r = CyclotomicScalar.one() + CyclotomicScalar.zeta(4)
    report = classify(AlgebraParams.of([], r, r * r, 0), declared=(4, 2))
    assert report.row == "conformal-gamma0/generic/divisible/psi-zero"
    assert report.inputs["S"] == "<(2,1)>"
    assert "S(r,s): declared relation" in report.notes


def _family(report, ideal):
    return next(f for f in report.families if f.ideal == ideal)


@pytest.mark.parametrize(
    "phi, r, s, ideal, lam, mu",
    [
        ([], 2, 4, "<H - c*h^2>", 1, 3),
        ([], 4, 8, "<H^2 - c*h^3>", 2, 5),
        ([], 2, Fraction(1, 2), "<h*H - c>", 3, 2),
        ([0, 1], 2, 4, "<H - c*h^2>", 2, 1),
    ],
)
def test_generic_families_kill_their_weight_modules(phi, r, s, ideal, lam, mu):
    params = AlgebraParams.of(phi, r, s, 0)
    report = classify(params)
    family = _family(report, ideal)
    algebra = PBWAlgebra(params)
    c = witness_constant(compute_S(r, s), lam, mu)
    module = conformal_weight_window(params, lam, mu, window=(-6, 6))
    (generator,) = family.instantiate(algebra, c=c, psi=report.psi)
    for i in range(-3, 4):
        assert module.act(generator, module.basis(i)) == {}

    (other,) = family.instantiate(algebra, c=c + 1, psi=report.psi)
    assert module.act(other, module.basis(0)) != {}


def test_r1_family_kills_the_weight_module():
    # s = -1 has order 2 and psi = 1: H^2 - c^2 with c = mu
    params = AlgebraParams.of([-2], 1, -1, 1)
    report = classify(params)
    family = _family(report, "<H^2 - c^2>")
    assert family.excluded_roots == ("c^2 - 1",)
    module = conformal_weight_window(params, 0, 3, window=(-6, 6))
    (generator,) = family.instantiate(PBWAlgebra(params), c=3, psi=report.psi)
    for i in range(-3, 4):
        assert module.act(generator, module.basis(i)) == {}


def _kills(module, generator, indices):
    return all(module.act(generator, module.basis(i)) == {} for i in indices)


def test_finite_r_family_kills_weight_modules():
    # r = -1: h^2 acts on every weight vector by lambda^2
    params = AlgebraParams.of([0, 1], -1, 2, 0)
    report = classify(params)
    assert report.row == "conformal-gamma0/roots/finite-r"
    family = _family(report, "<h^2 - c>")
    algebra = PBWAlgebra(params)
    for lam, mu in [(3, 5), (Fraction(1, 2), -1), (-2, 0)]:
        module = conformal_weight_window(params, lam, mu, window=(-6, 6))
        c = Fraction(lam) ** 2
        (generator,) = family.instantiate(algebra, c=c, psi=report.psi)
        assert _kills(module, generator, range(-3, 4))
        (other,) = family.instantiate(algebra, c=c + 1, psi=report.psi)
        assert not _kills(module, other, [0])


def test_trivial_row_fixed_families_kill_degenerate_windows():
    params = AlgebraParams.of([0, 1], 2, 3, 0)
    report = classify(params)
    assert report.row == "conformal-gamma0/generic/trivial/psi-nonzero"
    algebra = PBWAlgebra(params)
    (big_h,) = _family(report, "<H>").instantiate(algebra, psi=report.psi)
    (small_h,) = _family(report, "<h>").instantiate(algebra, psi=report.psi)

    # H acts by s^i mu and h by r^i lambda
    no_mu = conformal_weight_window(params, 2, 0, window=(-6, 6))
    no_lambda = conformal_weight_window(params, 0, 5, window=(-6, 6))
    indices = range(-3, 4)
    assert _kills(no_mu, big_h, indices)
    assert not _kills(no_mu, small_h, [0])
    assert _kills(no_lambda, small_h, indices)
    assert not _kills(no_lambda, big_h, [0])


@pytest.mark.parametrize(
    "s, n",
    [(-1, 2), (CyclotomicScalar.zeta(3), 3), (CyclotomicScalar.zeta(4), 4)],
)
def test_r1_power_families_kill_exotic_modules(s, n):
    # d v_i = (s^i - 1) v_(i-1) vanishes once in every n steps; mirror does the same for u
    plain = exotic_module_r1(s, 1, 1, n, window=(-25, 25))
    mirror = exotic_module_r1(s, 1, 1, n, window=(-25, 25), mirror=True)
    report = classify(plain.params)
    assert report.row == "r1-gamma/finite-s/psi-constant"
    algebra = PBWAlgebra(plain.params)
    (u_power,) = _family(report, f"<u^{n}>").instantiate(algebra)
    (d_power,) = _family(report, f"<d^{n}>").instantiate(algebra)

    assert _kills(plain, d_power, plain.interior())
    assert not _kills(plain, u_power, [0])
    assert _kills(mirror, u_power, mirror.interior())
    assert not _kills(mirror, d_power, [0])


def test_instantiate_rejects_zero_c():
    report = classify(AlgebraParams.of([], 2, 4, 0))
    family = _family(report, "<H - c*h^2>")
    with pytest.raises(HypothesisFailed):
        family.instantiate(PBWAlgebra(report.params), c=0, psi=report.psi)


def test_fixed_families_instantiate_without_c():
    report = classify(AlgebraParams.of([], 2, 4, 0))
    algebra = PBWAlgebra(report.params)
    assert _family(report, "<u>").instantiate(algebra) == [algebra.u()]
    assert _family(report, "<h>").instantiate(algebra, psi=report.psi) == [algebra.h()]
