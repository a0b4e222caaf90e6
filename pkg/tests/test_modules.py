"""Tests for finite-dimensional simple modules and windowed infinite-dimensional modules."""

import random
from fractions import Fraction

import pytest

from downup_engine.algebra import AlgebraParams, PBWAlgebra
from downup_engine.conformal import solve_conformal
from downup_engine.modules import (
    Weight,
    annihilator_generators,
    build_Fc,
    build_Fc_bar,
    build_Fhw,
    conformal_weight_window,
    exotic_module_conformal,
    exotic_module_r1,
    universal_weight_window,
    verify_annihilates,
)
from downup_engine.modules.finite import evaluate, weight_ideal
from downup_engine.poly import linalg
from downup_engine.scalars import CyclotomicScalar
from downup_engine.utils.errors import HypothesisFailed, NeedsSquareRootOfR

# phi = h, r = 1, s = 1, gamma = -1: beta_i = i*lambda - i(i-1)/2 from (lambda, 0)
SL2_LIKE = AlgebraParams.of([0, 1], 1, 1, -1)
ROOTS = AlgebraParams.of([], -1, -1, 0)


@pytest.fixture
def fhw():
    return build_Fhw(SL2_LIKE, 1, 2)


def test_highest_weight_module(fhw):
    assert fhw.dim == 3
    assert [str(w.lam) for w in fhw.weights] == ["1", "0", "-1"]
    assert [str(w.beta) for w in fhw.weights] == ["0", "1", "1"]
    assert all(fhw.relation_checks().values())
    assert fhw.describe()["relations"] == {"hu-ruh=gamma*u": True, "dh-rhd=gamma*d": True, "du-sud=phi(h)": True}


def test_highest_weight_annihilator(fhw):
    algebra = PBWAlgebra(SL2_LIKE)
    generators = annihilator_generators(fhw, algebra)
    assert len(generators) >= 3
    assert all(verify_annihilates(fhw, g) for g in generators)
    u = algebra.u()
    assert not verify_annihilates(fhw, u**2)
    assert not verify_annihilates(fhw, algebra.h())


def test_weight_ideal_vanishes_on_weights(fhw):
    algebra = PBWAlgebra(SL2_LIKE)
    for g in weight_ideal(fhw, algebra):
        assert g.is_homogeneous()
        assert linalg.is_zero_matrix(evaluate(fhw, g))


def test_evaluate_generators(fhw):
    algebra = PBWAlgebra(SL2_LIKE)
    assert evaluate(fhw, algebra.u()) == fhw.mat_u
    assert evaluate(fhw, algebra.u() * algebra.d()) == linalg.to_matrix([[0, 0, 0], [0, 1, 0], [0, 0, 1]])


@pytest.mark.parametrize(
    "lam, n, condition",
    [(2, 2, "beta_(n+1) = 0"), (0, 0, None)],
)
def test_highest_weight_hypotheses(lam, n, condition):
    if condition is None:
        module = build_Fhw(SL2_LIKE, lam, n)
        assert module.dim == 1
        return
    with pytest.raises(HypothesisFailed) as excinfo:
        build_Fhw(SL2_LIKE, lam, n)
    assert excinfo.value.condition == condition


def test_highest_weight_dimension_cap():
    with pytest.raises(HypothesisFailed):
        build_Fhw(SL2_LIKE, 1, 2, max_dim=2)


@pytest.mark.parametrize("n", range(8))
def test_highest_weight_dimension_sweep(n):
    module = build_Fhw(SL2_LIKE, Fraction(n, 2), n)
    assert module.dim == n + 1
    assert all(module.relation_checks().values())
    assert all(verify_annihilates(module, g) for g in annihilator_generators(module))


def _rotation(m):
    # lambda_i = beta_i = zeta_m^i from the base (1, 1)
    zeta = CyclotomicScalar.zeta(m)
    return AlgebraParams.of([], zeta, zeta, 0)


@pytest.mark.parametrize("build, kind", [(build_Fc, "Cyclic"), (build_Fc_bar, "CyclicBar")])
@pytest.mark.parametrize("m", range(1, 9))
def test_cyclic_dimension_sweep(build, kind, m):
    module = build(_rotation(m), Weight.of(1, 1), 2)
    assert module.kind == kind
    assert module.dim == m
    assert all(module.relation_checks().values())
    assert all(verify_annihilates(module, g) for g in annihilator_generators(module))


def _random_element(rng, algebra, degree=2):
    x = algebra.zero()
    for _ in range(2):
        i = rng.randint(0, degree)
        j = rng.randint(0, degree - i)
        k = rng.randint(0, degree - i - j)
        x = x + algebra.monomial(i, j, k, Fraction(rng.randint(-3, 3), rng.randint(1, 2)))
    return x


@pytest.mark.parametrize(
    "module",
    [
        build_Fhw(SL2_LIKE, 1, 2),
        build_Fhw(SL2_LIKE, Fraction(3, 2), 3),
        build_Fc(ROOTS, Weight.of(1, 1), 2),
        build_Fc_bar(ROOTS, Weight.of(1, 1), 2),
        build_Fc(_rotation(3), Weight.of(1, 1), 1),
        build_Fc_bar(_rotation(3), Weight.of(1, 1), 1),
    ],
    ids=lambda module: f"{module.kind}-{module.dim}",
)
def test_random_ideal_elements_and_non_members(module):
    rng = random.Random(module.dim)
    algebra = PBWAlgebra(module.params)
    generators = annihilator_generators(module, algebra)
    for _ in range(5):
        member = algebra.zero()
        for g in rng.sample(generators, min(2, len(generators))):
            member = member + _random_element(rng, algebra) * g * _random_element(rng, algebra)
        assert verify_annihilates(module, member)
        # u^k and d^k act nonzero for k < dim
        k = rng.randrange(module.dim)
        shift = rng.choice([algebra.u(), algebra.d()]) ** k
        c = Fraction(rng.choice([-2, -1, 1, 2]), rng.randint(1, 3))
        assert not verify_annihilates(module, member + shift.scale(c))


def test_cyclic_modules():
    fc = build_Fc(ROOTS, Weight.of(1, 1), 2)
    assert fc.dim == 2
    assert fc.eta == Fraction(-1, 4)
    assert all(verify_annihilates(fc, g) for g in annihilator_generators(fc))

    bar = build_Fc_bar(ROOTS, Weight.of(1, 1), 2)
    assert bar.kind == "CyclicBar"
    assert all(bar.relation_checks().values())
    assert all(verify_annihilates(bar, g) for g in annihilator_generators(bar))

    algebra = PBWAlgebra(ROOTS)
    assert not verify_annihilates(fc, algebra.u() ** 2 - 1)


def test_cyclic_module_hypotheses():
    with pytest.raises(HypothesisFailed):
        build_Fc(ROOTS, Weight.of(1, 1), 0)
    with pytest.raises(HypothesisFailed):
        build_Fc(ROOTS, Weight.of(0, 0), 1)
    with pytest.raises(HypothesisFailed):
        build_Fc(AlgebraParams.of([0, 1], 1, 2, 0), Weight.of(1, 2), 1, period_search=8)


def test_universal_weight_window(classic_params):
    module = universal_weight_window(classic_params, Weight.of(1, 2), window=(-6, 6))
    assert module.relations_hold()
    algebra = PBWAlgebra(classic_params)
    # ud acts on v_i by beta_i = 3*2^i - 1
    for i in module.interior():
        image = module.act(algebra.u() * algebra.d(), module.basis(i))
        assert image == {i: CyclotomicScalar.from_fraction(3 * Fraction(2) ** i - 1)}


def test_universal_window_with_vanishing_beta(classic_params):
    module = universal_weight_window(classic_params, Weight.of(1, 1), window=(-5, 5))
    assert module.relations_hold()


def test_conformal_weight_window_H_eigenvalues(classic_params):
    module = conformal_weight_window(classic_params, 1, 3, window=(-5, 5))
    assert module.relations_hold()
    H = solve_conformal(classic_params).H
    for i in module.interior():
        image = module.act(H, module.basis(i))
        assert image == {i: CyclotomicScalar.from_int(3) * CyclotomicScalar.from_int(2) ** i}


def test_conformal_weight_window_needs_conformal():
    with pytest.raises(HypothesisFailed):
        conformal_weight_window(AlgebraParams.of([0, 1], 2, 2, 0), 1, 1)


@pytest.mark.parametrize("mirror", [False, True])
def test_exotic_module_r1(mirror):
    module = exotic_module_r1(-1, 1, 1, 2, window=(-10, 10), mirror=mirror)
    assert module.params.phi.format("h") == "-2"
    assert module.relations_hold()
    assert all(module.describe()["relations"].values())


def test_exotic_module_r1_hypotheses():
    with pytest.raises(HypothesisFailed):
        exotic_module_r1(2, 1, 1, 1)
    with pytest.raises(HypothesisFailed):
        exotic_module_r1(-1, 0, 1, 2)
    # C = 0 works for any s
    assert exotic_module_r1(2, 1, 0, 1, window=(-6, 6)).relations_hold()


def test_exotic_module_conformal():
    # theta = r/s = -1 has order m = 2
    module = exotic_module_conformal(2, -2, 1, 1, 2, window=(-10, 10))
    assert module.params.phi.format("h") == "-4*h"
    assert module.relations_hold()


def test_exotic_module_conformal_half_integer_exponent():
    s = CyclotomicScalar.from_int(4) * CyclotomicScalar.zeta(3, 2)
    with pytest.raises(NeedsSquareRootOfR):
        exotic_module_conformal(2, s, 1, 2, 3)
    r = CyclotomicScalar.from_int(2).lift(24)
    module = exotic_module_conformal(r, s, 1, 2, 3, window=(-10, 10))
    assert module.relations_hold()


def test_exotic_module_conformal_hypotheses():
    with pytest.raises(HypothesisFailed):
        exotic_module_conformal(2, -2, 1, 1, 3)


@pytest.mark.parametrize("mirror", [False, True])
@pytest.mark.parametrize("gamma", [1, Fraction(1, 2)])
@pytest.mark.parametrize("C", [0, 1, 3])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_exotic_module_r1_grid(n, C, gamma, mirror):
    # C != 0 needs s^n = 1
    s = CyclotomicScalar.zeta(n) if C else 2
    module = exotic_module_r1(s, gamma, C, n, window=(-25, 25), mirror=mirror)
    assert module.relations_hold()
    assert all(module.describe()["relations"].values())


@pytest.mark.parametrize(
    "r, s, C, j, m",
    [
        (2, -2, 1, 1, 2),
        (3, -3, 2, 1, 2),
        (2, CyclotomicScalar.from_int(2) * CyclotomicScalar.zeta(3, 2), 1, 1, 3),
        (2, -4, Fraction(1, 2), 2, 2),
        (2, -8, 1, 3, 2),
        (5, -1, 1, 0, 2),
    ],
)
def test_exotic_module_conformal_grid(r, s, C, j, m):
    module = exotic_module_conformal(r, s, C, j, m, window=(-25, 25))
    assert module.relations_hold()
    assert all(module.describe()["relations"].values())
