"""Tests for the conformal solver, H relations and product identities."""

import random
from fractions import Fraction

import pytest

from downup_engine.algebra import AlgebraParams, PBWAlgebra
from downup_engine.conformal import ConformalData, NotConformal, solve_conformal
from downup_engine.conformal.relations import (
    check_H_relations,
    known_central_elements,
    product_identity_gamma0,
    product_identity_r1,
)
from downup_engine.conformal.solver import conformal_residual, is_conformal, kernel_exponents
from downup_engine.scalars import CyclotomicScalar
from downup_engine.utils.errors import HypothesisFailed, UnsupportedRegime


@pytest.mark.parametrize(
    "phi, r, s, gamma, psi, psi_class",
    [
        ([0, 1], 1, 2, 0, "h", "nonconstant"),
        ([0, 1], 2, Fraction(1, 2), 0, "-2/3*h", "nonconstant"),
        ([0, 0, -8], 2, -4, 0, "h^2", "nonconstant"),
        ([0, 1], 2, 4, 0, "1/2*h", "nonconstant"),
        ([0, 1], 1, -1, 1, "-1/2*h + 1/4", "nonconstant"),
        ([-2], 1, -1, 1, "1", "constant"),
        ([0, 1], 1, 2, 1, "h + 1", "nonconstant"),
        ([], 2, 3, 0, "0", "zero"),
    ],
)
def test_solve_conformal(phi, r, s, gamma, psi, psi_class):
    params = AlgebraParams.of(phi, r, s, gamma)
    data = solve_conformal(params)
    assert isinstance(data, ConformalData)
    assert data.psi.format("h") == psi
    assert data.psi_class() == psi_class
    assert conformal_residual(params, data.psi).is_zero()


def test_kernel_monomials_are_set_to_zero():
    # s = r^2 with a_2 = 0: the h^2 coefficient of psi is free and left at zero
    params = AlgebraParams.of([0, 1, 0, 1], 2, 4, 0)
    assert kernel_exponents(params) == frozenset({2})
    assert solve_conformal(params).psi.format("h") == "-1/4*h^3 + 1/2*h"
    assert kernel_exponents(AlgebraParams.of([0, 1], 2, 4, 0)) == frozenset()


def test_not_conformal():
    result = solve_conformal(AlgebraParams.of([0, 1], 2, 2, 0))
    assert isinstance(result, NotConformal)
    assert result.j == 1
    assert str(result) == "not conformal: s=r^1 and a_1!=0"
    assert not is_conformal(AlgebraParams.of([0, 1], 2, 2, 0))


def test_r_not_one_with_gamma_is_unsupported():
    with pytest.raises(UnsupportedRegime):
        solve_conformal(AlgebraParams.of([0, 1], 2, 3, 1))


@pytest.mark.parametrize(
    "phi, r, s, gamma",
    [
        ([0, 1], 1, 2, 0),
        ([0, 0, -8], 2, -4, 0),
        ([0, 1], 1, -1, 1),
        ([1, 0, 1], 3, 2, 0),
        ([0, 1], 1, 2, 1),
    ],
)
def test_H_normalizes_u_and_d(phi, r, s, gamma):
    data = solve_conformal(AlgebraParams.of(phi, r, s, gamma))
    residuals = check_H_relations(data)
    assert set(residuals) == {"Hu", "dH"}
    assert all(res.is_zero() for res in residuals.values())


RANDOM_R = [2, 3, -2, Fraction(1, 2), CyclotomicScalar.zeta(3), CyclotomicScalar.zeta(4), 1]
RANDOM_S = [2, -1, 4, Fraction(1, 3), CyclotomicScalar.zeta(3), CyclotomicScalar.zeta(4), -8, 1]


def test_random_algebras_solve_or_name_their_obstruction():
    rng = random.Random(31)
    solved = 0
    for _ in range(100):
        phi = [rng.randint(-3, 3) for _ in range(rng.randint(1, 4))]
        r, s = rng.choice(RANDOM_R), rng.choice(RANDOM_S)
        gamma = rng.randint(0, 2) if r == 1 else 0
        params = AlgebraParams.of(phi, r, s, gamma)
        data = solve_conformal(params)
        if isinstance(data, NotConformal):
            assert data.j is not None
            assert params.s == params.r**data.j
            assert params.phi.coeff(data.j) != 0
            continue
        solved += 1
        assert conformal_residual(params, data.psi).is_zero()
        residuals = check_H_relations(data)
        assert all(res.is_zero() for res in residuals.values())
    assert solved > 0


def test_known_central_elements_roots_of_unity():
    params = AlgebraParams.of([], -1, -1, 0)
    found = known_central_elements(params)
    assert [label for label, _ in found] == ["h^2", "H^2", "u^2", "d^2"]


def test_known_central_elements_r1_gamma():
    params = AlgebraParams.of([-2], 1, -1, 1)
    assert [label for label, _ in known_central_elements(params)] == ["H^2"]


def test_known_central_elements_generic():
    assert known_central_elements(AlgebraParams.of([0, 1], 2, 3, 0)) == []


@pytest.mark.parametrize(
    "C, s, gamma",
    [(1, -1, 1), (3, -1, 1), (Fraction(-1, 2), 2, 1), (2, 3, 2), (1, Fraction(1, 2), -1)],
)
@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_product_identity_r1(C, s, gamma, k):
    # phi = (s - 1)*C makes psi = C
    data = solve_conformal(AlgebraParams.of([(s - 1) * C], 1, s, gamma))
    assert data.psi.format("h") == str(C)
    lhs, rhs = product_identity_r1(data, k)
    assert lhs == rhs


@pytest.mark.parametrize(
    "phi, r, s",
    [([0, 0, -8], 2, -4), ([], 2, 4), ([0, 1], 2, 3)],
)
@pytest.mark.parametrize("k", [1, 2, 3])
def test_product_identity_gamma0(phi, r, s, k):
    data = solve_conformal(AlgebraParams.of(phi, r, s, 0))
    lhs, rhs = product_identity_gamma0(data, k)
    assert lhs == rhs


def test_product_identities_check_hypotheses():
    data = solve_conformal(AlgebraParams.of([0, 1], 1, 2, 1))
    with pytest.raises(HypothesisFailed):
        product_identity_r1(data, 2)
    with pytest.raises(HypothesisFailed):
        product_identity_gamma0(data, 2)
