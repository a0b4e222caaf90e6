"""Shared fixtures for the down-up engine tests."""

from pathlib import Path

import pytest

from downup_engine.algebra import AlgebraParams, PBWAlgebra

GOLDEN_DIR = Path(__file__).parent / "golden"


@pytest.fixture
def golden_dir() -> Path:
    return GOLDEN_DIR


@pytest.fixture
def classic_params() -> AlgebraParams:
    """phi = h, r = 1, s = 2: the default algebra in config.yaml."""
    return AlgebraParams.of([0, 1], 1, 2, 0)


@pytest.fixture
def classic(classic_params) -> PBWAlgebra:
    return PBWAlgebra(classic_params)


@pytest.fixture
def gamma_algebra() -> PBWAlgebra:
    """phi = h^2 + 1, r = 2, s = 3, gamma = 1: exercises every rewriting rule."""
    return PBWAlgebra(AlgebraParams.of([1, 0, 1], 2, 3, 1))


@pytest.fixture
def make_algebra():
    def factory(phi, r, s, gamma=0, conductor=1, cache_enabled=True) -> PBWAlgebra:
        return PBWAlgebra(AlgebraParams.of(phi, r, s, gamma, conductor), cache_enabled)

    return factory
