"""The algebra L(phi, r, s, gamma): parameters, PBW arithmetic and graded coordinates."""

from downup_engine.algebra.params import AlgebraParams, algebra_params_from_config
from downup_engine.algebra.pbw import (
    PBWAlgebra,
    PBWElement,
    commutator,
    homogeneous_decomposition,
    is_central,
)

__all__ = [
    "AlgebraParams",
    "algebra_params_from_config",
    "PBWAlgebra",
    "PBWElement",
    "commutator",
    "homogeneous_decomposition",
    "is_central",
]
