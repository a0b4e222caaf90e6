"""Relation groups, table data and the primitive-ideal classification."""

from downup_engine.classify.engine import ClassificationReport, IdealFamily, classify
from downup_engine.classify.relations import (
    RelationGroup,
    compute_S,
    distinctive_reduce,
    ideal_generator,
    is_distinctive,
    witness_constant,
)

__all__ = [
    "ClassificationReport",
    "IdealFamily",
    "RelationGroup",
    "classify",
    "compute_S",
    "distinctive_reduce",
    "ideal_generator",
    "is_distinctive",
    "witness_constant",
]
