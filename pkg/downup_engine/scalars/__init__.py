"""Exact scalars: cyclotomic field elements and multiplicative orders."""

from downup_engine.scalars.cyclotomic import (
    INFINITE,
    CyclotomicScalar,
    OrderValue,
    is_root_of_unity,
    order,
    power_index,
    square_root,
)

__all__ = [
    "CyclotomicScalar",
    "OrderValue",
    "INFINITE",
    "order",
    "is_root_of_unity",
    "power_index",
    "square_root",
]
