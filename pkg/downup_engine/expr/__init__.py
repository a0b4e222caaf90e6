"""Text syntax for algebra elements, polynomials and scalars."""

from downup_engine.expr.parser import (
    Token,
    element_from_source,
    evaluate,
    parse_element,
    parse_expression,
    parse_polynomial,
    parse_scalar,
    to_source,
    tokenize,
)

__all__ = [
    "Token",
    "element_from_source",
    "evaluate",
    "parse_element",
    "parse_expression",
    "parse_polynomial",
    "parse_scalar",
    "to_source",
    "tokenize",
]
