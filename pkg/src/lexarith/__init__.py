"""Exact arithmetic on the integer part of a lexicographic power-series
field, with decision procedures for its scale-equivalence relations,
machine-checkable witness certificates, and constructive order-automorphisms.
"""

from ._backend import backend_name
from .model import (
    Element,
    Exponent,
    ModelConfig,
    Term,
    cmp,
    deg,
    divmod_floor,
    divmod_scalar,
    floor_quotient,
    is_standard,
    pow_int,
    root_floor,
    sub,
)
from .textform import format_element, parse_element

__all__ = [
    "Element",
    "Exponent",
    "ModelConfig",
    "Term",
    "backend_name",
    "cmp",
    "deg",
    "divmod_floor",
    "divmod_scalar",
    "floor_quotient",
    "format_element",
    "is_standard",
    "parse_element",
    "pow_int",
    "root_floor",
    "sub",
]

__version__ = "0.1.0"
