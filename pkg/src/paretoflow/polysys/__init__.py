"""Polynomial encoding of the consensus constraints and its solution set."""

from .feasible import (
    FeasibleSet,
    brute_force_F,
    build_q,
    build_r,
    groebner_F,
    groebner_system,
    q_value,
    system_polys,
)
from .groebner import GroebnerBasis, buchberger, extract_variety, integer_roots, is_consistent
from .poly import MultiPoly, poly_divide, reduce

__all__ = [
    "FeasibleSet", "GroebnerBasis", "MultiPoly", "brute_force_F", "buchberger", "build_q",
    "build_r", "extract_variety", "groebner_F", "groebner_system", "integer_roots",
    "is_consistent", "poly_divide", "q_value", "reduce", "system_polys",
]
