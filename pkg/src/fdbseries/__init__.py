"""Weighted integer compositions, truncated power-series composition and
Faà di Bruno's formula, all in exact rational arithmetic."""
from ._backend import BACKEND
from .combinatorics import (
    Composition,
    MultiplicityVector,
    WeightFunction,
    enumerate_compositions,
    enumerate_multiplicity_vectors,
    multinomial,
    oracle_composition_weight,
    weighted_composition_weight,
    weighted_composition_weight_g,
    weighted_partition_weight,
)
from .errors import CompositionDomainError, DomainError, OutOfRangeError
from .faadibruno import FdBTerm, derivative_via_series, fdb_terms, nth_derivative_composite
from .rational import Rat, format_rational, parse_rational
from .series import TruncatedSeries, add, coefficient, compose, from_coefficients, from_derivatives, mul, pow

__all__ = [
    "BACKEND", "Composition", "CompositionDomainError", "DomainError", "FdBTerm",
    "MultiplicityVector", "OutOfRangeError", "Rat", "TruncatedSeries", "WeightFunction",
    "add", "coefficient", "compose", "derivative_via_series", "enumerate_compositions",
    "enumerate_multiplicity_vectors", "fdb_terms", "format_rational", "from_coefficients",
    "from_derivatives", "mul", "multinomial", "nth_derivative_composite",
    "oracle_composition_weight", "parse_rational", "pow", "weighted_composition_weight",
    "weighted_composition_weight_g", "weighted_partition_weight",
]
