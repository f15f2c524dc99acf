"""Exact arithmetic: rational polynomials, real algebraic numbers, number fields."""

from .field import (
    FieldElement,
    FieldEmbedding,
    NumberField,
    adjoin_sqrt,
    common_field,
    compositum,
    same_subfield,
    subfield_generated,
)
from .pf import PerronFrobeniusError, check_primitive, pf_eigenvalue, pf_eigenvector
from .poly import RationalPoly, charpoly, factor_rational
from .real import AlgebraicReal, isolate_real_roots

__all__ = [
    "AlgebraicReal",
    "FieldElement",
    "FieldEmbedding",
    "NumberField",
    "PerronFrobeniusError",
    "RationalPoly",
    "adjoin_sqrt",
    "charpoly",
    "check_primitive",
    "common_field",
    "compositum",
    "factor_rational",
    "isolate_real_roots",
    "pf_eigenvalue",
    "pf_eigenvector",
    "same_subfield",
    "subfield_generated",
]


def minimal_polynomial_of(x) -> RationalPoly:
    """Monic minimal polynomial over Q of an AlgebraicReal or FieldElement."""
    if isinstance(x, AlgebraicReal):
        return x.minpoly.monic()
    return x.minimal_polynomial
