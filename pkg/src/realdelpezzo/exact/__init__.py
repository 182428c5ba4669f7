"""Exact arithmetic kernel: rationals, polynomials, resultants, real roots."""

from .bipoly import BiPoly, resultant, sylvester_matrix, univariate_resultant
from .discriminant import cubic_discriminant, depressed_coefficients
from .rat import Rat, RationalFormatError, format_rat, parse_rat
from .roots import (
    AlgebraicNumber,
    count_roots,
    isolate_real_roots,
    rational_between,
    real_roots_with_multiplicity,
    root_multiplicity,
    sort_algebraic,
    sturm_sequence,
)
from .unipoly import UniPoly, ext_gcd, poly_gcd, squarefree_part, yun_factors

__all__ = [
    "AlgebraicNumber",
    "BiPoly",
    "Rat",
    "RationalFormatError",
    "UniPoly",
    "count_roots",
    "cubic_discriminant",
    "depressed_coefficients",
    "ext_gcd",
    "format_rat",
    "isolate_real_roots",
    "parse_rat",
    "poly_gcd",
    "rational_between",
    "real_roots_with_multiplicity",
    "resultant",
    "root_multiplicity",
    "sort_algebraic",
    "squarefree_part",
    "sturm_sequence",
    "sylvester_matrix",
    "univariate_resultant",
    "yun_factors",
]
