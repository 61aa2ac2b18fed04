"""Exact Hilbert-series machinery for residual intersections and powers of ideals."""
from .numpoly import NumericalPolynomial, binom, reflect, rebase, evaluate
from .series import (LaurentPoly, RationalSeries, EDecomposition, decompose,
                     equiv_r, project, associated_polynomial, canonical_dual_class,
                     substitute_inverse, expand, ring_ops, e_vector, parse_series)

__version__ = "0.1.0"

__all__ = [
    "NumericalPolynomial", "binom", "reflect", "rebase", "evaluate",
    "LaurentPoly", "RationalSeries", "EDecomposition", "decompose", "equiv_r", "project",
    "associated_polynomial", "canonical_dual_class", "substitute_inverse", "expand",
    "ring_ops", "e_vector", "parse_series",
]
