"""Independent ground truth from graded linear algebra."""
from .linalg import DEFAULT_PRIME, MERSENNE_31, RATIONALS, Field, rank
from .ideals import (FittedSeries, Generator, GenericityFailure, HilbertFunctionTable,
                     IdealPresentation, NotStabilized, OracleMismatch, colon_hilbert_function,
                     colon_table, fit_hilbert_polynomial, fitted, graded_dim,
                     hilbert_function_quotient, monomials, quotient_series, random_forms,
                     series_from_table, span_matrix, stable_dmax)
from .monomial import monomial_series
from . import fixtures

__all__ = [
    "DEFAULT_PRIME", "MERSENNE_31", "RATIONALS", "Field", "rank",
    "FittedSeries", "Generator", "GenericityFailure", "HilbertFunctionTable",
    "IdealPresentation", "NotStabilized", "OracleMismatch", "colon_hilbert_function",
    "colon_table", "fit_hilbert_polynomial", "fitted", "graded_dim",
    "hilbert_function_quotient", "monomials", "quotient_series", "random_forms",
    "series_from_table", "span_matrix", "stable_dmax", "monomial_series", "fixtures",
]
