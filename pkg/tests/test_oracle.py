from math import comb

import numpy as np
import pytest

from reshilb.oracle import (DEFAULT_PRIME, MERSENNE_31, RATIONALS, Field, Generator,
                            IdealPresentation, NotStabilized, colon_table,
                            fit_hilbert_polynomial, fitted, graded_dim, hilbert_function_quotient,
                            monomial_series, quotient_series, random_forms, rank,
                            stable_dmax)
from reshilb.oracle.ideals import dim_R
from reshilb.oracle.linalg import reduce_modulo
from reshilb.oracle.fixtures import monomial_gens, plane_conic_hypersurface, twisted_cubic
from reshilb.numpoly import NumericalPolynomial
from reshilb.series import LaurentPoly, RationalSeries

CUBIC = twisted_cubic()


def cubic(field=Field(DEFAULT_PRIME)):
    return IdealPresentation(4, CUBIC, field)


def test_field_basics():
    assert str(Field(7)) == "GF(7)" and str(RATIONALS) == "QQ"
    assert Field.from_json(Field(7).to_json()) == Field(7)
    assert Field.from_json("rationals") is RATIONALS
    with pytest.raises(ValueError):
        Field(32004)


def test_rank_over_fields():
    m = [[1, 2], [2, 4]]
    assert rank(m, RATIONALS) == 1
    assert rank([[1, 1], [0, 3]], Field(3)) == 1
    assert rank([[1, 1], [0, 3]], RATIONALS) == 2


def test_reduce_modulo():
    A = np.array([[1, 0, 0]], dtype=object)
    block = np.array([[2, 5, 0], [3, 0, 1]], dtype=object)
    for f in (RATIONALS, Field(101)):
        (red,) = reduce_modulo(A, [block], f)
        # only the two non-pivot coordinates survive
        assert np.asarray(red).shape == (2, 2)
        assert rank(red, f) == 2
    inside = np.array([[7, 0, 0]], dtype=object)
    (red,) = reduce_modulo(A, [inside], RATIONALS)
    assert rank(red, RATIONALS) == 0
    assert reduce_modulo(np.array([[1, 0], [0, 1]], dtype=object), [inside[:, :2]], RATIONALS) == []


def test_graded_dim_examples():
    assert graded_dim(cubic(), 2) == 3
    assert graded_dim(cubic(), 1) == 0
    for n in (3, 4, 5):
        hyp = IdealPresentation(n, plane_conic_hypersurface(n))
        assert graded_dim(hyp, 4) == comb(n + 1, 2) == dim_R(n, 2)


def test_quotient_tables():
    assert hilbert_function_quotient(cubic(), 1, 6).values == (1, 4, 7, 10, 13, 16, 19)
    hyp = IdealPresentation(4, plane_conic_hypersurface(4))
    squared = hilbert_function_quotient(hyp, 2, 8).values
    assert squared == tuple(dim_R(4, d) - dim_R(4, d - 4) if d >= 4 else dim_R(4, d)
                            for d in range(9))
    empty = IdealPresentation(3, ())
    assert hilbert_function_quotient(empty, 1, 5).values == tuple(dim_R(3, d) for d in range(6))


def test_cubic_power_series():
    S = quotient_series(cubic(), 2, 2, 12, recheck=True).series
    assert S == RationalSeries(LaurentPoly({0: 1, 1: 2, 2: 3, 3: 4, 4: -1}), 2)


def test_fit_examples():
    assert fit_hilbert_polynomial([1, 4, 7, 10, 13, 16], 2) == NumericalPolynomial(1, (3, 2))
    assert fit_hilbert_polynomial([1, 1, 1, 1], 1) == NumericalPolynomial(0, (1,))
    with pytest.raises(NotStabilized):
        fit_hilbert_polynomial([1, 2, 4, 8, 16, 32], 1)
    with pytest.raises(NotStabilized):
        fit_hilbert_polynomial([1, 4], 2)


def test_fitted_series_and_stabilization():
    fit = fitted([1, 3, 3, 3, 3, 3], 1)
    assert fit.table.stabilization == 1
    assert fit.series.expand(0, 5) == [1, 3, 3, 3, 3, 3]


def test_colon_examples():
    f = Field(DEFAULT_PRIME)
    assert set(colon_table(cubic(), CUBIC, 6).values) == {0}
    A = random_forms(CUBIC, (2, 2), seed=0, field=f)
    assert colon_table(A, CUBIC, 8, recheck=True).values == tuple(d + 1 for d in range(9))
    A = random_forms(CUBIC, (2, 2, 3), seed=0, field=f)
    vals = colon_table(A, CUBIC, 14).values
    assert fitted(vals, 1).polynomial.e == (1,)


def test_colon_contains_the_forms():
    # (A : I)_d contains A_d, so h(R/(A:I)) <= h(R/A) degreewise
    A = random_forms(CUBIC, (2, 2, 3), seed=3)
    colon = colon_table(A, CUBIC, 8).values
    quot = hilbert_function_quotient(A, 1, 8).values
    assert all(c <= q for c, q in zip(colon, quot))


def test_random_forms_determinism_and_genericity():
    a = random_forms(CUBIC, (2, 2, 3), seed=11)
    assert a == random_forms(CUBIC, (2, 2, 3), seed=11)
    assert a != random_forms(CUBIC, (2, 2, 3), seed=12)
    for seed in range(10):
        assert graded_dim(random_forms(CUBIC, (2, 2, 2), seed=seed), 2) == 3


def test_random_forms_in_principal_ideal():
    hyp = plane_conic_hypersurface(4)
    A = random_forms(hyp, (2, 2, 2), seed=0)
    assert graded_dim(A, 2) == 1
    with pytest.raises(ValueError):
        random_forms(hyp, (1,), seed=0)


def test_rational_random_forms():
    A = random_forms(CUBIC, (2, 3), seed=5, field=RATIONALS)
    assert A.field is RATIONALS
    assert all(abs(c) <= 100 * 2 for g in A.generators for c in g.terms.values())


def test_monomial_series_examples():
    assert monomial_series([(2, 0)], 2) == RationalSeries(LaurentPoly({0: 1, 1: 1}), 1)
    assert monomial_series([(1, 0), (0, 1)], 2) == RationalSeries.const(1)
    assert monomial_series([(1, 1)], 2) == RationalSeries(LaurentPoly({0: 1, 2: -1}), 2)


def test_monomial_series_matches_linear_algebra(rng):
    for _ in range(10):
        n = rng.randint(2, 4)
        gens = [tuple(rng.randint(0, 3) for _ in range(n)) for _ in range(rng.randint(1, 4))]
        gens = [g for g in gens if sum(g)] or [(1,) + (0,) * (n - 1)]
        table = hilbert_function_quotient(IdealPresentation(n, monomial_gens(gens)), 1, 9)
        assert monomial_series(gens, n).expand(0, 9) == list(table.values)


def test_fields_agree_on_cubic_powers():
    tables = {str(f): hilbert_function_quotient(cubic(f), 3, 10).values
              for f in (Field(DEFAULT_PRIME), Field(MERSENNE_31), RATIONALS)}
    assert len(set(tables.values())) == 1


def test_thread_determinism():
    A = random_forms(CUBIC, (2, 2, 3), seed=1)
    assert colon_table(A, CUBIC, 9, workers=1) == colon_table(A, CUBIC, 9, workers=4)


def test_presentation_json_round_trip():
    A = random_forms(CUBIC, (2, 3), seed=2)
    assert IdealPresentation.from_json(A.to_json()) == A
    g = Generator(2, {(1, 1): 3})
    assert Generator.from_json(g.to_json()) == g


def test_stable_dmax():
    assert stable_dmax((2, 2, 3)) == 14
    assert stable_dmax((2,), cap=9) == 9
