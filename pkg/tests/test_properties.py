"""Randomized algebraic laws checked with hypothesis."""
from hypothesis import given, settings, strategies as st

from reshilb.numpoly import NumericalPolynomial, reflect
from reshilb.series import (LaurentPoly, RationalSeries, decompose, equiv_r, expand,
                            substitute_inverse)
from reshilb.symfunc import bezout_c, delta, binomial_e

coeff = st.integers(-20, 20)


@st.composite
def series(draw, max_pole=4):
    lo = draw(st.integers(-4, 4))
    cs = draw(st.lists(coeff, max_size=5))
    return RationalSeries(LaurentPoly({lo + i: c for i, c in enumerate(cs)}),
                          draw(st.integers(0, max_pole)))


degree_lists = st.lists(st.integers(1, 6), min_size=0, max_size=4)


@given(series(), series())
def test_substitution_is_a_ring_map(a, b):
    assert substitute_inverse(a * b) == substitute_inverse(a) * substitute_inverse(b)
    assert substitute_inverse(a + b) == substitute_inverse(a) + substitute_inverse(b)
    assert substitute_inverse(substitute_inverse(a)) == a


@given(series(), series())
def test_addition_two_ways(a, b):
    # cross-multiplying numerators by hand gives the same normal form
    k = a.pole + b.pole
    num = (a.numerator * LaurentPoly.one_minus_t_power(b.pole)
           + b.numerator * LaurentPoly.one_minus_t_power(a.pole))
    assert a + b == RationalSeries(num, k)


@given(series(), st.integers(0, 3))
def test_decomposition_round_trip(a, extra):
    assert decompose(a, a.pole + extra).reconstruct() == a


@given(series(), series())
def test_multiplication_matches_expansion(a, b):
    lo = min(a.numerator.min_exp if a.numerator else 0, 0) + \
        min(b.numerator.min_exp if b.numerator else 0, 0)
    ea = dict(zip(range(lo - 10, 20), expand(a, lo - 10, 19)))
    eb = dict(zip(range(lo - 10, 20), expand(b, lo - 10, 19)))
    prod = expand(a * b, lo, 6)
    for N, value in zip(range(lo, 7), prod):
        assert value == sum(ea.get(i, 0) * eb.get(N - i, 0) for i in range(lo - 10, 20))


@given(series(3), series(3), st.integers(0, 2))
def test_equivalence_is_a_congruence(a, b, r):
    assert equiv_r(a, a, 3, r)
    assert equiv_r(a, b, 3, r) == equiv_r(b, a, 3, r)
    if equiv_r(a, b, 3, r):
        assert equiv_r(a * RationalSeries.monomial(2), b * RationalSeries.monomial(2), 3, r)


@given(degree_lists)
def test_bezout_expansion(d):
    s = len(d)
    total = LaurentPoly()
    for k in range(max(sum(d) - s, 0) + 1):
        total = total + LaurentPoly.one_minus_t_power(k + s) * bezout_c(d, k)
    assert total == delta(d)


@given(degree_lists.filter(bool), st.integers(0, 6))
def test_binomial_e_sign(d, ell):
    assert binomial_e(d, ell) == (-1) ** ell * bezout_c(d, ell)


@settings(max_examples=50)
@given(st.integers(0, 6).flatmap(
    lambda m: st.tuples(st.just(m), st.lists(coeff, min_size=m + 1, max_size=m + 1))),
    st.integers(-10, 10))
def test_reflection_identity(mp, d):
    m, e = mp
    P = NumericalPolynomial(m, tuple(e))
    Q = reflect(P, d)
    assert all(Q(k) == P(d - k) for k in range(-10, 11))
