from fractions import Fraction

import pytest

from reshilb.numpoly import NumericalPolynomial, binom, rebase, reflect


def test_binomial_conventions():
    assert binom(5, 2) == 10
    assert binom(-1, 3) == -1
    assert binom(-3, 2) == 6
    assert binom(4, -1) == 0
    assert binom(2, 5) == 0
    assert binom(Fraction(1, 2), 2) == Fraction(-1, 8)


def test_twisted_cubic_polynomial():
    P = NumericalPolynomial(1, (3, 2))
    assert P.values(0, 5) == [1, 4, 7, 10, 13]


def test_interpolation_recovers_coefficients():
    assert NumericalPolynomial.from_values(0, [1, 4, 7, 10]).trimmed() == NumericalPolynomial(1, (3, 2))
    P = NumericalPolynomial(3, (5, -2, 7, 1))
    assert NumericalPolynomial.from_values(-4, P.values(-4, 4)) == P


def test_interpolation_rejects_non_numerical():
    with pytest.raises(ValueError):
        NumericalPolynomial.from_values(0, [Fraction(1, 2), 1])


def test_rebase_preserves_values(rng):
    for _ in range(50):
        m = rng.randint(0, 5)
        P = NumericalPolynomial(m, tuple(rng.randint(-20, 20) for _ in range(m + 1)))
        Q = rebase(P, m + rng.randint(0, 3))
        assert Q.values(-6, 12) == P.values(-6, 12)
        assert Q.trimmed() == P.trimmed()
    with pytest.raises(ValueError):
        rebase(NumericalPolynomial(2, (1, 0, 0)), 1)


def test_reflection(rng):
    for _ in range(100):
        m = rng.randint(0, 6)
        P = NumericalPolynomial(m, tuple(rng.randint(-30, 30) for _ in range(m + 1)))
        d = rng.randint(-8, 8)
        Q = reflect(P, d)
        assert all(Q(k) == P(-k + d) for k in range(-10, 11))
        assert reflect(Q, d) == P


def test_validation():
    with pytest.raises(ValueError):
        NumericalPolynomial(2, (1, 2))
    with pytest.raises(ValueError):
        NumericalPolynomial(0, (Fraction(1, 2),))
    zero = NumericalPolynomial(-1, ())
    assert zero.is_zero() and zero(17) == 0


def test_json_round_trip():
    P = NumericalPolynomial(2, (4, -1, 0))
    assert NumericalPolynomial.from_json(P.to_json()) == P
