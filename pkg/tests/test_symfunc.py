from fractions import Fraction
from itertools import product as cartesian
from math import comb, prod

import pytest

from reshilb.series import LaurentPoly
from reshilb.symfunc import (DegreeList, bezout_c, complete, delta, elementary, sigma,
                             sigma1_taylor_closed, sigma2_taylor_closed, sym_poly,
                             taylor_at_one, binomial_e)

t = LaurentPoly.monomial
one_minus_t = LaurentPoly.one_minus_t_power


def test_examples():
    assert sym_poly("elementary", (2, 3), 1) == t(2) + t(3)
    assert sym_poly("complete", (1, 1), 2) == t(2, 3)
    assert sym_poly("delta", (2, 2)) == (LaurentPoly.const(1) - t(2)) ** 2


def test_empty_list_conventions():
    assert elementary(0, ()) == LaurentPoly.const(1)
    assert complete(0, ()) == LaurentPoly.const(1)
    assert elementary(1, ()) == LaurentPoly()
    assert complete(3, ()) == LaurentPoly()
    assert delta(()) == LaurentPoly.const(1)


def test_degree_list_validation():
    assert DegreeList((0, 0, 0)).zero_mode
    with pytest.raises(ValueError):
        DegreeList((0, 2))
    with pytest.raises(ValueError):
        DegreeList((-1,))


def test_bezout_c_examples():
    assert [bezout_c((2, 2), k) for k in range(3)] == [4, -4, 1]
    for d in range(1, 8):
        assert [bezout_c((d,), k) for k in range(d)] == [(-1) ** k * comb(d, k + 1) for k in range(d)]
    assert bezout_c((3, 4, 5), 0) == 60


def test_lemma_expansion_small():
    for d in cartesian(range(1, 5), repeat=3):
        s = len(d)
        total = LaurentPoly()
        for k in range(sum(d)):
            total = total + one_minus_t(k + s) * bezout_c(d, k)
        assert total == delta(d)


def test_binomial_e_examples(rng):
    assert binomial_e((2, 2), 1) == 4
    for _ in range(50):
        d = tuple(rng.randint(1, 6) for _ in range(rng.randint(1, 5)))
        assert binomial_e(d, 0) == prod(d)
        for ell in range(6):
            assert binomial_e(d, ell) == (-1) ** ell * bezout_c(d, ell)


def test_newton_consistency(rng):
    for _ in range(40):
        d = tuple(rng.randint(1, 7) for _ in range(rng.randint(0, 6)))
        alt = LaurentPoly()
        for m in range(len(d) + 1):
            alt = alt + elementary(m, d) * (-1) ** m
        assert alt == delta(d)


def test_generating_identity(rng):
    # sum_j s_j z^j * prod (1 - t^{d_i} z) = 1, compared coefficientwise in z
    for _ in range(20):
        d = tuple(rng.randint(1, 5) for _ in range(rng.randint(1, 4)))
        for N in range(1, 9):
            coeff = LaurentPoly()
            for m in range(min(N, len(d)) + 1):
                coeff = coeff + complete(N - m, d) * elementary(m, d) * (-1) ** m
            assert coeff == LaurentPoly()


def test_sigma_numbers():
    assert sigma(1, (2, 3, 4)) == 9
    assert sigma(2, (2, 3, 4)) == 26
    assert sigma(3, (2, 3, 4)) == 24
    assert sigma(4, (2, 3, 4)) == 0


def test_taylor_examples():
    assert taylor_at_one(elementary(1, (2, 2, 2)), 1) == [3, 6]
    assert taylor_at_one(LaurentPoly.const(7), 3) == [7, 0, 0, 0]
    d = (2, 3, 5)
    coeffs = taylor_at_one(delta(d), 3)
    assert coeffs[:3] == [0, 0, 0]
    assert coeffs[3] == (-1) ** 3 * 30


def test_taylor_closed_forms(rng):
    for _ in range(50):
        d = tuple(rng.randint(1, 9) for _ in range(rng.randint(1, 6)))
        assert taylor_at_one(elementary(1, d), 3) == sigma1_taylor_closed(d)
        assert taylor_at_one(elementary(2, d), 3) == sigma2_taylor_closed(d)


def test_taylor_negative_exponents():
    # 1/t = 1 - (t-1) + (t-1)^2 - ...
    assert taylor_at_one(t(-1), 3) == [1, -1, 1, -1]
    assert all(isinstance(c, (int, Fraction)) for c in taylor_at_one(t(-2, 3), 4))
