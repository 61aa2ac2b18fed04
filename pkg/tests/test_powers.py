from fractions import Fraction

import pytest

from reshilb.powers import (CIData, InconsistentInput, KoszulInput, ci_base_coeffs,
                            ci_conormal_e, ci_conormal_series, ci_conormal_series_enumerated,
                            ci_power_quotient_series, deweger_check, conormal_closed_forms, koszul_duality,
                            e3_from_lower, solve_all_powers, solve_homology)
from reshilb.series import RationalSeries, equiv_r, project


def test_conormal_series_two_ways(rng):
    for _ in range(20):
        c = tuple(rng.randint(1, 4) for _ in range(rng.randint(1, 3)))
        for p in range(4):
            assert ci_conormal_series(c, 5, p) == ci_conormal_series_enumerated(c, 5, p)


def test_power_quotient_telescopes():
    c, n = (2, 3), 5
    for j in range(1, 5):
        diff = ci_power_quotient_series(c, n, j + 1) - ci_power_quotient_series(c, n, j)
        assert diff == ci_conormal_series(c, n, j)


def test_hypersurface_conormal_coefficients():
    # a quadric: I^p/I^{p+1} = (R/f)(-2p), so the e-vector is a twist of (2, 1, 0)
    assert ci_conormal_e((2,), 0) == (2, 1, 0, 0)
    assert ci_conormal_e((2,), 1) == (2, 5, 4, 1)
    assert ci_conormal_e((2,), 2)[:3] == (2, 9, 16)


def test_ci_base_matches_series(rng):
    for _ in range(100):
        g = rng.randint(1, 5)
        c = tuple(rng.randint(1, 9) for _ in range(g))
        assert ci_base_coeffs(CIData(g, c)) == ci_conormal_e(c, 0)


def test_formulas_pinned_and_exact(rng):
    base = (2, 1, 0, 4, 0, 1)
    assert conormal_closed_forms(1, base, 1)[1] == 5
    assert conormal_closed_forms(1, base, 2)[2:] == (16, 14)
    for _ in range(30):
        g = rng.randint(1, 3)
        c = tuple(rng.randint(1, 5) for _ in range(g))
        e0, e1 = ci_conormal_e(c, 0), ci_conormal_e(c, 1)
        b = (e0[0], e0[1], e0[2], e1[2], e0[3], e1[3])
        for p in range(6):
            assert conormal_closed_forms(g, b, p) == ci_conormal_e(c, p)


def test_e3_expression_sign(rng):
    # the classical expression evaluates to -e_3; the corrected one to e_3
    assert e3_from_lower(2, 1, 0, "classical") == 0
    quartic = ci_base_coeffs(CIData(1, (4,)))
    assert quartic[3] == 1
    assert e3_from_lower(*quartic[:3], "classical") == -1
    for _ in range(200):
        g = rng.randint(1, 5)
        e = ci_base_coeffs(CIData(g, tuple(rng.randint(1, 9) for _ in range(g))))
        assert e3_from_lower(*e[:3]) == e[3]
        assert e3_from_lower(*e[:3], "classical") == -e[3]
    with pytest.raises(ZeroDivisionError):
        e3_from_lower(0, 1, 1)
    assert isinstance(e3_from_lower(3, 1, 1), Fraction)


def test_deweger_pairs():
    r = deweger_check((1, 6, 7, 22), (2, 2, 11, 21))
    assert r["pattern"] and r["base_equal"]
    assert (r["sigmas_a"][2], r["sigmas_b"][2]) == (1252, 1052)
    assert r["e3_difference"] != 0
    with pytest.raises(ValueError):
        deweger_check((1, 2, 3), (1, 2, 3, 4))


def _ci_input(c, n, r, degs):
    probe = KoszulInput(n=n, r=r, g=len(c), a=-n, dim_quotient=n - len(c), degrees=degs,
                        known=[RationalSeries.zero()] * (r + 2))
    known = [ci_conormal_series(c, n, p) for p in range(probe.needed)]
    return KoszulInput(n=n, r=r, g=len(c), a=-n, dim_quotient=n - len(c), degrees=degs,
                       known=known)


@pytest.mark.parametrize("degs", [(0,) * 6, (3,) * 6, (2, 3, 4, 2, 5, 3)])
def test_solver_recovers_conormal_powers(degs):
    c, n, r = (2, 3), 6, 5
    out = solve_all_powers(_ci_input(c, n, r, degs), 6)
    assert out == [project(ci_conormal_series(c, n, p), n, r) for p in range(7)]


def test_solver_uses_half_the_powers():
    inp = _ci_input((2, 3), 6, 5, (0,) * 6)
    assert inp.q == 4 and inp.needed == 2
    odd = _ci_input((2,), 5, 4, (0,) * 5)
    assert odd.q == 4 and odd.needed == 2
    H = solve_homology(_ci_input((2, 2), 6, 4, (0,) * 5))
    assert len(H) == 4


def test_solver_duality():
    inp = _ci_input((2, 3), 6, 5, (0,) * 6)
    H = solve_homology(inp)
    for p in range(inp.q + 1):
        image = koszul_duality(H[inp.q - p], inp.a, inp.dim_quotient, inp.degrees)
        assert equiv_r(H[p], image, inp.n, inp.r)


def test_solver_rejects_inconsistent_input():
    # with q odd the Euler relation is checked; a wrong a-invariant breaks it
    c, n, r = (2, 3), 6, 4
    inp = _ci_input(c, n, r, (0,) * 5)
    assert inp.q == 3
    solve_homology(inp)
    bad = KoszulInput(n=n, r=r, g=2, a=-n + 1, dim_quotient=n - 2, degrees=(0,) * 5,
                      known=inp.known)
    with pytest.raises(InconsistentInput):
        solve_homology(bad)


def test_koszul_input_validation():
    with pytest.raises(ValueError):
        KoszulInput(n=6, r=5, g=2, a=-6, dim_quotient=4, degrees=(0,) * 5, known=[])
    with pytest.raises(ValueError):
        KoszulInput(n=6, r=5, g=2, a=-6, dim_quotient=4, degrees=(0,) * 6, known=[])
