"""Hilbert series of the graded pieces I^p / I^{p+1} of powers of an ideal.

Two independent routes are provided:

* the Koszul route: the series of the Koszul homology modules H_i on r + 1
  forms in I determine every I^p/I^{p+1} up to equivalence at level r, and
  duality plus the Euler relation let one recover all H_i from the first few
  powers;
* closed forms in the Hilbert coefficients, together with the exact series of
  a complete intersection, which serves as ground truth.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import prod
from typing import Sequence

from .numpoly import binom
from .series import LaurentPoly, RationalSeries, decompose, equiv_r, project, substitute_inverse
from .symfunc import DegreeList, complete, delta as delta_poly, sigma


class InconsistentInput(ValueError):
    """The supplied series violate a relation they are required to satisfy."""


# --- complete intersections -------------------------------------------------

def ci_quotient_series(ci_degrees, n: int) -> RationalSeries:
    """Series of R/I for a complete intersection in n variables."""
    return RationalSeries(delta_poly(ci_degrees), n)


def ci_conormal_series(ci_degrees, n: int, p: int) -> RationalSeries:
    """Series of I^p/I^{p+1}: Sym^p of a free module over R/I."""
    return RationalSeries(complete(p, ci_degrees)) * ci_quotient_series(ci_degrees, n)


def ci_conormal_series_enumerated(ci_degrees, n: int, p: int) -> RationalSeries:
    """Same as ci_conormal_series, summing t^{a.d} over exponent vectors explicitly."""
    d = tuple(ci_degrees)
    num = LaurentPoly({})
    for combo in combinations_with_replacement(range(len(d)), p):
        num = num + LaurentPoly.monomial(sum(d[i] for i in combo))
    return RationalSeries(num) * ci_quotient_series(d, n)


def ci_power_quotient_series(ci_degrees, n: int, j: int) -> RationalSeries:
    """Series of R/I^j for a complete intersection."""
    total = RationalSeries.zero()
    for p in range(j):
        total = total + ci_conormal_series(ci_degrees, n, p)
    return total


def ci_conormal_e(ci_degrees, p: int, length: int = 4) -> tuple:
    """e_0..e_{length-1} of I^p/I^{p+1} at the dimension of R/I.

    The values do not depend on the number of variables.
    """
    g = len(ci_degrees)
    S = ci_conormal_series(ci_degrees, g, p)
    dec = decompose(S, 0)
    return tuple(dec.coefficient(i) for i in range(length))


@dataclass(frozen=True)
class CIData:
    g: int
    ci_degrees: tuple

    def __post_init__(self):
        object.__setattr__(self, "ci_degrees", tuple(int(x) for x in self.ci_degrees))
        if len(self.ci_degrees) != self.g:
            raise ValueError(f"expected {self.g} degrees, got {len(self.ci_degrees)}")

    @property
    def sigmas(self) -> tuple:
        return tuple(sigma(k, self.ci_degrees) for k in range(4))

    @property
    def alphas(self) -> tuple:
        g = self.g
        _, s1, s2, s3 = self.sigmas
        return (s1 - g, s1 ** 2 - 2 * s2 - g, s1 ** 3 - 3 * s1 * s2 + 3 * s3 - g)


def ci_base_coeffs(data: CIData) -> tuple:
    """e_0(0)..e_3(0) of a complete intersection from its degrees."""
    sg = prod(data.ci_degrees)
    a1, a2, _ = data.alphas
    vals = (Fraction(sg),
            Fraction(sg, 2) * a1,
            Fraction(sg, 24) * (3 * a1 ** 2 - 6 * a1 + a2),
            Fraction(sg, 48) * (a1 ** 3 - 6 * a1 ** 2 + 8 * a1 + a1 * a2 - 2 * a2))
    return tuple(_integer(v, "ci_base_coeffs") for v in vals)


def e3_from_lower(e0, e1, e2, variant: str = "corrected") -> Fraction:
    """e_3 of a complete intersection of dimension >= 3 from e_0, e_1, e_2.

    The "classical" variant is the textbook expression
    e_2 - e_1 e_2/e_0 + e_1/6 - e_1^2/(2 e_0) + e_1^3/(3 e_0^2); on complete
    intersections it evaluates to -e_3 (a quartic hypersurface gives -1
    where e_3 = 1).  "corrected" returns its negative, which is e_3.
    """
    if variant not in ("classical", "corrected"):
        raise ValueError(f"unknown variant {variant!r}")
    e0, e1, e2 = Fraction(e0), Fraction(e1), Fraction(e2)
    if e0 == 0:
        raise ZeroDivisionError("e0 must be nonzero")
    value = e2 - e1 * e2 / e0 + e1 / 6 - e1 ** 2 / (2 * e0) + e1 ** 3 / (3 * e0 ** 2)
    return value if variant == "classical" else -value


def _integer(v: Fraction, where: str) -> int:
    if v.denominator != 1:
        raise ArithmeticError(f"{where}: non-integer value {v}")
    return int(v.numerator)


def conormal_closed_forms(g: int, base: Sequence[int], p: int, variant: str = "corrected") -> tuple:
    """e_0(p)..e_3(p) of I^p/I^{p+1} from the six base values.

    ``base`` is (e_0(0), e_1(0), e_2(0), e_2(1), e_3(0), e_3(1)).  The
    "classical" variant keeps the older transcription of the e_2 and e_3
    formulas, which fails for p >= 2 or 3; "corrected" is exact for complete
    intersections.
    """
    if p < 0:
        raise ValueError("p must be nonnegative")
    if variant not in ("classical", "corrected"):
        raise ValueError(f"unknown variant {variant!r}")
    e00, e10, e20, e21, e30, e31 = (Fraction(x) for x in base)
    C = binom
    F = Fraction
    e0 = C(g + p - 1, p) * e00
    e1 = g * C(g + p - 1, p - 1) * e00 + F(g + 2 * p, g + p) * C(g + p, p) * e10
    if variant == "corrected":
        e2 = (F(g * (g + 1), 2) * C(g + p - 1, p - 2) * e00
              + (g + 1) * C(g + p - 1, p - 2) * e10
              - F((p - 1) * g, g + p) * C(g + p + 1, p) * e20
              + C(g + p, p - 1) * e21)
        e3 = (F(g * (g + 1) * (g + 2), 6) * C(g + p - 1, p - 3) * e00
              - F((g + 1) * (g + 2), 2) * C(g + p - 1, p - 2) * e10
              - F(p * (p - 1) * (g + 2), g + p) * C(g + p + 1, p) * e20
              + (g + 2) * C(g + p, p - 2) * e21
              - F((p - 1) * (g + 2 * p), g + p) * C(g + p + 1, p) * e30
              + F(g + 2 * p, g + 2) * C(g + p, p - 1) * e31)
    else:
        e2 = (F(g * (g + 1), 2) * C(g + p - 1, p - 2) * e00
              + (g + 1) * C(g + p - 2, p - 2) * e10
              - F((p - 1) * g, g + p) * C(g + p + 1, p) * e20
              + C(g + p, p - 1) * e21)
        e3 = (F(g * (g + 1) * (g + 2), 6) * C(g + p - 1, p - 3) * e00
              - F((g + 1) * (g + 2), 2) * C(g + p - 1, p - 2) * e10
              - F(p * (p - 1) * (g + 2), g + p) * C(g + p + 1, p - 2) * e20
              + (g + 2) * C(g + p, p - 2) * e21
              + F((p - 1) * (g + 2 * p), g + p) * C(g + p + 1, p) * e30
              + F(g + 2 * p, g + 2) * C(g + p, p - 1) * e31)
    return tuple(_integer(Fraction(v), "conormal_closed_forms") for v in (e0, e1, e2, e3))


def deweger_check(pair_a, pair_b) -> dict:
    """Compare two degree lists of length 4 as complete intersections."""
    a, b = tuple(pair_a), tuple(pair_b)
    if len(a) != 4 or len(b) != 4:
        raise ValueError("both degree lists must have length 4")
    sa = [sigma(k, a) for k in range(1, 5)]
    sb = [sigma(k, b) for k in range(1, 5)]
    pattern = sa[0] == sb[0] and sa[1] == sb[1] and sa[3] == sb[3] and sa[2] != sb[2]
    base_a = ci_conormal_e(a, 0)
    base_b = ci_conormal_e(b, 0)
    e3a = ci_conormal_e(a, 1)[3]
    e3b = ci_conormal_e(b, 1)[3]
    return {"sigmas_a": sa, "sigmas_b": sb, "pattern": pattern,
            "base_a": list(base_a), "base_b": list(base_b),
            "base_equal": base_a == base_b,
            "e3_conormal_a": e3a, "e3_conormal_b": e3b,
            "e3_difference": e3a - e3b}


# --- Koszul route -----------------------------------------------------------

def koszul_relation(p: int, h_series: Sequence[RationalSeries], degrees) -> RationalSeries:
    """sum_{i=0}^{p} (-1)^i s_{p-i}(t^d) [H_i], with H_i = 0 beyond the list."""
    if len(h_series) <= p and not getattr(h_series, "complete", False):
        raise ValueError(f"need the series of H_0..H_{p}, got {len(h_series)}")
    total = RationalSeries.zero()
    for i in range(min(p, len(h_series) - 1) + 1):
        total = total + RationalSeries(complete(p - i, degrees)) * h_series[i] * ((-1) ** i)
    return total


class HomologyList(list):
    """List of Koszul homology series known to vanish beyond its length."""

    complete = True


def koszul_duality(h_opposite: RationalSeries, a: int, dim_quotient: int, degrees) -> RationalSeries:
    """t^{a + sum d} (-1)^{dim R/I} H(1/t)."""
    shift = a + sum(DegreeList(degrees).d)
    return substitute_inverse(h_opposite).shift(shift) * ((-1) ** dim_quotient)


@dataclass(frozen=True)
class KoszulInput:
    n: int
    r: int
    g: int
    a: int
    dim_quotient: int
    degrees: DegreeList
    known: tuple
    series_R: RationalSeries | None = None

    def __post_init__(self):
        degrees = self.degrees if isinstance(self.degrees, DegreeList) else DegreeList(self.degrees)
        object.__setattr__(self, "degrees", degrees)
        object.__setattr__(self, "known", tuple(self.known))
        if len(degrees) != self.r + 1:
            raise ValueError(f"expected r + 1 = {self.r + 1} degrees, got {len(degrees)}")
        if self.q < 0:
            raise ValueError("need r + 1 >= g")
        if len(self.known) < self.needed:
            raise ValueError(f"need the series of I^p/I^(p+1) for p < {self.needed}, "
                             f"got {len(self.known)}")
        if self.series_R is None:
            object.__setattr__(self, "series_R", RationalSeries.polynomial_ring(self.n))

    @property
    def q(self) -> int:
        return self.r + 1 - self.g

    @property
    def needed(self) -> int:
        """Number of initial powers the solver consumes: floor((q-1)/2) + 1."""
        return (self.q - 1) // 2 + 1


def solve_homology(inp: KoszulInput) -> list:
    """Series of H_0..H_q, exact up to equivalence at level r."""
    q, d = inp.q, inp.degrees
    H: list = [None] * (q + 1)
    half = (q - 1) // 2
    for p in range(half + 1):
        acc = inp.known[p]
        for i in range(p):
            acc = acc - RationalSeries(complete(p - i, d)) * H[i] * ((-1) ** i)
        H[p] = acc * ((-1) ** p)
    for p in range(half + 1):
        H[q - p] = koszul_duality(H[p], inp.a, inp.dim_quotient, d)
    euler_target = RationalSeries(delta_poly(d)) * inp.series_R
    if q % 2 == 0:
        mid = q // 2
        rest = RationalSeries.zero()
        for p in range(q + 1):
            if p != mid:
                rest = rest + H[p] * ((-1) ** p)
        H[mid] = (euler_target - rest) * ((-1) ** mid)
        image = koszul_duality(H[mid], inp.a, inp.dim_quotient, d)
        if not equiv_r(H[mid], image, inp.n, inp.r):
            raise InconsistentInput("the middle homology is not self-dual at level r")
    else:
        alt = RationalSeries.zero()
        for p in range(q + 1):
            alt = alt + H[p] * ((-1) ** p)
        if not equiv_r(alt, euler_target, inp.n, inp.r):
            raise InconsistentInput("the Euler relation fails at level r")
    return HomologyList(H)


def solve_all_powers(inp: KoszulInput, pmax: int) -> list:
    """Classes at level r of I^p/I^{p+1} for p = 0..pmax."""
    H = solve_homology(inp)
    return [project(koszul_relation(p, H, inp.degrees), inp.n, inp.r) for p in range(pmax + 1)]
