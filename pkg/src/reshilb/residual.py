"""Residual intersections: exact Hilbert series and Hilbert coefficients.

Notation: R is a graded ring of dimension n, I an ideal of height g, and
f_1..f_s forms in I of degrees d_1..d_s generating A = (f_1..f_s).  The
residual is A : I.  Every result here is an exact formula; whether the
ring-theoretic hypotheses hold is the caller's responsibility.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, prod
from typing import Mapping, Sequence

from .numpoly import binom
from .series import RationalSeries, decompose, substitute_inverse
from .symfunc import DegreeList, delta as delta_poly, elementary, sigma, binomial_e

# "canonical" variants take omega / I^j omega, "polynomial" variants take R / I^j
# over a polynomial ring.  "quotient" describes R/A, "ideal" I/A, "residual" R/(A:I).
SERIES_VARIANTS = ("canonical-quotient", "canonical-residual",
                   "polynomial-quotient", "polynomial-residual")
COEFF_VARIANTS = ("canonical-ideal", "canonical-residual",
                  "polynomial-ideal", "polynomial-residual")


class MissingCoefficient(ValueError):
    """An e-vector needed by a formula was not supplied or is too short."""


@dataclass(frozen=True)
class ResidualInput:
    n: int
    g: int
    s: int
    r: int
    degrees: DegreeList
    series_R: RationalSeries | None = None
    # j -> series of omega / I^j omega, or of R / I^j in polynomial-ring mode
    powers: Mapping[int, RationalSeries] = field(default_factory=dict)
    polynomial_ring: bool = False

    def __post_init__(self):
        degrees = self.degrees if isinstance(self.degrees, DegreeList) else DegreeList(self.degrees)
        object.__setattr__(self, "degrees", degrees)
        if len(degrees) != self.s:
            raise ValueError(f"expected {self.s} degrees, got {len(degrees)}")
        if not 1 <= self.g <= self.s:
            raise ValueError(f"need 1 <= g <= s, got g={self.g}, s={self.s}")
        if self.series_R is None:
            if not self.polynomial_ring:
                raise ValueError("the series of R is required outside polynomial-ring mode")
            object.__setattr__(self, "series_R", RationalSeries.polynomial_ring(self.n))

    def power(self, j: int) -> RationalSeries:
        try:
            return self.powers[j]
        except KeyError:
            kind = "R/I^j" if self.polynomial_ring else "omega/I^j omega"
            raise MissingCoefficient(f"series of {kind} for j={j} not supplied") from None


def series_residual(variant: str, inp: ResidualInput) -> RationalSeries:
    """Right-hand side of the residual Hilbert-series formula.

    The "quotient" variants describe R/A, the "residual" ones R/(A:I); the
    "canonical" forms use omega/I^j omega, the "polynomial" forms R/I^j over
    a polynomial ring.  The result is congruent to the true series at level r.
    """
    if variant not in SERIES_VARIANTS:
        raise ValueError(f"unknown series variant {variant!r}")
    n, g, s, d = inp.n, inp.g, inp.s, inp.degrees
    poly = variant.startswith("polynomial")
    if poly and not inp.polynomial_ring:
        raise ValueError(f"variant {variant} needs polynomial-ring mode")
    if not poly and inp.polynomial_ring:
        raise ValueError(f"variant {variant} needs omega/I^j omega series")
    b = variant.endswith("residual")
    top = s - g + 1 if b else s - g
    total = RationalSeries(delta_poly(d)) * inp.series_R
    correction = RationalSeries.zero()
    for j in range(1, top + 1):
        m = g + j - 1 if b else g + j
        sign = (-1) ** (j - 1) if b else (-1) ** j
        if poly:
            sign = (-1) ** (m % 2)  # (-1)^{g+j} resp. (-1)^{g+j-1}
        term = RationalSeries(elementary(m, d)) * substitute_inverse(inp.power(j))
        correction = correction + term * sign
    if not poly:
        prefactor = RationalSeries.const((-1) ** ((n - g) % 2))
    else:
        prefactor = RationalSeries.monomial(-n, (-1) ** (n % 2))  # (-t)^{-n}
    return total - prefactor * correction


@dataclass(frozen=True)
class CoeffInput:
    """Discrete data plus e-vectors for the residual coefficient formulas.

    ``powers[j]`` holds e_k(omega/I^j omega) (or e_k(R/I^j) in polynomial-ring
    mode), each normalized at the module's own dimension.  ``e_quotient`` is
    e_k(R/I); it defaults to ``powers[1]`` in polynomial-ring mode.
    """

    n: int
    g: int
    s: int
    r: int
    degrees: DegreeList
    powers: Mapping[int, Sequence[int]]
    e_R: Sequence[int] = (1,)
    e_quotient: Sequence[int] | None = None
    polynomial_ring: bool = False

    def __post_init__(self):
        degrees = self.degrees if isinstance(self.degrees, DegreeList) else DegreeList(self.degrees)
        object.__setattr__(self, "degrees", degrees)
        if len(degrees) != self.s:
            raise ValueError(f"expected {self.s} degrees, got {len(degrees)}")
        if not 1 <= self.g <= self.s:
            raise ValueError(f"need 1 <= g <= s, got g={self.g}, s={self.s}")
        object.__setattr__(self, "powers", {int(j): tuple(v) for j, v in self.powers.items()})
        if self.polynomial_ring:
            object.__setattr__(self, "e_R", (1,))
            if self.e_quotient is None and 1 in self.powers:
                object.__setattr__(self, "e_quotient", self.powers[1])

    @property
    def delta(self) -> int:
        return self.s - self.g

    def e_power(self, j: int, k: int):
        vec = self.powers.get(j)
        if vec is None:
            raise MissingCoefficient(f"e-vector for power j={j} not supplied")
        return _entry(vec, k, f"power j={j}")

    def e_ring(self, k: int):
        if self.polynomial_ring:
            return 1 if k == 0 else 0
        return _entry(self.e_R, k, "R")

    def e_quot(self, k: int):
        if self.e_quotient is None:
            raise MissingCoefficient("e-vector of R/I not supplied")
        return _entry(self.e_quotient, k, "R/I")


def _entry(vec, k, label):
    if k < 0:
        return 0
    if k >= len(vec):
        raise MissingCoefficient(f"e_{k} of {label} needed but only {len(vec)} entries given")
    return vec[k]


def subset_sum_counts(degrees, m: int) -> dict:
    """Map w -> number of m-element subsets of the degree list with sum w."""
    layers = [{0: 1}] + [dict() for _ in range(m)]
    for di in degrees:
        for k in range(m, 0, -1):
            src = layers[k - 1]
            dst = layers[k]
            for w, c in src.items():
                dst[w + di] = dst.get(w + di, 0) + c
    return layers[m]


def _subset_binomial_sum(degrees, m: int, shift: int, bottom: int) -> int:
    """sum over m-subsets S of binom(d_S + shift, bottom)."""
    return sum(c * binom(w + shift, bottom) for w, c in subset_sum_counts(degrees, m).items())


def coeff_residual(variant: str, inp: CoeffInput, i: int) -> int:
    """e_i^{n-s} of I/A ("ideal" variants) or of R/(A:I) ("residual" variants)."""
    if variant not in COEFF_VARIANTS:
        raise ValueError(f"unknown coefficient variant {variant!r}")
    if not 0 <= i <= inp.r - inp.s:
        raise ValueError(f"index i={i} outside the valid range [0, {inp.r - inp.s}]")
    poly = variant.startswith("polynomial")
    if poly and not inp.polynomial_ring:
        raise ValueError(f"variant {variant} needs polynomial-ring mode")
    if not poly and inp.polynomial_ring:
        raise ValueError(f"variant {variant} needs omega/I^j omega e-vectors")
    g, s, dl = inp.g, inp.s, inp.degrees.d
    dlt = s - g
    shift = -g if poly else inp.n - g
    b = variant.endswith("residual")
    value = sum(binomial_e(dl, i - k) * inp.e_ring(k) for k in range(i + 1))
    top = dlt + 1 if b else dlt
    inner = 0
    for j in range(1, top + 1):
        m = g + j - 1 if b else g + j
        for k in range(dlt + i + 1):
            T = _subset_binomial_sum(dl, m, shift - k, i + dlt - k)
            if T:
                inner += (-1) ** (j + k) * T * inp.e_power(j, k)
    sgn = (-1) ** dlt
    if b:
        return value + sgn * inner
    return value - sgn * inp.e_quot(dlt + i) - sgn * inner


def codimension_criterion(inp: CoeffInput) -> tuple:
    """Margin of the codimension criterion for the residual; zero means it holds."""
    if inp.r < inp.s:
        raise ValueError("the criterion needs r >= s")
    g, s, dl = inp.g, inp.s, inp.degrees.d
    dlt = s - g
    shift = -g if inp.polynomial_ring else inp.n - g
    lhs = (-1) ** dlt * inp.e_ring(0) * prod(dl)
    rhs = inp.e_quot(dlt)
    for j in range(1, dlt + 1):
        for k in range(dlt + 1):
            T = _subset_binomial_sum(dl, g + j, shift - k, dlt - k)
            if T:
                rhs += (-1) ** (j + k) * T * inp.e_power(j, k)
    margin = lhs - rhs
    return margin, margin == 0


def residual_coefficient(S: RationalSeries, n: int, s: int, i: int) -> int:
    """Read e_i^{n-s} off a series congruent to one of dimension n - s."""
    if S.pole > n:
        raise ValueError(f"series has pole order {S.pole} > n = {n}")
    return (-1) ** s * decompose(S, n).coefficient(i + s)


@dataclass(frozen=True)
class DegreeData:
    """Inputs of the closed degree formulas.

    ``sigmas`` are the elementary symmetric functions of the numbers d_i
    (index 0..3) and ``sigma_s`` their product; ``e`` holds e_i(0), the
    coefficients of R/I, and ``e_prime`` maps i -> e'_i(1), the coefficients
    of R/I^2.
    """

    g: int
    sigma_s: int
    sigmas: tuple
    e: tuple
    e_prime: Mapping[int, int] = field(default_factory=dict)

    @classmethod
    def from_degrees(cls, g, degrees, e, e_prime=None):
        d = tuple(degrees)
        return cls(g, prod(d), tuple(sigma(k, d) for k in range(4)), tuple(e), dict(e_prime or {}))

    def sig(self, k: int) -> int:
        if k < len(self.sigmas):
            return self.sigmas[k]
        raise MissingCoefficient(f"sigma_{k} not supplied")

    def ei(self, k: int) -> int:
        return _entry(self.e, k, "R/I")

    def ep(self, k: int) -> int:
        if k not in self.e_prime:
            raise MissingCoefficient(f"e'_{k}(1) not supplied")
        return self.e_prime[k]


def degree_delta(delta: int, data: DegreeData, variant: str = "corrected") -> int:
    """Degree of the residual from closed forms in delta = s - g.

    ``variant`` selects between two coefficient patterns for delta = 2, 3:
    "classical" is the older transcription, "corrected" the one that agrees
    with the general coefficient formula.  For delta <= 1 they coincide.
    """
    if variant not in ("classical", "corrected"):
        raise ValueError(f"unknown variant {variant!r}")
    g, ss = data.g, data.sigma_s
    if delta == 0:
        return ss - data.ei(0)
    if delta == 1:
        return ss - (data.sig(1) - g) * data.ei(0) + 2 * data.ei(1)
    s1, s2 = data.sig(1), data.sig(2)
    s3 = data.sig(3) if delta == 3 or variant == "classical" else 0
    if delta == 2:
        if variant == "classical":
            lead = s3 - g * s2 + comb(g + 1, 1)
        else:
            lead = s2 - g * s1 + comb(g + 1, 2)
        return (ss - lead * data.ei(0) + (2 * s1 - (g + 1)) * data.ei(1)
                + (g + 1) * data.ei(2) - data.ep(2))
    if delta == 3:
        lead = s3 - g * s2 + comb(g + 1, 2) * s1 - comb(g + 2, 3)
        e1_sign, e3_coeff = (-1, 2 * (g + 1)) if variant == "classical" else (1, -2 * (g + 3))
        return (ss - lead * data.ei(0) + e1_sign * (2 * s2 - (g + 1) * s1) * data.ei(1)
                + ((g + 1) * s1 - (g + 2) * (g + 3)) * data.ei(2)
                - (s1 - (g + 2)) * data.ep(2) + e3_coeff * data.ei(3) + 2 * data.ep(3))
    raise ValueError(f"closed forms exist only for delta <= 3, got {delta}")
