"""Symmetric functions of the monomials t^{d_1}, ..., t^{d_s}."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, prod
from typing import Iterable, Sequence

from .series import LaurentPoly


@dataclass(frozen=True)
class DegreeList:
    """Degrees d_1..d_s of a list of forms.

    Entries must be positive, except that the all-zero list is accepted as
    the "zero mode" used for the unweighted version of the Koszul relations.
    """

    d: tuple

    def __init__(self, d: Iterable[int] = ()):
        d = tuple(int(x) for x in d)
        if any(x < 0 for x in d):
            raise ValueError(f"degrees must be nonnegative: {d}")
        if any(x == 0 for x in d) and any(x != 0 for x in d):
            raise ValueError(f"zero degrees are only allowed all together: {d}")
        object.__setattr__(self, "d", d)

    @property
    def s(self) -> int:
        return len(self.d)

    @property
    def zero_mode(self) -> bool:
        return bool(self.d) and all(x == 0 for x in self.d)

    def __iter__(self):
        return iter(self.d)

    def __len__(self):
        return len(self.d)

    def __getitem__(self, i):
        return self.d[i]

    def to_json(self) -> list:
        return list(self.d)


def _degrees(d) -> tuple:
    if isinstance(d, DegreeList):
        return d.d
    return tuple(int(x) for x in d)


def elementary(m: int, degrees) -> LaurentPoly:
    """sigma_m(t^{d_1}, ..., t^{d_s})."""
    d = _degrees(degrees)
    if m < 0 or m > len(d):
        return LaurentPoly()
    # coefficient of z^m in prod (1 + t^{d_i} z)
    layers = [LaurentPoly.const(1)] + [LaurentPoly()] * m
    for di in d:
        mono = LaurentPoly.monomial(di)
        for k in range(m, 0, -1):
            layers[k] = layers[k] + layers[k - 1] * mono
    return layers[m]


def complete(j: int, degrees) -> LaurentPoly:
    """s_j(t^{d_1}, ..., t^{d_s}): sum of all degree-j monomials."""
    d = _degrees(degrees)
    if j < 0:
        return LaurentPoly()
    if j == 0:
        return LaurentPoly.const(1)
    layers = [LaurentPoly.const(1)] + [LaurentPoly()] * j
    for di in d:
        mono = LaurentPoly.monomial(di)
        for k in range(1, j + 1):
            layers[k] = layers[k] + layers[k - 1] * mono
    return layers[j]


def delta(degrees) -> LaurentPoly:
    """prod_i (1 - t^{d_i})."""
    out = LaurentPoly.const(1)
    for di in _degrees(degrees):
        out = out * (LaurentPoly.const(1) - LaurentPoly.monomial(di))
    return out


def sym_poly(kind: str, degrees, k: int = 0) -> LaurentPoly:
    if kind == "elementary":
        return elementary(k, degrees)
    if kind == "complete":
        return complete(k, degrees)
    if kind == "delta":
        return delta(degrees)
    raise ValueError(f"unknown symmetric polynomial kind {kind!r}")


def sigma(m: int, degrees) -> int:
    """Elementary symmetric function of the numbers d_1..d_s."""
    d = _degrees(degrees)
    if m < 0 or m > len(d):
        return 0
    layers = [1] + [0] * m
    for di in d:
        for k in range(m, 0, -1):
            layers[k] += layers[k - 1] * di
    return layers[m]


def taylor_at_one(p: LaurentPoly, order: int) -> list:
    """Coefficients of (t-1)^0..(t-1)^order in the expansion of p about 1."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    return p.taylor_at_one(order)


def _quotient_product(d: Sequence[int]) -> LaurentPoly:
    """prod_j (1 + t + ... + t^{d_j - 1}), so that delta = (1-t)^s times this."""
    out = LaurentPoly.const(1)
    for dj in d:
        out = out * LaurentPoly({e: 1 for e in range(dj)})
    return out


def bezout_c(degrees, k: int) -> int:
    """Coefficient of (1-t)^{k+s} in delta(degrees)."""
    if k < 0:
        return 0
    coeffs = _quotient_product(_degrees(degrees)).taylor_at_one(k)
    return (-1) ** k * coeffs[k]


def binomial_e(degrees, ell: int) -> int:
    """Sum over i_1..i_s >= 1 with i_1 + ... + i_s = ell + s of prod binom(d_j, i_j)."""
    d = _degrees(degrees)
    if ell < 0:
        return 0
    target = ell + len(d)
    # dp[w] = weighted count of partial index vectors summing to w
    dp = [1] + [0] * target
    for dj in d:
        new = [0] * (target + 1)
        for w, v in enumerate(dp):
            if v:
                for i in range(1, target - w + 1):
                    c = comb(dj, i)
                    if c == 0:
                        break
                    new[w + i] += v * c
        dp = new
    return dp[target]


def sigma1_taylor_closed(d) -> list:
    """Closed forms for the Taylor coefficients of sigma_1(t^d) through order 3."""
    d = _degrees(d)
    s, s1, s2, s3 = len(d), sigma(1, d), sigma(2, d), sigma(3, d)
    return [s, s1, Fraction(s1 ** 2 - s1 - 2 * s2, 2),
            Fraction(s1 ** 3 - 3 * s1 ** 2 + 2 * s1 - 3 * s2 * (s1 - 2) + 3 * s3, 6)]


def sigma2_taylor_closed(d) -> list:
    """Closed forms for the Taylor coefficients of sigma_2(t^d) through order 3."""
    d = _degrees(d)
    s, s1, s2, s3 = len(d), sigma(1, d), sigma(2, d), sigma(3, d)
    return [Fraction(s * (s - 1), 2), (s - 1) * s1,
            Fraction((s - 1) * (s1 ** 2 - s1 - 2 * s2) + 2 * s2, 2),
            Fraction((s - 1) * (s1 ** 3 - 3 * s1 ** 2 + 2 * s1)
                     - 3 * (s - 2) * s2 * (s1 - 2) + 3 * (s - 4) * s3, 6)]


def product(d) -> int:
    return prod(_degrees(d))
