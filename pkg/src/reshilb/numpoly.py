"""Numerical polynomials written in the signed binomial basis.

A numerical polynomial of degree at most ``m`` is stored through its
coefficients ``e_0, ..., e_m`` with respect to the basis

    P(t) = sum_i (-1)^i e_i binom(t + m - i, m - i).

This is the form in which Hilbert polynomials are usually reported: ``e_0``
is the multiplicity and the ``e_i`` are the Hilbert coefficients.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Sequence


def binom(a, b: int):
    """Generalized binomial coefficient a(a-1)...(a-b+1)/b!.

    Defined for every integer (or rational) ``a``; zero for ``b < 0``.
    """
    if b < 0:
        return 0
    if isinstance(a, int):
        if a >= 0:
            return comb(a, b)
        # binom(-x, b) = (-1)^b binom(x + b - 1, b)
        return (-1) ** b * comb(b - a - 1, b)
    num = 1
    for i in range(b):
        num *= a - i
    return _normalize(Fraction(num) / factorial(b))


def _normalize(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x.numerator)
    return x


@dataclass(frozen=True)
class NumericalPolynomial:
    m: int
    e: tuple

    def __post_init__(self):
        e = tuple(self.e)
        if self.m < -1:
            raise ValueError(f"degree bound must be >= -1, got {self.m}")
        if len(e) != self.m + 1:
            raise ValueError(f"expected {self.m + 1} coefficients, got {len(e)}")
        for c in e:
            if isinstance(c, Fraction) and c.denominator != 1:
                raise ValueError(f"coefficients must be integers, got {c}")
        object.__setattr__(self, "e", tuple(int(c) for c in e))

    def __call__(self, t):
        return sum((-1) ** i * c * binom(t + self.m - i, self.m - i)
                   for i, c in enumerate(self.e))

    def values(self, start: int, count: int) -> list:
        return [self(start + k) for k in range(count)]

    def reflect(self, d: int) -> "NumericalPolynomial":
        return reflect(self, d)

    def rebase(self, m: int) -> "NumericalPolynomial":
        return rebase(self, m)

    def trimmed(self) -> "NumericalPolynomial":
        """Smallest degree bound representing the same polynomial."""
        P = self
        while P.m >= 0 and P.e[0] == 0:
            # inverse of the rebase shift
            P = NumericalPolynomial(P.m - 1, tuple(-c for c in P.e[1:]))
        return P

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.e)

    def to_json(self) -> dict:
        return {"m": self.m, "e": list(self.e)}

    @classmethod
    def from_json(cls, obj) -> "NumericalPolynomial":
        return cls(int(obj["m"]), tuple(obj["e"]))

    @classmethod
    def from_values(cls, start: int, values: Sequence[int], m: int | None = None):
        """Interpolate through ``values`` taken at ``start, start+1, ...``.

        The degree bound defaults to ``len(values) - 1``. Raises ValueError if
        the interpolant is not integer valued.
        """
        if m is None:
            m = len(values) - 1
        if len(values) < m + 1:
            raise ValueError("not enough values for the requested degree bound")
        if m < 0:
            return cls(-1, ())
        diffs = [Fraction(v) for v in values[: m + 1]]
        newton = []
        for _ in range(m + 1):
            newton.append(diffs[0])
            diffs = [b - a for a, b in zip(diffs, diffs[1:])]

        def at(t):
            return sum(c * binom(t - start, k) for k, c in enumerate(newton))

        # sum_{t>=0} P(t) z^t = sum_i (-1)^i e_i / (1-z)^(m+1-i), so the
        # numerator (1-z)^(m+1) * sum_{t<=m} P(t) z^t, truncated at z^m, has
        # Taylor coefficients e_i at z = 1.
        vals = [at(t) for t in range(m + 1)]
        num = [sum((-1) ** k * comb(m + 1, k) * vals[j - k] for k in range(j + 1))
               for j in range(m + 1)]
        e = []
        for i in range(m + 1):
            c = sum(a * binom(j, i) for j, a in enumerate(num))
            if c.denominator != 1:
                raise ValueError("interpolant is not a numerical polynomial")
            e.append(int(c))
        return cls(m, tuple(e))


def reflect(P: NumericalPolynomial, d: int) -> NumericalPolynomial:
    """Return Q with Q(t) = P(-t + d), in the same basis."""
    m = P.m
    h = []
    for i in range(m + 1):
        acc = sum((-1) ** k * binom(d + m + 1 - k, i - k) * P.e[k] for k in range(i + 1))
        h.append((-1) ** m * acc)
    return NumericalPolynomial(m, tuple(h))


def evaluate(P: NumericalPolynomial, t0):
    return P(t0)


def rebase(P: NumericalPolynomial, m: int) -> NumericalPolynomial:
    """Re-express ``P`` with degree bound ``m >= P.m``.

    Raising the bound by one maps (e_0, ..., e_m) to (0, -e_0, ..., -e_m).
    """
    if m < P.m:
        raise ValueError(f"cannot rebase from degree bound {P.m} down to {m}")
    shift = m - P.m
    sign = (-1) ** shift
    return NumericalPolynomial(m, (0,) * shift + tuple(sign * c for c in P.e))
