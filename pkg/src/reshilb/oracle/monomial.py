"""Exact Hilbert series of quotients by monomial ideals."""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable

from ..series import RationalSeries


def _minimalize(gens: Iterable[tuple]) -> tuple:
    gens = sorted(set(gens), key=lambda e: (sum(e), e))
    keep = []
    for g in gens:
        if not any(all(a <= b for a, b in zip(h, g)) for h in keep):
            keep.append(g)
    return tuple(sorted(keep))


def monomial_series(gens: Iterable[tuple], num_vars: int) -> RationalSeries:
    """Series of R / J for the monomial ideal J in num_vars variables.

    Splits on a variable x dividing a non-linear generator:
    [R/J] = [R/(J + x)] + t [R/(J : x)].  Ideals generated by variables are
    the base case.
    """
    return _series(_minimalize(tuple(int(x) for x in g) for g in gens), num_vars)


@lru_cache(maxsize=4096)
def _series(gens: tuple, n: int) -> RationalSeries:
    if any(sum(g) == 0 for g in gens):
        return RationalSeries.zero()
    pivot = None
    for g in gens:
        if sum(g) > 1:
            pivot = next(i for i, a in enumerate(g) if a > 0)
            break
    if pivot is None:
        # generated by k distinct variables
        return RationalSeries.polynomial_ring(n - len(gens))
    x = tuple(1 if i == pivot else 0 for i in range(n))
    plus = _minimalize(gens + (x,))
    colon = _minimalize(tuple(tuple(a - 1 if i == pivot and a > 0 else a for i, a in enumerate(g))
                              for g in gens))
    return _series(plus, n) + _series(colon, n).shift(1)
