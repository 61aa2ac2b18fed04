"""Graded pieces of polynomial ideals by brute-force linear algebra.

A homogeneous ideal is given by generators; its degree-d piece is spanned by
all monomial multiples of generators landing in degree d, and its dimension
is the rank of that spanning set.  Colon ideals A : I are computed degree by
degree from the condition f * g in A for every generator g of I.  No Groebner
bases are involved.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb
from typing import Iterable, Mapping, Sequence

import numpy as np

from ..numpoly import NumericalPolynomial
from ..series import LaurentPoly, RationalSeries
from .linalg import DEFAULT_PRIME, Field, RATIONALS, rank, reduce_modulo

MAX_RETRIES = 5


class NotStabilized(RuntimeError):
    """The Hilbert function did not become polynomial within the computed range."""


class GenericityFailure(RuntimeError):
    """Random choices stayed degenerate after the allowed number of retries."""


class OracleMismatch(RuntimeError):
    """Prime-field and rational computations disagree."""


# --- polynomials ---------------------------------------------------------------

@lru_cache(maxsize=None)
def monomials(nvars: int, d: int) -> tuple:
    """Exponent vectors of degree d, in a fixed (reverse lexicographic) order."""
    if d < 0:
        return ()
    if nvars == 0:
        return ((),) if d == 0 else ()
    out = []
    for first in range(d, -1, -1):
        for rest in monomials(nvars - 1, d - first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def monomial_index(nvars: int, d: int) -> dict:
    return {m: i for i, m in enumerate(monomials(nvars, d))}


def dim_R(nvars: int, d: int) -> int:
    return comb(d + nvars - 1, nvars - 1) if d >= 0 else 0


@dataclass(frozen=True)
class Generator:
    deg: int
    terms: Mapping[tuple, int]

    def __post_init__(self):
        terms = {tuple(int(x) for x in e): int(c) for e, c in dict(self.terms).items() if c}
        for e in terms:
            if sum(e) != self.deg:
                raise ValueError(f"term {e} does not have degree {self.deg}")
        object.__setattr__(self, "terms", terms)

    @property
    def nvars(self) -> int:
        return len(next(iter(self.terms))) if self.terms else 0

    def times(self, other: "Generator") -> "Generator":
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Generator(self.deg + other.deg, out)

    def to_json(self) -> dict:
        return {"deg": self.deg, "terms": [[list(e), c] for e, c in sorted(self.terms.items())]}

    @classmethod
    def from_json(cls, obj) -> "Generator":
        return cls(int(obj["deg"]), {tuple(e): int(c) for e, c in obj["terms"]})


@dataclass(frozen=True)
class IdealPresentation:
    num_vars: int
    generators: tuple
    field: Field = Field(DEFAULT_PRIME)
    seed: int = 0

    def __post_init__(self):
        gens = tuple(g if isinstance(g, Generator) else Generator(*g) for g in self.generators)
        for g in gens:
            if g.terms and g.nvars != self.num_vars:
                raise ValueError("generator uses the wrong number of variables")
        object.__setattr__(self, "generators", tuple(g for g in gens if g.terms))

    @property
    def degrees(self) -> tuple:
        return tuple(g.deg for g in self.generators)

    def with_field(self, field: Field) -> "IdealPresentation":
        return IdealPresentation(self.num_vars, self.generators, field, self.seed)

    def power(self, j: int) -> "IdealPresentation":
        """Generators of I^j: all j-fold products of generators."""
        if j < 1:
            raise ValueError("power must be >= 1")
        gens = []
        for combo in combinations_with_replacement(self.generators, j):
            prod_g = combo[0]
            for g in combo[1:]:
                prod_g = prod_g.times(g)
            gens.append(prod_g)
        return IdealPresentation(self.num_vars, tuple(gens), self.field, self.seed)

    def to_json(self) -> dict:
        return {"vars": self.num_vars, "field": self.field.to_json(), "seed": self.seed,
                "gens": [g.to_json() for g in self.generators]}

    @classmethod
    def from_json(cls, obj) -> "IdealPresentation":
        return cls(int(obj["vars"]), tuple(Generator.from_json(g) for g in obj["gens"]),
                   Field.from_json(obj.get("field", {"prime": DEFAULT_PRIME})),
                   int(obj.get("seed", 0)))


def span_matrix(gens: Sequence[Generator], nvars: int, d: int, field: Field) -> np.ndarray:
    """Rows: coefficient vectors of m * g for generators g and monomials m, in degree d."""
    cols = monomial_index(nvars, d)
    rows = []
    for g in gens:
        if g.deg > d:
            continue
        for m in monomials(nvars, d - g.deg):
            row = {}
            for e, c in g.terms.items():
                row[cols[tuple(a + b for a, b in zip(m, e))]] = c
            rows.append(row)
    return _dense(rows, len(cols), field)


def _dense(rows: list, ncols: int, field: Field) -> np.ndarray:
    big = any(abs(c) >= 2 ** 62 for r in rows for c in r.values()) if field.is_rational else False
    out = np.zeros((len(rows), ncols), dtype=object if big else np.int64)
    for i, r in enumerate(rows):
        for j, c in r.items():
            out[i, j] = field.reduce(c)
    return out


def graded_dim(ideal: IdealPresentation, d: int) -> int:
    """Dimension of the degree-d piece of the ideal."""
    if d < 0:
        return 0
    return rank(span_matrix(ideal.generators, ideal.num_vars, d, ideal.field), ideal.field)


# --- tables and fitting -------------------------------------------------------

@dataclass(frozen=True)
class HilbertFunctionTable:
    values: tuple
    stabilization: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        if any(v < 0 for v in self.values):
            raise ValueError("Hilbert function values must be nonnegative")

    @property
    def dmax(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, d):
        return self.values[d]

    def __len__(self):
        return len(self.values)

    def to_json(self) -> dict:
        return {"values": list(self.values), "stabilization": self.stabilization}


def fit_hilbert_polynomial(table: HilbertFunctionTable | Sequence[int], dim: int) -> NumericalPolynomial:
    """Polynomial of degree dim - 1 through the tail of the table.

    The fit uses the last ``dim`` values and must reproduce the last
    ``dim + 2`` values; otherwise NotStabilized is raised.
    """
    values = tuple(table.values if isinstance(table, HilbertFunctionTable) else table)
    need = dim + 2
    if len(values) < need:
        raise NotStabilized(f"need at least {need} values, table has {len(values)}")
    start = len(values) - max(dim, 1)
    try:
        Q = NumericalPolynomial.from_values(start, values[start:], dim - 1) if dim > 0 \
            else NumericalPolynomial(-1, ())
    except ValueError as exc:
        raise NotStabilized(str(exc)) from None
    lo = len(values) - need
    if any(Q(d) != values[d] for d in range(lo, len(values))):
        raise NotStabilized(f"tail {values[lo:]} is not a polynomial of degree {dim - 1}")
    return Q


def stabilization_degree(values: Sequence[int], Q: NumericalPolynomial) -> int:
    d0 = len(values)
    while d0 > 0 and Q(d0 - 1) == values[d0 - 1]:
        d0 -= 1
    return d0


def series_from_table(values: Sequence[int], Q: NumericalPolynomial) -> RationalSeries:
    """Exact series assuming the Hilbert function equals Q beyond the table."""
    tail = RationalSeries.zero()
    for i, c in enumerate(Q.e):
        tail = tail + RationalSeries(LaurentPoly.const((-1) ** i * c), Q.m + 1 - i)
    head = LaurentPoly({d: values[d] - Q(d) for d in range(len(values))})
    return tail + RationalSeries(head)


def _run(fn, degrees: Iterable[int], workers: int) -> list:
    degrees = list(degrees)
    if workers <= 1:
        return [fn(d) for d in degrees]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, degrees))


def hilbert_function_quotient(ideal: IdealPresentation, power: int, dmax: int,
                              workers: int = 1) -> HilbertFunctionTable:
    """Hilbert function of R / I^power in degrees 0..dmax."""
    if dmax < 0:
        raise ValueError("dmax must be nonnegative")
    J = ideal.power(power) if ideal.generators else ideal
    n = ideal.num_vars
    vals = _run(lambda d: dim_R(n, d) - graded_dim(J, d), range(dmax + 1), workers)
    return HilbertFunctionTable(tuple(vals))


def colon_hilbert_function(A: IdealPresentation, Igens: Sequence[Generator], dmax: int,
                           workers: int = 1) -> HilbertFunctionTable:
    """Hilbert function of R / (A : I) in degrees 0..dmax.

    For each degree d the colon piece is the kernel of R_d -> sum_i
    R_{d+deg g_i} / A_{d+deg g_i}, f -> (f g_i), so its codimension is the
    rank of that map.  Products f g_i are reduced against an echelon basis
    of A in the target degree before the rank is taken.
    """
    n, fld = A.num_vars, A.field
    Igens = tuple(g if isinstance(g, Generator) else Generator(*g) for g in Igens)

    def one(d: int) -> int:
        src = monomials(n, d)
        reduced = []
        for e in sorted({g.deg for g in Igens}):
            cols = monomial_index(n, d + e)
            blocks = []
            for g in (g for g in Igens if g.deg == e):
                rows = [{cols[tuple(a + b for a, b in zip(m, x))]: c for x, c in g.terms.items()}
                        for m in src]
                blocks.append(_dense(rows, len(cols), fld))
            reduced += reduce_modulo(span_matrix(A.generators, n, d + e, fld), blocks, fld)
        return rank(np.hstack(reduced), fld) if reduced else 0

    vals = _run(one, range(dmax + 1), workers)
    return HilbertFunctionTable(tuple(vals))


# --- random choices ---------------------------------------------------------------

def random_forms(Igens: Sequence[Generator], degrees: Sequence[int], seed: int,
                 field: Field = Field(DEFAULT_PRIME), num_vars: int | None = None,
                 coefficient_bound: int = 100) -> IdealPresentation:
    """Random combinations of monomial multiples of the generators, one per degree.

    Over a prime field the multipliers are uniform in F_p, stored as their
    symmetric integer representatives; over the rationals they are integers
    in [-bound, bound].  Forms are kept as exact integer combinations, so
    the same forms read over QQ still lie in I.  Degenerate samples (forms of
    equal degree that are linearly dependent beyond necessity) are redrawn
    with a derived seed, at most MAX_RETRIES times.
    """
    Igens = tuple(g if isinstance(g, Generator) else Generator(*g) for g in Igens)
    if num_vars is None:
        num_vars = Igens[0].nvars
    if not Igens:
        raise ValueError("no generators to combine")
    lowest = min(g.deg for g in Igens)
    for D in degrees:
        if D < lowest:
            raise ValueError(f"requested degree {D} is below every generator degree")
    ideal_I = IdealPresentation(num_vars, Igens, field)
    for attempt in range(MAX_RETRIES + 1):
        forms = []
        for idx, D in enumerate(degrees):
            rng = np.random.default_rng(np.random.SeedSequence([seed, idx, attempt]))
            terms: dict = {}
            for g in Igens:
                if g.deg > D:
                    continue
                for m in monomials(num_vars, D - g.deg):
                    if field.is_rational:
                        c = int(rng.integers(-coefficient_bound, coefficient_bound + 1))
                    else:
                        c = int(rng.integers(0, field.prime))
                        if c > field.prime // 2:
                            c -= field.prime
                    if c == 0:
                        continue
                    for e, a in g.terms.items():
                        key = tuple(x + y for x, y in zip(m, e))
                        terms[key] = terms.get(key, 0) + c * a
            forms.append(Generator(D, {e: c for e, c in terms.items() if c}))
        if _generic_enough(forms, ideal_I, field, num_vars):
            return IdealPresentation(num_vars, tuple(forms), field, seed)
    raise GenericityFailure(f"no generic choice found after {MAX_RETRIES} retries")


def _generic_enough(forms, ideal_I, field, num_vars) -> bool:
    by_degree: dict = {}
    for f in forms:
        if not f.terms:
            if graded_dim(ideal_I, f.deg) > 0:
                return False
            continue
        by_degree.setdefault(f.deg, []).append(f)
    for D, fs in by_degree.items():
        target = min(len(fs), graded_dim(ideal_I, D))
        if rank(span_matrix(fs, num_vars, D, field), field) < target:
            return False
    return True


# --- convenience --------------------------------------------------------------------

def stable_dmax(requested_degrees: Sequence[int], cap: int | None = None) -> int:
    """Degree bound for stabilization: max(2 * sum of degrees, cap)."""
    base = 2 * sum(requested_degrees)
    return max(base, cap or 0)


@dataclass(frozen=True)
class FittedSeries:
    table: HilbertFunctionTable
    polynomial: NumericalPolynomial
    series: RationalSeries


def fitted(values: Sequence[int], dim: int) -> FittedSeries:
    Q = fit_hilbert_polynomial(values, dim)
    d0 = stabilization_degree(values, Q)
    return FittedSeries(HilbertFunctionTable(tuple(values), d0), Q, series_from_table(values, Q))


def quotient_series(ideal: IdealPresentation, power: int, dim: int, dmax: int,
                    workers: int = 1, recheck: bool = False) -> FittedSeries:
    """Exact series of R / I^power from its Hilbert function (see series_from_table)."""
    table = hilbert_function_quotient(ideal, power, dmax, workers)
    if recheck and not ideal.field.is_rational:
        other = hilbert_function_quotient(_lift(ideal), power, dmax, workers)
        if other.values != table.values:
            raise OracleMismatch(f"{ideal.field} and QQ disagree: {table.values} vs {other.values}")
    return fitted(table.values, dim)


def colon_table(A: IdealPresentation, Igens, dmax: int, workers: int = 1,
                recheck: bool = False) -> HilbertFunctionTable:
    table = colon_hilbert_function(A, Igens, dmax, workers)
    if recheck and not A.field.is_rational:
        other = colon_hilbert_function(_lift(A), Igens, dmax, workers)
        if other.values != table.values:
            raise OracleMismatch(f"{A.field} and QQ disagree: {table.values} vs {other.values}")
    return table


def _lift(ideal: IdealPresentation) -> IdealPresentation:
    """The same integer generators read over the rationals."""
    return ideal.with_field(RATIONALS)
