"""Exact arithmetic in Z[t, 1/t, 1/(1-t)].

Every Hilbert series handled by the library lives in this ring.  An element
is stored as ``numerator / (1-t)^pole`` with the numerator a Laurent
polynomial not divisible by ``1-t`` (unless ``pole == 0``), which gives a
unique normal form.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .numpoly import NumericalPolynomial, binom


def _num(c):
    """Coerce to int when possible, otherwise Fraction."""
    if isinstance(c, Fraction):
        return int(c.numerator) if c.denominator == 1 else c
    if isinstance(c, bool):
        raise TypeError("bool is not a coefficient")
    if isinstance(c, int):
        return c
    if isinstance(c, str):
        return _num(Fraction(c))
    # numpy integers and the like
    return _num(Fraction(c))


class LaurentPoly:
    """Finitely supported map exponent -> nonzero rational coefficient."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, object] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean = {}
        for e, c in items:
            c = _num(c)
            if c:
                e = int(e)
                c = clean.get(e, 0) + c
                if c:
                    clean[e] = c
                else:
                    clean.pop(e, None)
        self._terms = dict(sorted(clean.items()))
        self._hash = None

    # construction helpers
    @classmethod
    def monomial(cls, e: int, c=1) -> "LaurentPoly":
        return cls({e: c})

    @classmethod
    def const(cls, c) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def one_minus_t_power(cls, k: int) -> "LaurentPoly":
        """(1 - t)^k for k >= 0."""
        return cls({i: (-1) ** i * binom(k, i) for i in range(k + 1)})

    # container protocol
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __getitem__(self, e: int):
        return self._terms.get(e, 0)

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __repr__(self):
        return f"LaurentPoly({self._terms!r})"

    def __str__(self):
        return format_terms(self._terms)

    @property
    def min_exp(self):
        return next(iter(self._terms)) if self._terms else None

    @property
    def max_exp(self):
        return next(reversed(self._terms)) if self._terms else None

    # arithmetic
    def __add__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.items()})

    def __sub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for e1, c1 in self.items():
            for e2, c2 in other.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers of a Laurent polynomial are not supported")
        out = LaurentPoly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by t^k."""
        return LaurentPoly({e + k: c for e, c in self.items()})

    def substitute_inverse(self) -> "LaurentPoly":
        return LaurentPoly({-e: c for e, c in self.items()})

    def __call__(self, x):
        return _num(sum(Fraction(c) * Fraction(x) ** e for e, c in self.items()))

    def value_at_one(self):
        return _num(sum(self._terms.values()))

    def div_one_minus_t(self) -> "LaurentPoly | None":
        """Exact quotient by (1 - t), or None if (1 - t) does not divide."""
        if not self._terms:
            return self
        if self.value_at_one() != 0:
            return None
        # (1 - t) * q = p  <=>  q_k = sum_{j <= k} p_j
        out = {}
        acc = 0
        for e in range(self.min_exp, self.max_exp):
            acc += self._terms.get(e, 0)
            out[e] = acc
        return LaurentPoly(out)

    def taylor_at_one(self, order: int) -> list:
        """Coefficients of (t-1)^0..(t-1)^order."""
        return [_num(sum(c * binom(e, i) for e, c in self.items())) for i in range(order + 1)]


def _as_poly(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return LaurentPoly.const(x)
    return NotImplemented


def format_terms(terms: Mapping[int, object]) -> str:
    if not terms:
        return "0"
    parts = []
    for i, (e, c) in enumerate(sorted(terms.items())):
        sign = "-" if c < 0 else "+"
        body = f"{abs(c)}*t^{e}"
        if i == 0:
            parts.append(body if sign == "+" else "-" + body)
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)


@dataclass(frozen=True)
class RationalSeries:
    """numerator / (1 - t)^pole in normal form."""

    numerator: LaurentPoly
    pole: int = 0

    def __post_init__(self):
        if self.pole < 0:
            raise ValueError("pole order must be nonnegative")
        num, k = self.numerator, self.pole
        if not isinstance(num, LaurentPoly):
            num = LaurentPoly(num)
        if not num:
            k = 0
        while k > 0:
            q = num.div_one_minus_t()
            if q is None:
                break
            num, k = q, k - 1
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "pole", k)

    # constructors
    @classmethod
    def const(cls, c) -> "RationalSeries":
        return cls(LaurentPoly.const(c), 0)

    @classmethod
    def zero(cls) -> "RationalSeries":
        return cls(LaurentPoly(), 0)

    @classmethod
    def monomial(cls, e: int, c=1) -> "RationalSeries":
        return cls(LaurentPoly.monomial(e, c), 0)

    @classmethod
    def polynomial_ring(cls, n: int) -> "RationalSeries":
        """Series of a polynomial ring in n variables of degree one."""
        return cls(LaurentPoly.const(1), n)

    @classmethod
    def lift(cls, x) -> "RationalSeries":
        if isinstance(x, RationalSeries):
            return x
        if isinstance(x, LaurentPoly):
            return cls(x, 0)
        if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
            return cls.const(x)
        raise TypeError(f"cannot interpret {type(x).__name__} as a series")

    @property
    def pole_order(self) -> int:
        return self.pole

    def is_zero(self) -> bool:
        return not self.numerator

    # arithmetic
    def _over(self, k: int) -> LaurentPoly:
        """Numerator with respect to the denominator (1-t)^k, k >= pole."""
        return self.numerator * LaurentPoly.one_minus_t_power(k - self.pole)

    def __add__(self, other):
        try:
            other = RationalSeries.lift(other)
        except TypeError:
            return NotImplemented
        k = max(self.pole, other.pole)
        return RationalSeries(self._over(k) + other._over(k), k)

    __radd__ = __add__

    def __neg__(self):
        return RationalSeries(-self.numerator, self.pole)

    def __sub__(self, other):
        try:
            other = RationalSeries.lift(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return RationalSeries.lift(other) - self

    def __mul__(self, other):
        try:
            other = RationalSeries.lift(other)
        except TypeError:
            return NotImplemented
        return RationalSeries(self.numerator * other.numerator, self.pole + other.pole)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not supported")
        return RationalSeries(self.numerator ** k, self.pole * k)

    def shift(self, k: int) -> "RationalSeries":
        """Multiply by t^k, i.e. the series of the twist M(-k)."""
        return RationalSeries(self.numerator.shift(k), self.pole)

    def divide_by_one_minus_t(self, k: int = 1) -> "RationalSeries":
        return RationalSeries(self.numerator, self.pole + k)

    def substitute_inverse(self) -> "RationalSeries":
        return substitute_inverse(self)

    def expand(self, lo: int, hi: int) -> list:
        return expand(self, lo, hi)

    def __str__(self):
        return f"({self.numerator}) / (1-t)^{self.pole}"

    def __repr__(self):
        return f"RationalSeries({self!s})"

    # serialization
    def to_json(self) -> dict:
        return {"num": [[e, _json_coeff(c)] for e, c in self.numerator.items()],
                "pole": self.pole}

    @classmethod
    def from_json(cls, obj) -> "RationalSeries":
        if isinstance(obj, str):
            return parse_series(obj)
        if isinstance(obj, (int, float)) and not isinstance(obj, bool):
            return cls.const(_num(obj))
        num = LaurentPoly((int(e), _num(c)) for e, c in obj["num"])
        return cls(num, int(obj.get("pole", 0)))


def _json_coeff(c):
    return c if isinstance(c, int) else str(c)


_TERM = re.compile(r"([+-]?)\s*(\d+(?:/\d+)?)\*t\^(-?\d+)")


def parse_series(text: str) -> RationalSeries:
    """Parse the rendering produced by ``str(RationalSeries)``."""
    text = text.strip()
    m = re.fullmatch(r"\(?(.*?)\)?\s*/\s*\(1-t\)\^(\d+)", text)
    if m:
        num_text, pole = m.group(1), int(m.group(2))
    else:
        num_text, pole = text.strip("()"), 0
    num_text = num_text.strip()
    if num_text == "0":
        return RationalSeries.zero()
    terms = []
    pos = 0
    for tm in _TERM.finditer(num_text):
        if num_text[pos:tm.start()].strip():
            raise ValueError(f"cannot parse series literal {text!r}")
        sign = -1 if tm.group(1) == "-" else 1
        terms.append((int(tm.group(3)), sign * Fraction(tm.group(2))))
        pos = tm.end()
    if num_text[pos:].strip() or not terms:
        raise ValueError(f"cannot parse series literal {text!r}")
    return RationalSeries(LaurentPoly(terms), pole)


def ring_ops(op: str, a: RationalSeries, b):
    """Dispatch helper: add, sub, mul, or expand over a window (lo, hi)."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "expand":
        lo, hi = b
        return expand(a, lo, hi)
    raise ValueError(f"unknown ring operation {op!r}")


def expand(S: RationalSeries, lo: int, hi: int) -> list:
    """Laurent-series coefficients of S at indices lo..hi (inclusive)."""
    if hi < lo:
        raise ValueError(f"inverted window [{lo}, {hi}]")
    k = S.pole
    out = []
    for N in range(lo, hi + 1):
        if k == 0:
            out.append(S.numerator[N])
            continue
        acc = 0
        for e, c in S.numerator.items():
            if e > N:
                break
            acc += c * binom(N - e + k - 1, k - 1)
        out.append(_num(acc))
    return out


def substitute_inverse(S: RationalSeries) -> RationalSeries:
    """S(1/t), using 1/(1 - 1/t) = -t/(1 - t)."""
    k = S.pole
    num = S.numerator.substitute_inverse() * LaurentPoly.monomial(k, (-1) ** k)
    return RationalSeries(num, k)


@dataclass(frozen=True)
class EDecomposition:
    """S = sum_{i<D} (-1)^i e_i / (1-t)^(D-i) + F.

    ``e`` always holds e_0..e_{D-1}; when the numerator S(1-t)^D is an honest
    polynomial it continues with the remaining (finitely many) Taylor
    coefficients at t = 1.  ``coefficient(i)`` returns e_i for any i.
    """

    D: int
    e: tuple
    remainder: LaurentPoly
    _numerator: LaurentPoly = field(repr=False, compare=False)

    def coefficient(self, i: int):
        if i < 0:
            return 0
        if i < len(self.e):
            return self.e[i]
        return _num(sum(c * binom(x, i) for x, c in self._numerator.items()))

    def __getitem__(self, i: int):
        return self.coefficient(i)

    def principal(self) -> tuple:
        return tuple(self.coefficient(i) for i in range(self.D))

    def reconstruct(self) -> RationalSeries:
        total = RationalSeries(self.remainder, 0)
        for i in range(self.D):
            total = total + RationalSeries(LaurentPoly.const((-1) ** i * self.coefficient(i)),
                                           self.D - i)
        return total


def decompose(S: RationalSeries, D: int) -> EDecomposition:
    if D < S.pole:
        raise ValueError(f"D = {D} is below the pole order {S.pole}")
    P = S._over(D)
    if P and P.min_exp >= 0:
        top = max(D - 1, P.max_exp)
    else:
        top = D - 1
    e = tuple(_num(sum(c * binom(x, i) for x, c in P.items())) for i in range(top + 1))
    # F = (P - sum_{i<D} e_i (t-1)^i) / (1-t)^D, an exact division
    trunc = LaurentPoly()
    for i in range(D):
        trunc = trunc + LaurentPoly.one_minus_t_power(i) * ((-1) ** i * e[i])
    F = P - trunc
    for _ in range(D):
        F = F.div_one_minus_t()
        assert F is not None, "Taylor truncation must be divisible"
    return EDecomposition(D, e, F, P)


def e_vector(S: RationalSeries, D: int, length: int) -> tuple:
    """e_0..e_{length-1} of S normalized at D (extended convention)."""
    dec = decompose(S, D)
    return tuple(dec.coefficient(i) for i in range(length))


def associated_polynomial(S: RationalSeries, D: int) -> NumericalPolynomial:
    dec = decompose(S, D)
    return NumericalPolynomial(D - 1, dec.principal())


def equiv_r(S1: RationalSeries, S2: RationalSeries, n: int, r: int) -> bool:
    """True iff S1 - S2 has pole order < n - r at t = 1 (or vanishes)."""
    diff = RationalSeries.lift(S1) - RationalSeries.lift(S2)
    return diff.is_zero() or diff.pole < n - r


def project(S: RationalSeries, n: int, r: int) -> RationalSeries:
    """Canonical representative of the class of S at level r over dimension n.

    Keeps the terms (-1)^i e_i^n / (1-t)^(n-i) with i <= r and i < n, which
    are exactly the data the equivalence relation sees.  For r >= n the
    relation is equality, so S is returned unchanged.
    """
    S = RationalSeries.lift(S)
    if r >= n:
        return S
    dec = decompose(S, max(n, S.pole))
    if dec.D > n:
        raise ValueError(f"series has pole order {S.pole} > n = {n}")
    total = RationalSeries.zero()
    for i in range(min(r, n - 1) + 1):
        total = total + RationalSeries(LaurentPoly.const((-1) ** i * dec.coefficient(i)), n - i)
    return total


def canonical_dual_class(S: RationalSeries, n: int, r: int | None = None) -> RationalSeries:
    """(-1)^n S(1/t); projected to its class at level r when r is given."""
    out = substitute_inverse(S) * ((-1) ** n)
    if r is not None:
        out = project(out, n, r)
    return out
