"""Secant-variety criteria for smooth surfaces and threefolds.

The criteria compare Hilbert coefficients (or Chern numbers) of X with the
square of its degree; a zero margin marks a deficient secant variety.  The
Hilbert-coefficient forms come from the residual coefficient formula applied
to the diagonal of X x X, which ``diagonal_e10`` evaluates directly.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .residual import CoeffInput, coeff_residual

F = Fraction


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def _norm(x):
    x = _frac(x)
    return int(x.numerator) if x.denominator == 1 else x


@dataclass(frozen=True)
class SurfaceChernData:
    H2: int
    HK: int
    K2: int
    c2: int
    chi: int = 0
    smooth: bool = False

    def __post_init__(self):
        if self.smooth and (self.K2 + self.c2) != 12 * self.chi:
            raise ValueError("Noether's formula K^2 + c_2 = 12 chi fails for data declared smooth")


@dataclass(frozen=True)
class ThreefoldChernData:
    """Intersection numbers of a polarized threefold (X, H) with canonical class K.

    ``c2`` is the second Chern class of the tangent bundle and ``c3`` the third
    Chern class of the cotangent bundle, so c3 is minus the topological Euler
    number (P^3 has c3 = -4).
    """

    H3: int
    KH2: int
    K2H: int
    K3: int
    c2H: int
    Kc2: int
    c3: int

    @property
    def chi(self) -> Fraction:
        """Euler characteristic of the structure sheaf, -K c_2 / 24."""
        return F(-self.Kc2, 24)

    def as_dict(self) -> dict:
        return {k: getattr(self, k) for k in ("H3", "KH2", "K2H", "K3", "c2H", "Kc2", "c3")}


@dataclass(frozen=True)
class HilbertCoeffSet:
    """Named e-vectors; labels are A, Omega, W2 (canonical squared), W2Omega,
    W2S2Omega and Wstar (dual of the canonical module)."""

    context: str
    vectors: Mapping[str, tuple] = field(default_factory=dict)

    def __post_init__(self):
        if self.context not in ("surface", "threefold"):
            raise ValueError(f"unknown context {self.context!r}")
        length = 3 if self.context == "surface" else 4
        clean = {}
        for k, v in self.vectors.items():
            v = tuple(_norm(x) for x in v)
            if len(v) != length:
                raise ValueError(f"{k}: expected {length} entries, got {len(v)}")
            clean[k] = v
        object.__setattr__(self, "vectors", clean)

    def __getitem__(self, label: str) -> tuple:
        try:
            return self.vectors[label]
        except KeyError:
            raise KeyError(f"coefficient set lacks {label!r}") from None

    def __contains__(self, label):
        return label in self.vectors

    def is_integral(self) -> bool:
        return all(isinstance(x, int) for v in self.vectors.values() for x in v)

    def to_json(self) -> dict:
        return {k: [x if isinstance(x, int) else str(x) for x in v] for k, v in self.vectors.items()}


# --- surfaces ----------------------------------------------------------------

def tensor_identities(e_A, e_W2, e2_Omega=None) -> dict:
    """Relations among Hilbert coefficients of twists and tensor powers of the
    canonical module of a surface coordinate ring A."""
    e0, e1, e2 = (_frac(x) for x in e_A)
    w0, w1, w2 = (_frac(x) for x in e_W2)
    out = {
        "e1_omega": 3 * e0 - e1,
        "e2_omega": 3 * e0 - 2 * e1 + e2,
        "e1_omega_power": {j: 3 * j * e0 - (2 * j - 1) * e1 for j in range(0, 4)},
        "e1_omega_dual": 3 * w0 - w1,
        "e2_omega_dual": 3 * w0 - 2 * w1 + w2,
        "e1_W2Omega": 21 * e0 - 11 * e1,
    }
    if e2_Omega is not None:
        out["e2_W2Omega"] = -12 * e0 + 8 * e1 - 5 * e2 + 5 * w2 + _frac(e2_Omega)
    return out


def twist(e, k: int) -> tuple:
    """e-vector of M(-k) from that of M, applying e_i(M(-1)) = e_i + e_{i-1}."""
    if k < 0:
        raise ValueError("only nonnegative twists M(-k) are supported")
    e = tuple(_frac(x) for x in e)
    for _ in range(k):
        e = tuple(e[i] + (e[i - 1] if i else 0) for i in range(len(e)))
    return tuple(_norm(x) for x in e)


def surface_rr_coeffs(data: SurfaceChernData) -> HilbertCoeffSet:
    H2, HK, K2, c2, chi = (_frac(x) for x in (data.H2, data.HK, data.K2, data.c2, data.chi))
    O = (H2, F(3, 2) * H2 + F(1, 2) * HK, F(1, 2) * H2 + F(1, 2) * HK + chi)
    W2 = (H2, F(3, 2) * H2 - F(3, 2) * HK, F(1, 2) * H2 - F(3, 2) * HK + K2 + chi)
    OmX = (2 * H2, 3 * H2, H2 - c2 + 2 * chi)
    Om = tuple(a + b for a, b in zip(OmX, O))
    Wstar = (H2, F(3, 2) * H2 + F(3, 2) * HK, F(1, 2) * H2 + F(3, 2) * HK + K2 + chi)
    ids = tensor_identities(O, W2, Om[2])
    W2Om = (3 * O[0], ids["e1_W2Omega"], ids["e2_W2Omega"])
    return HilbertCoeffSet("surface", {"A": O, "OmegaX": OmX, "Omega": Om, "W2": W2,
                                       "W2Omega": W2Om, "Wstar": Wstar})


def surface_margin(form: str, data) -> Fraction:
    """LHS - RHS of the surface inequality in the chosen form."""
    if form == "chern":
        if not isinstance(data, SurfaceChernData):
            raise TypeError("the chern form needs SurfaceChernData")
        return _norm(F(data.H2) ** 2 - (10 * data.H2 + 5 * data.HK + data.K2 - data.c2))
    coeffs = surface_rr_coeffs(data) if isinstance(data, SurfaceChernData) else data
    A, Om = coeffs["A"], coeffs["Omega"]
    if form == "hilbert":
        return _norm(F(A[0]) ** 2 + 14 * A[0] - 16 * A[1] + 4 * A[2] - coeffs["W2"][2] - Om[2])
    if form == "dual":
        return _norm(F(A[0]) ** 2 + 5 * A[0] - 10 * A[1] + 4 * A[2] - coeffs["Wstar"][2] - Om[2])
    raise ValueError(f"unknown surface form {form!r}")


# --- threefolds --------------------------------------------------------------

def _threefold_table_classical(d: ThreefoldChernData) -> dict:
    H3, KH2, K2H, K3, c2H, Kc2, c3 = (F(x) for x in d.as_dict().values())
    return {
        "A": (H3, 2 * H3 - F(3, 2) * KH2,
              F(1, 12) * (14 * H3 + 9 * KH2 + K2H + c2H),
              F(1, 24) * (4 * H3 + 6 * KH2 + 2 * K2H + 2 * c2H + Kc2)),
        "Omega": (4 * H3, 8 * H3 + KH2,
                  F(1, 6) * (28 * H3 + 9 * KH2 + 2 * K2H - 4 * c2H),
                  F(1, 12) * (8 * H3 + 6 * KH2 + 4 * K2H - 8 * c2H + Kc2 - 6 * c3)),
        "W2": (H3, 2 * H3 - F(3, 2) * KH2,
               F(1, 12) * (14 * H3 - 27 * KH2 + 13 * K2H + c2H),
               F(1, 24) * (4 * H3 - 18 * KH2 + 26 * K2H + 2 * c2H - 12 * K3 - 3 * Kc2)),
        "W2Omega": (4 * H3, 8 * H3 - 7 * KH2,
                    F(1, 6) * (28 * H3 - 63 * KH2 + 38 * K2H - 4 * c2H),
                    F(1, 12) * (8 * H3 - 42 * KH2 + 76 * K2H - 8 * c2H - 48 * K3 + 17 * Kc2 - 6 * c3)),
        "W2S2Omega": (10 * H3, 20 * H3 - 19 * KH2,
                      F(1, 6) * (70 * H3 - 171 * KH2 + 119 * K2H - 25 * c2H),
                      F(1, 12) * (20 * H3 - 114 * KH2 + 238 * K2H - 50 * c2H - 186 * K3
                                  + 125 * Kc2 - 42 * c3)),
    }


def _threefold_table_hrr(d: ThreefoldChernData) -> dict:
    """The same coefficients recomputed from Hirzebruch-Riemann-Roch.

    Differs from the classical table in e_1(A) and in the symmetric-square row.
    """
    H3, KH2, K2H, K3, c2H, Kc2, c3 = (F(x) for x in d.as_dict().values())
    table = _threefold_table_classical(d)
    A = table["A"]
    table["A"] = (A[0], 2 * H3 + F(1, 2) * KH2, A[2], A[3])
    table["W2S2Omega"] = (
        10 * H3, 20 * H3 - 20 * KH2,
        F(1, 6) * (70 * H3 - 180 * KH2 + 131 * K2H - 31 * c2H),
        F(1, 12) * (20 * H3 - 120 * KH2 + 262 * K2H - 62 * c2H - 210 * K3 + 148 * Kc2 - 48 * c3))
    return table


def threefold_rr_coeffs(data: ThreefoldChernData, table: str = "classical",
                        strict: bool = True) -> HilbertCoeffSet:
    """e-vectors of A, Omega, W2, W2Omega, W2S2Omega from Chern numbers.

    ``table="classical"`` is the classical table; ``table="hrr"`` recomputes
    every entry from Hirzebruch-Riemann-Roch.  With ``strict`` a non-integer
    entry raises ValueError.
    """
    if table == "classical":
        vecs = _threefold_table_classical(data)
    elif table == "hrr":
        vecs = _threefold_table_hrr(data)
    else:
        raise ValueError(f"unknown table {table!r}")
    out = HilbertCoeffSet("threefold", vecs)
    if strict and not out.is_integral():
        bad = [k for k, v in out.vectors.items() if not all(isinstance(x, int) for x in v)]
        raise ValueError(f"non-integer Hilbert coefficients for {bad}")
    return out


def threefold_margin(form: str, data, table: str = "classical") -> Fraction:
    """Signed margin: RHS - LHS for the chern form, LHS - RHS for the others."""
    if form == "chern":
        d = data
        return _norm(35 * d.H3 - 11 * d.KH2 - 9 * d.K2H + d.c2H - d.K3 - F(d.Kc2, 12)
                     + F(d.c3, 2) - d.H3 ** 2)
    if form == "reduced":
        d = data
        return _norm(d.H3 ** 2 - (7 * (5 * d.H3 + 3 * d.KH2 + d.K2H - d.c2H)
                                 - 2 * d.Kc2 + d.K3 + d.c3))
    if form == "hilbert":
        c = threefold_rr_coeffs(data, table, strict=False) if isinstance(data, ThreefoldChernData) else data
        A, W2, Om = c["A"], c["W2"], c["Omega"]
        lhs = F(A[0]) ** 2 + 391 * A[0] - 246 * A[1] + 66 * A[2] + 50 * A[3]
        rhs = 18 * W2[2] - 2 * Om[3] - 2 * W2[3]
        return _norm(lhs - rhs)
    raise ValueError(f"unknown threefold form {form!r}")


# --- the diagonal route --------------------------------------------------------

_DIAGONAL = {"surface": (6, 3, 5), "threefold": (8, 4, 7)}


def diagonal_e10(context: str, coeffs: HilbertCoeffSet):
    """e_0 of I/A for the diagonal ideal I of X x X and s general linear forms in I.

    The graded pieces I^j w / I^{j+1} w of the canonical module of X x X are
    W2, W2 (x) Omega and W2 (x) S_2 Omega, so w / I^j w is their cumulative
    sum.  The coefficient formula is applied with all degrees equal to one.
    """
    if context not in _DIAGONAL:
        raise ValueError(f"unknown context {context!r}")
    if coeffs.context != context:
        raise ValueError("coefficient set is for a different context")
    n, g, s = _DIAGONAL[context]
    pieces = ["W2", "W2Omega", "W2S2Omega"][: s - g]
    powers = {}
    acc = None
    for j, label in enumerate(pieces, start=1):
        v = coeffs[label]
        acc = v if acc is None else tuple(a + b for a, b in zip(acc, v))
        powers[j] = acc
    A = coeffs["A"]
    inp = CoeffInput(n=n, g=g, s=s, r=s, degrees=(1,) * s, powers=powers,
                     e_R=(F(A[0]) ** 2,), e_quotient=A)
    return _norm(coeff_residual("canonical-ideal", inp, 0))
