"""Exact rank computations over prime fields and the rationals."""
from __future__ import annotations

from dataclasses import dataclass

import flint
import numpy as np

DEFAULT_PRIME = 32003
MERSENNE_31 = 2 ** 31 - 1


@dataclass(frozen=True)
class Field:
    """A prime field F_p, or the rationals when ``prime`` is None."""

    prime: int | None = DEFAULT_PRIME

    def __post_init__(self):
        if self.prime is not None and not _is_prime(self.prime):
            raise ValueError(f"{self.prime} is not prime")

    @property
    def is_rational(self) -> bool:
        return self.prime is None

    def reduce(self, c: int) -> int:
        return c if self.prime is None else c % self.prime

    def to_json(self):
        return "rationals" if self.prime is None else {"prime": self.prime}

    @classmethod
    def from_json(cls, obj) -> "Field":
        if obj in (None, "rationals", "QQ", "Q"):
            return RATIONALS
        if isinstance(obj, int):
            return cls(obj)
        return cls(int(obj["prime"]))

    def __str__(self):
        return "QQ" if self.prime is None else f"GF({self.prime})"


RATIONALS = Field(None)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    i = 3
    while i * i <= p:
        if p % i == 0:
            return False
        i += 2
    return True


def rank(matrix, field: Field) -> int:
    """Rank of an integer matrix (numpy array or nested list) over ``field``."""
    if isinstance(matrix, np.ndarray):
        if matrix.size == 0:
            return 0
        rows = matrix.tolist()
    else:
        rows = [list(r) for r in matrix]
        if not rows or not rows[0]:
            return 0
    if field.is_rational:
        return flint.fmpz_mat(rows).rank()
    return flint.nmod_mat(rows, field.prime).rank()


def _to_flint(rows, field: Field):
    rows = rows.tolist() if isinstance(rows, np.ndarray) else rows
    if field.is_rational:
        return flint.fmpz_mat(rows)
    return flint.nmod_mat(rows, field.prime)


def _to_numpy(mat, field: Field) -> np.ndarray:
    r, c = mat.nrows(), mat.ncols()
    if field.is_rational:
        flat = [int(x) for x in mat.entries()]
        return np.array(flat, dtype=object).reshape(r, c)
    return np.array([int(x) for x in mat.entries()], dtype=np.int64).reshape(r, c)


def reduce_modulo(A: np.ndarray, blocks: list, field: Field) -> list:
    """Images of the rows of each block modulo the row space of A.

    The reduced blocks are expressed in the non-pivot coordinates of the
    reduced row echelon form of A (scaled by a common denominator over the
    rationals, which leaves ranks unchanged).
    """
    blocks = [M for M in blocks if M.shape[0]]
    if A.shape[0] == 0:
        return blocks
    if field.is_rational:
        R, den, rk = _to_flint(A, field).rref()
        den = int(den)
    else:
        R, rk = _to_flint(A, field).rref()
        den = 1
    if rk == 0:
        return blocks
    Rn = _to_numpy(R, field)[:rk]
    pivots = [int(np.flatnonzero(Rn[i])[0]) for i in range(rk)]
    pivot_set = set(pivots)
    free = [j for j in range(A.shape[1]) if j not in pivot_set]
    if not free:
        return []
    B_free = _to_flint(Rn[:, free], field)
    out = []
    for M in blocks:
        head = _to_flint(M[:, free], field)
        prod = _to_flint(M[:, pivots], field) * B_free
        out.append(_to_numpy(head * den - prod, field))
    return out
