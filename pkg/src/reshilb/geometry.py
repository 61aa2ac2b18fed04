"""Intersection numbers of smooth complete intersections in products of projective spaces.

Used to produce genuine Chern data for surfaces and threefolds, so that the
secant criteria can be exercised on actual varieties rather than arbitrary
integers.  The Chow ring of P^{a_1} x ... x P^{a_k} is Z[h_1..h_k]/(h_i^{a_i+1}).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


class _Chow:
    def __init__(self, dims: Sequence[int]):
        self.dims = tuple(dims)
        self.k = len(dims)

    def clean(self, p: dict) -> dict:
        return {e: c for e, c in p.items()
                if c and all(x <= a for x, a in zip(e, self.dims))}

    def mul(self, p: dict, q: dict) -> dict:
        out: dict = {}
        for e1, c1 in p.items():
            for e2, c2 in q.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return self.clean(out)

    def add(self, p: dict, q: dict, scale=1) -> dict:
        out = dict(p)
        for e, c in q.items():
            out[e] = out.get(e, 0) + scale * c
        return self.clean(out)

    def one(self) -> dict:
        return {(0,) * self.k: 1}

    def linear(self, coeffs: Sequence[int]) -> dict:
        out = {}
        for i, c in enumerate(coeffs):
            e = [0] * self.k
            e[i] = 1
            out[tuple(e)] = c
        return self.clean(out)

    def power(self, p: dict, n: int) -> dict:
        out = self.one()
        for _ in range(n):
            out = self.mul(out, p)
        return out

    def inverse_one_plus(self, x: dict) -> dict:
        """(1 + x)^{-1} for nilpotent x."""
        out, term = self.one(), self.one()
        for _ in range(sum(self.dims)):
            term = self.mul(term, x)
            term = {e: -c for e, c in term.items()}
            out = self.add(out, term)
        return out

    def graded(self, p: dict, deg: int) -> dict:
        return {e: c for e, c in p.items() if sum(e) == deg}

    def top(self, p: dict) -> int:
        return p.get(self.dims, 0)


@dataclass(frozen=True)
class Variety:
    """Smooth complete intersection X of hypersurfaces in a product of projective spaces."""

    dims: tuple
    hypersurfaces: tuple
    polarization: tuple

    @property
    def dim(self) -> int:
        return sum(self.dims) - len(self.hypersurfaces)

    def _setup(self):
        ring = _Chow(self.dims)
        cap = ring.one()
        for D in self.hypersurfaces:
            cap = ring.mul(cap, ring.linear(D))
        total = ring.one()
        for i, a in enumerate(self.dims):
            e = [0] * ring.k
            e[i] = 1
            total = ring.mul(total, ring.power(ring.add(ring.one(), {tuple(e): 1}), a + 1))
        for D in self.hypersurfaces:
            total = ring.mul(total, ring.inverse_one_plus(ring.linear(D)))
        chern_T = [ring.graded(total, i) for i in range(self.dim + 1)]
        return ring, cap, chern_T

    def numbers(self) -> dict:
        ring, cap, cT = self._setup()
        H = ring.linear(self.polarization)
        K = {e: -c for e, c in cT[1].items()}

        def integral(*classes):
            out = cap
            for c in classes:
                out = ring.mul(out, c)
            return ring.top(out)

        if self.dim == 2:
            return {"H2": integral(H, H), "HK": integral(H, K), "K2": integral(K, K),
                    "c2": integral(cT[2]),
                    "chi": (integral(K, K) + integral(cT[2])) // 12}
        if self.dim == 3:
            c2 = cT[2]
            c3 = {e: -c for e, c in cT[3].items()}
            return {"H3": integral(H, H, H), "KH2": integral(K, H, H), "K2H": integral(K, K, H),
                    "K3": integral(K, K, K), "c2H": integral(c2, H), "Kc2": integral(K, c2),
                    "c3": integral(c3)}
        raise ValueError("only surfaces and threefolds are supported")


def projective_complete_intersection(N: int, degrees: Sequence[int], m: int = 1) -> Variety:
    """Complete intersection of the given degrees in P^N, embedded by O(m)."""
    return Variety((N,), tuple((d,) for d in degrees), (m,))


def product(dims: Sequence[int], polarization: Sequence[int]) -> Variety:
    return Variety(tuple(dims), (), tuple(polarization))
