"""Small explicit ideals used as ground-truth fixtures."""
from __future__ import annotations

from .ideals import Generator


def _gen(deg, *terms):
    return Generator(deg, {tuple(e): c for e, c in terms})


def twisted_cubic() -> tuple:
    """2x2 minors of [[x, y, z], [y, z, w]]: xz - y^2, xw - yz, yw - z^2."""
    return (
        _gen(2, ((1, 0, 1, 0), 1), ((0, 2, 0, 0), -1)),
        _gen(2, ((1, 0, 0, 1), 1), ((0, 1, 1, 0), -1)),
        _gen(2, ((0, 1, 0, 1), 1), ((0, 0, 2, 0), -1)),
    )


def plane_conic_hypersurface(n: int = 4) -> tuple:
    """The quadric x_0^2 + x_1 x_2 (a nonzerodivisor of degree 2) in n variables."""
    e1 = [0] * n
    e1[0] = 2
    e2 = [0] * n
    e2[1] = 1
    e2[2] = 1
    return (_gen(2, (e1, 1), (e2, 1)),)


def monomial_gens(exps) -> tuple:
    return tuple(_gen(sum(e), (e, 1)) for e in exps)
