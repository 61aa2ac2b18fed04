"""Recovering every I^p / I^(p+1) from the first few, via Koszul duality.

For a complete intersection of degrees (2, 3) in six variables the conormal
modules are known in closed form, which lets us watch the solver reproduce
them from only the first two.
"""
from reshilb.powers import KoszulInput, ci_conormal_series, solve_all_powers
from reshilb.series import project

c, n, r = (2, 3), 6, 5
known = [ci_conormal_series(c, n, p) for p in range(2)]
for label, degs in {"unweighted": (0,) * 6, "mixed degrees": (2, 3, 4, 2, 5, 3)}.items():
    inp = KoszulInput(n=n, r=r, g=2, a=-n, dim_quotient=n - 2, degrees=degs, known=known)
    out = solve_all_powers(inp, 5)
    print(f"{label}: consumed {inp.needed} known powers")
    for p, S in enumerate(out):
        truth = project(ci_conormal_series(c, n, p), n, r)
        print(f"  p={p}: {S}   {'ok' if S == truth else 'MISMATCH'}")
