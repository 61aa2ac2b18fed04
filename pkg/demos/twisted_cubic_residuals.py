"""Residual intersections of the twisted cubic, computed two ways.

For several choices of degrees we pick general forms in the ideal of the
twisted cubic, count the Hilbert function of the residual by linear algebra,
and compare with the value predicted from the Hilbert series of the powers
R/I^j alone.
"""
from reshilb.oracle import Field, IdealPresentation, colon_table, fitted, quotient_series, random_forms
from reshilb.oracle.fixtures import twisted_cubic
from reshilb.residual import CoeffInput, ResidualInput, coeff_residual, series_residual
from reshilb.series import e_vector, equiv_r

FIELD = Field(32003)
I = twisted_cubic()
ring = IdealPresentation(4, I, FIELD)

print("Hilbert series of R/I^j for the twisted cubic")
powers = {}
for j in (1, 2, 3):
    powers[j] = quotient_series(ring, j, 2, 14, recheck=True).series
    print(f"  j={j}: {powers[j]}   e = {e_vector(powers[j], 2, 4)}")
e_powers = {j: e_vector(S, 2, 6) for j, S in powers.items()}

print()
print("degrees     expected dim   oracle table (d = 0..)            degree: oracle  formula")
for degs, dim in [((2, 2), 2), ((2, 2, 2), 0), ((2, 2, 3), 1), ((2, 2, 3, 3), 0)]:
    s = len(degs)
    A = random_forms(I, degs, seed=0, field=FIELD)
    table = colon_table(A, I, 2 * sum(degs), recheck=True)
    if dim:
        oracle = fitted(table.values, dim).polynomial.e[0]
    else:
        oracle = sum(table.values)  # a finite length
    formula = coeff_residual("polynomial-residual", CoeffInput(n=4, g=2, s=s, r=s, degrees=degs,
                                                powers=e_powers, polynomial_ring=True), 0)
    print(f"  {str(degs):12s} {dim:<13d} {str(list(table.values[:10])):34s} {oracle:>6}  {formula:>6}")

print()
inp = ResidualInput(n=4, g=2, s=2, r=2, degrees=(2, 2), powers=powers, polynomial_ring=True)
S = series_residual("polynomial-residual", inp)
print("Series predicted for the residual of two quadrics:", S)
print("agrees with the line's series 1/(1-t)^2 at level 2:",
      equiv_r(S, fitted(list(range(1, 12)), 2).series, 4, 2))
