"""Peeling one column off the lattice.

A rank-r polynomial is a prefactor times a sum of rank-(r-1)
polynomials, weighted by single-column partition functions.  Most
columns die: the trace kills any column whose occupation bookkeeping
is unbalanced.  The 4-site composition below keeps exactly four."""

from macprod import compute_f
from macprod.matprod import recursion_prefactor, recursion_report

lam = (3, 1, 0, 2)

rep = recursion_report(lam)
print(f"lambda = {lam}")
print(f"prefactor = {rep.prefactor}")
assert rep.prefactor == recursion_prefactor(lam)

print(f"\n{len(rep.terms)} surviving columns:")
for mu, w in rep.terms:
    print(f"  mu = {mu}")
    print(f"     weight {w}")

print(f"\nrecursion closes: {rep.ok}")
assert rep.ok and rep.lhs == compute_f(lam)
