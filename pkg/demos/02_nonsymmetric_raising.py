"""From the anti-dominant seed to a general non-symmetric polynomial.

Only weakly increasing compositions come straight out of the trace
construction.  Everything else is reached by Baxterised raising: a
Hecke generator plus a scalar whose spectral parameter is read off the
eigenvalue ladder.  Each step is certified by re-checking the commuting
eigenproblem, so a wrong branch cannot slip through.
"""

from macprod import compute_E, compute_f, eigen_check, raise_E, triangular_expand
from macprod.compositions import antidominant, raising_word

lam = (2, 0, 1)
delta = antidominant(lam)

print(f"target  {lam}")
print(f"seed    {delta}  (anti-dominant rearrangement)\n")

E = compute_f(delta)
cur = delta
for step, i in enumerate(raising_word(lam), start=1):
    E = raise_E(cur, i, E)
    cur = cur[:i - 1] + (cur[i], cur[i - 1]) + cur[i + 1:]
    print(f"step {step}: swap at {i} -> {cur}")
    print(f"   E = {E}")

assert cur == lam
assert E == compute_E(lam)
assert eigen_check(lam, E)
print("\neigenvalue check passed at every position")

print("\nexpansion of E over the rearrangement class:")
for mu, c in triangular_expand(lam).items():
    print(f"  f_{mu} coefficient {c}")
