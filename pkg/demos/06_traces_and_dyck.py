"""Closed-form oscillator traces, three ways.

A word in the lowering, raising and diagonal letters has a trace over
the occupation basis that resums to a rational function of q and t.
For balanced words the closed form is checked against brute-force
partial sums; for Dyck words the trace only depends on the nesting
profile of the parentheses, which collapses the bookkeeping further.
"""

from fractions import Fraction

from macprod import numeric_trace, trace_closed_form
from macprod.oscillator import dyck_map, kpow, parse_word, psi_eval
from macprod.qtfield import QTRat, specialize

word = parse_word("a A k^(2,1)")
closed = trace_closed_form(word)
print(f"trace(a A k^(2,1)) = {closed}")

th, qh = Fraction(1, 2), Fraction(1, 3)
exact = specialize(closed, q=qh, t=th).as_fraction()
partial = numeric_trace(word, th, qh, 60)
print(f"at q=1/3, t=1/2:   closed form {float(exact):.12f}")
print(f"                   60-term sum {float(partial):.12f}")
assert abs(exact - partial) < Fraction(1, 2 ** 40)

# nesting profile: how many pairs sit at each depth
for s in ("()", "(())", "()()", "((()))", "(()())"):
    mvec = dyck_map(s)
    word = parse_word(" ".join("a" if ch == "(" else "A" for ch in s))
    lhs = psi_eval(mvec, QTRat.monomial(te=1))
    rhs = trace_closed_form(word + (kpow(1, 0),))
    assert lhs == rhs
    print(f"{s:10s} depth profile {mvec}   trace with k-damping: {rhs}")
