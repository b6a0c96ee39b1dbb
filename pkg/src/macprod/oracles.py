"""Independent ground truths for validating the trace pipeline.

Nothing here goes through the lattice/trace construction: E comes from
solving the Murphy eigen-equations as a linear system, Schur from tableau
enumeration, Hall-Littlewood from the symmetrization formula, exclusion
process weights from a generator null space, traces from partial sums.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations

from .compositions import (check_composition, check_partition, dominance_leq,
                           dominant, eigen_exponents, orbit)
from .errors import (InternalNonDivisibility, NoSolution, NonUnique,
                     ReducibleChain)
from .hecke import murphy_apply
from .oscillator import parse_word
from .qtfield import QTRat, one
from .xpoly import XPoly

_ONE = one()
_T = QTRat.monomial(te=1)


def _rref(rows):
    """Reduced row echelon form in place, generic over an exact field.
    Returns the pivot column indices."""
    if not rows:
        return []
    ncols = len(rows[0])
    piv = []
    r = 0
    for c in range(ncols):
        k = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if k is None:
            continue
        rows[r], rows[k] = rows[k], rows[r]
        p = rows[r][c]
        rows[r] = [v / p for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        piv.append(c)
        r += 1
        if r == len(rows):
            break
    return piv


def _degree_slice(n, d):
    if n == 1:
        return [(d,)]
    out = []
    for head in range(d + 1):
        for tail in _degree_slice(n - 1, d - head):
            out.append((head,) + tail)
    return out


def _solve_unique(rows, ncols):
    """[A|b] rows -> solution vector, or NoSolution/NonUnique."""
    piv = _rref(rows)
    for row in rows:
        if not any(row[:ncols]) and row[ncols]:
            raise NoSolution("inconsistent eigen system")
    if piv and piv[-1] == ncols:
        raise NoSolution("inconsistent eigen system")
    if len(piv) < ncols:
        raise NonUnique("eigen system is underdetermined")
    sol = [None] * ncols
    for r, c in enumerate(piv):
        sol[c] = rows[r][ncols]
    return sol


def eigen_solve_E(lam):
    """E_lam as the unique monic solution of the Murphy eigen-equations.

    The ansatz support is the degree slice cut to sorted shapes dominated
    by lam+; on inconsistency it is widened to the whole slice before
    giving up."""
    lam = check_composition(lam)
    n, d = len(lam), sum(lam)
    shape = dominant(lam)
    spectrum = [QTRat.monomial(qe=qe, te=te)
                for qe, te in eigen_exponents(lam)]
    slice_all = _degree_slice(n, d)
    narrow = [e for e in slice_all
              if dominance_leq(dominant(e), shape)]
    for support in (narrow, slice_all):
        colidx = {e: j for j, e in enumerate(support)}
        ncols = len(support)
        zero = _ONE - _ONE
        eqs = {}
        for i in range(1, n + 1):
            for nu in support:
                j = colidx[nu]
                acted = murphy_apply(i, XPoly.monomial(nu, _ONE))
                for kappa, c in acted.terms.items():
                    row = eqs.setdefault((i, kappa), [zero] * (ncols + 1))
                    row[j] = row[j] + c
                row = eqs.setdefault((i, nu), [zero] * (ncols + 1))
                row[j] = row[j] - spectrum[i - 1]
        rows = [r for r in eqs.values() if any(r)]
        norm = [zero] * (ncols + 1)
        norm[colidx[lam]] = _ONE
        norm[ncols] = _ONE
        rows.append(norm)
        try:
            sol = _solve_unique(rows, ncols)
        except NoSolution:
            if support is narrow:
                continue
            raise
        return XPoly._raw(n, {e: c for e, c in zip(support, sol) if c})
    raise NoSolution("unreachable")


def schur(lam, n):
    """Schur polynomial by semistandard tableau enumeration."""
    lam = tuple(p for p in check_partition(lam) if p)
    if len(lam) > n:
        return XPoly.zero(n)
    acc = {}
    cells = [(r, c) for r in range(len(lam)) for c in range(lam[r])]

    def fill(pos, tab, content):
        if pos == len(cells):
            key = tuple(content)
            acc[key] = acc.get(key, 0) + 1
            return
        r, c = cells[pos]
        lo = 1
        if c > 0:
            lo = max(lo, tab[(r, c - 1)])
        if r > 0:
            lo = max(lo, tab[(r - 1, c)] + 1)
        for v in range(lo, n + 1):
            tab[(r, c)] = v
            content[v - 1] += 1
            fill(pos + 1, tab, content)
            content[v - 1] -= 1
        tab.pop((r, c), None)

    fill(0, {}, [0] * n)
    return XPoly._raw(n, {e: QTRat(m) for e, m in acc.items()})


def _div_linear(f, a, b):
    """Exact division of f by (x_a - x_b), 1-based indices."""
    buckets = {}
    for e, c in f.terms.items():
        k = e[a - 1]
        rest = e[:a - 1] + (0,) + e[a:]
        buckets.setdefault(k, {})[rest] = c
    if not buckets:
        return XPoly.zero(f.n)

    def shift_b(d):
        out = {}
        for e, c in d.items():
            ne = list(e)
            ne[b - 1] += 1
            out[tuple(ne)] = c
        return out

    def add(d1, d2):
        out = dict(d1)
        for e, c in d2.items():
            v = out.get(e)
            v = c if v is None else v + c
            if v:
                out[e] = v
            else:
                del out[e]
        return out

    deg = max(buckets)
    quot = {}
    g = {}  # G_k, starting from G_deg = 0
    for k in range(deg, 0, -1):
        g = add(buckets.get(k, {}), shift_b(g))
        quot[k - 1] = g
    rem = add(buckets.get(0, {}), shift_b(g))
    if rem:
        raise InternalNonDivisibility(f"(x{a} - x{b}) does not divide")
    out = {}
    for k, d in quot.items():
        for e, c in d.items():
            ne = list(e)
            ne[a - 1] = k
            out[tuple(ne)] = c
    return XPoly._raw(f.n, out)


def _perm_sign(w):
    return (-1) ** sum(1 for i in range(len(w))
                       for j in range(i + 1, len(w)) if w[i] > w[j])


def _t_factorial(m):
    v = _ONE
    for k in range(1, m + 1):
        v = v * (_ONE - _T ** k) / (_ONE - _T)
    return v


def hall_littlewood(lam, n):
    """P_lam(x; t) by the symmetrization formula: antisymmetrize
    x^lam prod_{i<j} (x_i - t x_j), divide by the Vandermonde, normalise
    by the t-factorials of the part multiplicities (zeros included)."""
    lam = check_partition(lam)
    if len(lam) > n:
        raise ValueError(f"{lam} needs more than {n} variables")
    padded = tuple(lam) + (0,) * (n - len(lam))
    base = XPoly.monomial(padded, _ONE)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            ei = tuple(1 if k == i - 1 else 0 for k in range(n))
            ej = tuple(1 if k == j - 1 else 0 for k in range(n))
            base = base * XPoly._raw(n, {ei: _ONE, ej: -_T})
    num = XPoly.zero(n)
    for w in permutations(range(1, n + 1)):
        img = base.apply_perm(w)
        num = num + (img if _perm_sign(w) == 1 else -img)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            num = _div_linear(num, i, j)
    v = _ONE
    for part in set(padded):
        v = v * _t_factorial(padded.count(part))
    P = num.scale(v.inverse())
    assert P.coeff_of(padded).is_one(), "symmetrization lost monicity"
    return P


CONVENTIONS = ("descending_free", "ascending_free")


def asep_generator(species, t, convention):
    """Ring generator over the arrangements of the species multiset.
    In descending_free a higher species hops rightward past a lower one
    at rate 1 and back at rate t; ascending_free is the mirror."""
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}")
    t = Fraction(t)
    states = orbit(check_composition(species))
    idx = {s: i for i, s in enumerate(states)}
    size = len(states)
    G = [[Fraction(0)] * size for _ in range(size)]
    n = len(species)
    for s in states:
        col = idx[s]
        for k in range(n):
            j = (k + 1) % n
            a, b = s[k], s[j]
            if a == b:
                continue
            swapped = list(s)
            swapped[k], swapped[j] = b, a
            row = idx[tuple(swapped)]
            if convention == "descending_free":
                rate = Fraction(1) if a > b else t
            else:
                rate = Fraction(1) if a < b else t
            G[row][col] += rate
            G[col][col] -= rate
    return states, G


def asep_stationary(species, t, convention="ascending_free"):
    """Exact stationary distribution of the ring process, total mass 1.

    The default convention is the one whose stationary weights match the
    q=1 specialization of the trace polynomials (checked in the tests);
    under it a higher species hops leftward at rate 1."""
    states, G = asep_generator(species, t, convention)
    size = len(states)
    rows = [list(r) for r in G]
    piv = _rref(rows)
    free = [c for c in range(size) if c not in piv]
    if len(free) != 1:
        raise ReducibleChain(f"null space dimension {len(free)}")
    v = [Fraction(0)] * size
    v[free[0]] = Fraction(1)
    for r, c in enumerate(piv):
        v[c] = -rows[r][free[0]]
    total = sum(v)
    if total == 0:
        raise ReducibleChain("null vector has zero mass")
    return {s: val / total for s, val in zip(states, v)}


def numeric_trace(word, t, q, M):
    """Partial trace sum_{m=0}^{M} <m|word|m> in exact rationals."""
    if isinstance(word, str):
        word = parse_word(word)
    t, q = Fraction(t), Fraction(q)
    total = Fraction(0)
    for m in range(M + 1):
        occ = m
        val = Fraction(1)
        for atom in reversed(word):
            kind = atom[0]
            if kind == "A":
                occ += 1
            elif kind == "a":
                if occ == 0:
                    val = Fraction(0)
                    break
                val *= 1 - t ** occ
                occ -= 1
            else:
                val *= t ** (atom[1] * occ) * q ** (atom[2] * occ)
        if val and occ == m:
            total += val
    return total
