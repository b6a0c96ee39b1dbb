"""Vertex-model layer: R-matrix, oscillator-valued L-matrices, products.

Operator matrices hold formal sums of terms (x-degree, y-degree, scalar,
oscillator factors).  Factors are keyed by a slot (space, family): rank-r
single matrices use space 0 and families 1..r; nested column products use
space = level.  Distinct slots commute; within one slot the atom tuple is
an ordered word, leftmost applied last, exactly as in the trace engine.

The rational R-matrix entries b+- = t(x-y)/(tx-y), (x-y)/(tx-y) and
c+- = y(t-1)/(tx-y), x(t-1)/(tx-y) are stored cleared of the common
denominator (tx-y), so every verification below is polynomial identity
checking in x, y over Q(q, t) against truncated Fock states.
"""

from __future__ import annotations

from itertools import product
from typing import NamedTuple

from .errors import CutoffTooSmall, IndexOutOfRange
from .oscillator import LOWER, RAISE, kpow, walk
from .qtfield import QTRat, one, zero

_T = QTRat.monomial(te=1)
_ONE = one()


class OpTerm(NamedTuple):
    xdeg: int
    ydeg: int
    scalar: QTRat
    factors: tuple  # sorted ((space, family), atoms) pairs


def term(scalar=None, xdeg=0, ydeg=0, factors=()):
    s = _ONE if scalar is None else (QTRat(scalar) if isinstance(scalar, int) else scalar)
    return OpTerm(xdeg, ydeg, s, tuple(sorted((slot, tuple(atoms))
                                              for slot, atoms in factors if atoms)))


def term_mul(t1, t2):
    """Operator product t1 * t2 (t1 applied last)."""
    if not t2.factors:
        factors = t1.factors
    elif not t1.factors:
        factors = t2.factors
    else:
        merged = dict(t1.factors)
        for slot, atoms in t2.factors:
            merged[slot] = merged.get(slot, ()) + atoms
        factors = tuple(sorted(merged.items()))
    return OpTerm(t1.xdeg + t2.xdeg, t1.ydeg + t2.ydeg,
                  t1.scalar * t2.scalar, factors)


def entry_add(*entries):
    acc = {}
    for e in entries:
        for t in e:
            key = (t.xdeg, t.ydeg, t.factors)
            cur = acc.get(key)
            acc[key] = t.scalar if cur is None else cur + t.scalar
    return tuple(OpTerm(x, y, s, f) for (x, y, f), s in acc.items() if s)


def entry_mul(e1, e2):
    acc = {}
    for t1 in e1:
        for t2 in e2:
            t = term_mul(t1, t2)
            key = (t.xdeg, t.ydeg, t.factors)
            cur = acc.get(key)
            acc[key] = t.scalar if cur is None else cur + t.scalar
    return tuple(OpTerm(x, y, s, f) for (x, y, f), s in acc.items() if s)


def entry_scale(e, c):
    return tuple(OpTerm(t.xdeg, t.ydeg, t.scalar * c, t.factors) for t in e)


class OpMatrix:
    """Sparse matrix of formal operator entries."""

    __slots__ = ("nrows", "ncols", "entries")

    def __init__(self, nrows, ncols, entries=None):
        self.nrows = nrows
        self.ncols = ncols
        self.entries = dict(entries) if entries else {}

    def set(self, i, j, entry):
        if not 0 <= i < self.nrows or not 0 <= j < self.ncols:
            raise IndexOutOfRange(f"({i},{j}) outside {self.nrows}x{self.ncols}")
        if entry:
            self.entries[(i, j)] = tuple(entry)
        else:
            self.entries.pop((i, j), None)

    def entry(self, i, j):
        return self.entries.get((i, j), ())

    def __mul__(self, other):
        if self.ncols != other.nrows:
            raise IndexOutOfRange("matrix shape mismatch")
        out = OpMatrix(self.nrows, other.ncols)
        by_row = {}
        for (i, k), e in self.entries.items():
            by_row.setdefault(i, []).append((k, e))
        by_col = {}
        for (k, j), e in other.entries.items():
            by_col.setdefault(k, []).append((j, e))
        for i, row in by_row.items():
            acc = {}
            for k, e1 in row:
                for j, e2 in by_col.get(k, ()):
                    p = entry_mul(e1, e2)
                    if p:
                        acc[j] = entry_add(acc[j], p) if j in acc else p
            for j, e in acc.items():
                if e:
                    out.entries[(i, j)] = e
        return out

    def map_terms(self, fn):
        out = OpMatrix(self.nrows, self.ncols)
        for pos, e in self.entries.items():
            ne = entry_add(tuple(fn(t) for t in e))
            if ne:
                out.entries[pos] = ne
        return out

    def swap_xy(self):
        return self.map_terms(
            lambda t: OpTerm(t.ydeg, t.xdeg, t.scalar, t.factors))

    def scale_x_by_q(self):
        return self.map_terms(
            lambda t: OpTerm(t.xdeg, t.ydeg,
                             t.scalar * QTRat.monomial(qe=t.xdeg), t.factors))

    def slots(self):
        out = set()
        for e in self.entries.values():
            for t in e:
                for slot, _ in t.factors:
                    out.add(slot)
        return out


#### builders

def _pair(i, j, width):
    return i * width + j


def build_R(r):
    """Cleared R-matrix: (tx-y) R~(x, y) on the (r+1)^2 basis of pairs."""
    if r < 1:
        # rank 0: one-dimensional, acts as the cleared identity
        m = OpMatrix(1, 1)
        m.set(0, 0, (term(_T, xdeg=1), term(-1, ydeg=1)))
        return m
    w = r + 1
    m = OpMatrix(w * w, w * w)
    diag = (term(_T, xdeg=1), term(-1, ydeg=1))          # t x - y
    b_plus = (term(_T, xdeg=1), term(-_T, ydeg=1))       # t (x - y)
    b_minus = (term(xdeg=1), term(-1, ydeg=1))           # x - y
    c_plus = (term(_T - 1, ydeg=1),)                     # y (t - 1)
    c_minus = (term(_T - 1, xdeg=1),)                    # x (t - 1)
    for i in range(w):
        m.set(_pair(i, i, w), _pair(i, i, w), diag)
        for j in range(i + 1, w):
            m.set(_pair(i, j, w), _pair(i, j, w), c_minus)
            m.set(_pair(i, j, w), _pair(j, i, w), b_plus)
            m.set(_pair(j, i, w), _pair(i, j, w), b_minus)
            m.set(_pair(j, i, w), _pair(j, i, w), c_plus)
    return m


def _ktail(space, lo, r):
    """k factors for families lo..r at the given space."""
    return [((space, f), (kpow(),)) for f in range(lo, r + 1)]


def build_L(r, space=0):
    """(r+1) x (r+1) oscillator-valued L with families 1..r."""
    m = OpMatrix(r + 1, r + 1)
    m.set(0, 0, (term(),))
    for j in range(1, r + 1):
        m.set(0, j, (term(factors=[((space, j), (LOWER,))]),))
    for i in range(1, r + 1):
        tail = _ktail(space, i + 1, r)
        m.set(i, 0, (term(xdeg=1, factors=[((space, i), (RAISE,))] + tail),))
        m.set(i, i, (term(xdeg=1, factors=tail),))
        for j in range(1, i):
            m.set(i, j, (term(xdeg=1, factors=[((space, j), (LOWER,)),
                                               ((space, i), (RAISE,))] + tail),))
    return m


def build_tildeL(r, space=0):
    """(r+1) x r reduction of L: family 1 frozen (a_1, a_1+ -> 1, k_1 -> 0).

    Columns 0 and 1 of L become equal under the substitution; column 0 is
    kept and the surviving columns are the old (0, 2, 3, .., r).
    """
    m = OpMatrix(r + 1, r)
    m.set(0, 0, (term(),))
    for b in range(1, r):
        m.set(0, b, (term(factors=[((space, b + 1), (LOWER,))]),))
    for i in range(1, r + 1):
        tail = _ktail(space, i + 1, r)
        raise_i = [] if i == 1 else [((space, i), (RAISE,))]
        m.set(i, 0, (term(xdeg=1, factors=raise_i + tail),))
        for b in range(1, r):
            j = b + 1  # original column
            if i < j:
                continue
            if i == j:
                m.set(i, b, (term(xdeg=1, factors=tail),))
            else:
                m.set(i, b, (term(xdeg=1, factors=[((space, j), (LOWER,)),
                                                   ((space, i), (RAISE,))] + tail),))
    return m


def merge_family_one(mat, space=0):
    """Substitute a_1 = a_1+ = 1, k_1 = 0 in the family-1 slot."""
    out = OpMatrix(mat.nrows, mat.ncols)
    for pos, e in mat.entries.items():
        terms = []
        for t in e:
            dead = False
            kept = []
            for slot, atoms in t.factors:
                if slot != (space, 1):
                    kept.append((slot, atoms))
                    continue
                for atom in atoms:
                    if atom[0] == "k" and atom[1] > 0:
                        dead = True
                        break
                if dead:
                    break
            if not dead:
                terms.append(OpTerm(t.xdeg, t.ydeg, t.scalar, tuple(kept)))
        ne = entry_add(tuple(terms))
        if ne:
            out.entries[pos] = ne
    return out


def zf_components(r):
    """Nested column product: components A_0..A_r of tildeL^(r)...tildeL^(1),
    level j acting on space j."""
    mat = build_tildeL(r, space=r)
    for j in range(r - 1, 0, -1):
        mat = mat * build_tildeL(j, space=j)
    return tuple(mat.entry(i, 0) for i in range(r + 1))


def twist_term(r, space=None):
    """Diagonal twist: q^((f-1) m_f) over every family f.

    With space given, families 2..r of that single space; otherwise the
    nested layout (level j carries families 2..j)."""
    factors = []
    if space is not None:
        for f in range(2, r + 1):
            factors.append(((space, f), (kpow(0, f - 1),)))
    else:
        for j in range(1, r + 1):
            for f in range(2, j + 1):
                factors.append(((j, f), (kpow(0, f - 1),)))
    return term(factors=factors)


#### truncated-state evaluation

def eval_entry(entry, slot_index, state, cutoff):
    """Matrix elements of a formal entry on |state>.

    Returns {out_state: {(xdeg, ydeg): QTRat}} keyed by occupation tuples
    aligned with slot_index (a dict slot -> position)."""
    out = {}
    for t in entry:
        occ = list(state)
        fac = t.scalar
        dead = False
        for slot, atoms in t.factors:
            i = slot_index[slot]
            h, f = walk(atoms, occ[i], cutoff=cutoff)
            if h is None or not f:
                dead = True
                break
            fac = fac * f
            occ[i] = h
        if dead or not fac:
            continue
        key = tuple(occ)
        bucket = out.setdefault(key, {})
        xy = (t.xdeg, t.ydeg)
        cur = bucket.get(xy)
        nv = fac if cur is None else cur + fac
        if nv:
            bucket[xy] = nv
        else:
            del bucket[xy]
    return {k: v for k, v in out.items() if v}


def matrices_first_mismatch(m1, m2, cutoff):
    """First disagreeing matrix element over all input states with
    occupations <= cutoff-2, as (position, slots, state), or None."""
    if cutoff < 2:
        raise CutoffTooSmall("need cutoff >= 2 for the comparison margin")
    if (m1.nrows, m1.ncols) != (m2.nrows, m2.ncols):
        return ((), (), ())
    slots = sorted(m1.slots() | m2.slots())
    slot_index = {s: i for i, s in enumerate(slots)}
    states = list(product(range(cutoff - 1), repeat=len(slots)))
    for pos in sorted(set(m1.entries) | set(m2.entries)):
        e1, e2 = m1.entry(*pos), m2.entry(*pos)
        for st in states:
            if eval_entry(e1, slot_index, st, cutoff) != \
                    eval_entry(e2, slot_index, st, cutoff):
                return (pos, tuple(slots), st)
    return None


def matrices_equal_on_states(m1, m2, cutoff):
    """Compare entrywise on all input states with occupations <= cutoff-2."""
    return matrices_first_mismatch(m1, m2, cutoff) is None


def _kron_prod(A, B):
    """[(i,j),(k,l)] -> A[i,k] * B[j,l] (operator product, A applied last)."""
    out = OpMatrix(A.nrows * B.nrows, A.ncols * B.ncols)
    for (i, k), e1 in A.entries.items():
        for (j, l), e2 in B.entries.items():
            p = entry_mul(e1, e2)
            if p:
                out.entries[(i * B.nrows + j, k * B.ncols + l)] = p
    return out


def intertwining_sides(kind, r):
    """Left and right sides of an exchange relation, as operator matrices.

    kind: "yba"   R(x,y) L(x)oL(y) = L(y)oL(x) R(x,y), full rank-r L
          "rll"   R^(r)(x,y) tL(x)otL(y) = tL(y)otL(x) R^(r-1)(x,y)
          "zf"    R(x,y) A(x)oA(y) = A(y)oA(x) (nested column product)
          "twist" S A_i(qx) = q^i A_i(x) S componentwise

    Both sides are cleared of the (tx - y) denominator."""
    if r < 1:
        raise IndexOutOfRange("rank must be >= 1")
    if kind == "yba":
        L = build_L(r)
        R = build_R(r)
        return R * _kron_prod(L, L.swap_xy()), _kron_prod(L.swap_xy(), L) * R
    if kind == "rll":
        tL = build_tildeL(r)
        lhs = build_R(r) * _kron_prod(tL, tL.swap_xy())
        rhs = _kron_prod(tL.swap_xy(), tL) * build_R(r - 1)
        return lhs, rhs
    if kind == "zf":
        comps = zf_components(r)
        A = OpMatrix(r + 1, 1, {(i, 0): e for i, e in enumerate(comps) if e})
        lhs = build_R(r) * _kron_prod(A, A.swap_xy())
        cleared = (term(_T, xdeg=1), term(-1, ydeg=1))
        rhs = _kron_prod(A.swap_xy(), A)
        for pos in list(rhs.entries):
            rhs.entries[pos] = entry_mul(cleared, rhs.entries[pos])
        return lhs, rhs
    if kind == "twist":
        comps = zf_components(r)
        S = (twist_term(r),)
        lhs = OpMatrix(r + 1, 1)
        rhs = OpMatrix(r + 1, 1)
        qpow = _ONE
        for i, e in enumerate(comps):
            shifted = tuple(OpTerm(t.xdeg, t.ydeg,
                                   t.scalar * QTRat.monomial(qe=t.xdeg),
                                   t.factors) for t in e)
            lhs.set(i, 0, entry_mul(S, shifted))
            rhs.set(i, 0, entry_scale(entry_mul(e, S), qpow))
            qpow = qpow * QTRat.monomial(qe=1)
        return lhs, rhs
    raise ValueError(f"unknown intertwining kind {kind!r}")


def intertwining_mismatch(kind, r, cutoff=4):
    """None when the relation holds on the truncation; else the first
    disagreeing (matrix position, slot layout, input state).

    Input occupations run to cutoff-2 in every family so that two raises
    per family never touch the truncation edge."""
    lhs, rhs = intertwining_sides(kind, r)
    return matrices_first_mismatch(lhs, rhs, cutoff)


def verify_intertwining(kind, r, cutoff=4):
    """Exact check of an exchange relation on truncated Fock states."""
    return intertwining_mismatch(kind, r, cutoff) is None
