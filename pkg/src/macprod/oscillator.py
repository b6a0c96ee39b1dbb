"""t-deformed boson operators and exact traces on the polynomial Fock space.

States |0>, |1>, ... carry the radical-free action

    raise:  A|m> = |m+1>          lower:  a|m> = (1 - t^m)|m-1>
    kpow(p, c): |m> -> t^(p m) q^(c m) |m>,

so a A - t A a = (1 - t) and A a = 1 - k.  Words are tuples of atoms; the
leftmost atom is the operator applied last.  Traces over m >= 0 are summed
in closed form by walking the word once: no normal ordering is needed, and
a walk that dips below occupation zero picks up the factor (1 - t^0) = 0
automatically at the offending m, so the geometric resummation is valid
without case analysis.
"""

from __future__ import annotations

from .errors import CutoffTooSmall, DivergentTrace, NotDyck
from .qtfield import QTRat, one, zero

LOWER = ("a",)
RAISE = ("A",)


def kpow(te=1, qe=0):
    """Diagonal atom t^(te m) q^(qe m); exponents must be nonnegative."""
    if te < 0 or qe < 0:
        raise ValueError("kpow exponents must be nonnegative")
    return ("k", te, qe)


def parse_word(text):
    """Parse "a A k k^(2,1)" into a word tuple."""
    out = []
    for tok in text.split():
        if tok == "a":
            out.append(LOWER)
        elif tok == "A":
            out.append(RAISE)
        elif tok == "k":
            out.append(kpow())
        elif tok.startswith("k^(") and tok.endswith(")"):
            body = tok[3:-1]
            te, qe = (int(v) for v in body.split(","))
            out.append(kpow(te, qe))
        else:
            raise ValueError(f"unknown oscillator token {tok!r}")
    return tuple(out)


def word_str(word):
    toks = []
    for atom in word:
        if atom == LOWER:
            toks.append("a")
        elif atom == RAISE:
            toks.append("A")
        else:
            _, te, qe = atom
            toks.append("k" if (te, qe) == (1, 0) else f"k^({te},{qe})")
    return " ".join(toks)


def net_change(word):
    return sum(1 if a == RAISE else -1 if a == LOWER else 0 for a in word)


def is_balanced(word):
    return net_change(word) == 0


def walk(word, m, cutoff=None):
    """Apply the word to |m>; return (m_out, QTRat factor).

    With a cutoff M the top state is killed by the raise atom
    (A|M> = 0), matching the truncated matrix representation; the
    output is then (None, 0).
    """
    h = m
    factor = one()
    for atom in reversed(word):
        tag = atom[0]
        if tag == "A":
            if cutoff is not None and h >= cutoff:
                return None, zero()
            h += 1
        elif tag == "a":
            if h == 0:
                return None, zero()
            factor = factor * (1 - QTRat.monomial(te=h))
            h -= 1
        else:
            _, te, qe = atom
            if te * h or qe * h:
                factor = factor * QTRat.monomial(qe=qe * h, te=te * h)
    return h, factor


def trace_closed_form(word):
    """Sum_{m>=0} <m|word|m> as a closed-form QTRat.

    Walking right to left with symbolic offset h from the start state m,
    each lower contributes (1 - t^(h+m)), each kpow(p,c) contributes
    t^(p(h+m)) q^(c(h+m)); the product expands into finitely many
    geometric series in m.  Raises DivergentTrace when the total kpow
    exponent is (0, 0) on a balanced word (ratio-1 geometric series).
    """
    h = 0
    ct = cq = 0  # constant Laurent prefactor exponents
    P = Q = 0    # per-m exponents from kpow atoms
    lower_heights = []
    for atom in reversed(word):
        tag = atom[0]
        if tag == "A":
            h += 1
        elif tag == "a":
            lower_heights.append(h)
            h -= 1
        else:
            _, te, qe = atom
            ct += te * h
            cq += qe * h
            P += te
            Q += qe
    if h != 0:
        return zero()
    if P == 0 and Q == 0:
        raise DivergentTrace("balanced word with no damping k-power")
    # expand prod_s (1 - t^{h_s} y), y = t^m: coeffs[k] maps t-exponent -> int
    coeffs = [{0: 1}]
    for hs in lower_heights:
        new = [dict(c) for c in coeffs] + [{}]
        for k, c in enumerate(coeffs):
            tgt = new[k + 1]
            for te, v in c.items():
                tgt[te + hs] = tgt.get(te + hs, 0) - v
        coeffs = [{te: v for te, v in c.items() if v} for c in new]
    pref = QTRat.monomial(qe=cq, te=ct)
    total = zero()
    for k, c in enumerate(coeffs):
        if not c:
            continue
        num = zero()
        for te, v in c.items():
            num = num + QTRat.monomial(te=te, c=v)
        den = 1 - QTRat.monomial(qe=Q, te=P + k)
        total = total + pref * num / den
    return total


class FockMatrix:
    """Dense (M+1) x (M+1) matrix of QTRat entries."""

    __slots__ = ("size", "rows")

    def __init__(self, size, rows=None):
        self.size = size
        self.rows = rows if rows is not None else \
            [[zero()] * size for _ in range(size)]

    @classmethod
    def identity(cls, size):
        m = cls(size)
        for i in range(size):
            m.rows[i][i] = one()
        return m

    def __mul__(self, other):
        if isinstance(other, (QTRat, int)):
            return FockMatrix(self.size,
                              [[v * other for v in row] for row in self.rows])
        out = FockMatrix(self.size)
        for i in range(self.size):
            arow = self.rows[i]
            orow = out.rows[i]
            for k in range(self.size):
                a = arow[k]
                if not a:
                    continue
                brow = other.rows[k]
                for j in range(self.size):
                    if brow[j]:
                        orow[j] = orow[j] + a * brow[j]
        return out

    __rmul__ = __mul__

    def __add__(self, other):
        return FockMatrix(self.size, [[a + b for a, b in zip(r1, r2)]
                                      for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return FockMatrix(self.size, [[a - b for a, b in zip(r1, r2)]
                                      for r1, r2 in zip(self.rows, other.rows)])

    def __eq__(self, other):
        return (isinstance(other, FockMatrix) and self.size == other.size
                and self.rows == other.rows)

    def entry(self, i, j):
        return self.rows[i][j]


def fock_matrix(word, cutoff):
    """Truncated matrix of a word (or single atom) on states 0..cutoff."""
    if cutoff < 0:
        raise CutoffTooSmall("cutoff must be >= 0")
    if word and isinstance(word[0], str):
        word = (word,)  # single atom
    size = cutoff + 1
    out = FockMatrix(size)
    for m in range(size):
        h, factor = walk(word, m, cutoff=cutoff)
        if h is not None and factor:
            out.rows[h][m] = out.rows[h][m] + factor
    return out


def dyck_map(word):
    """Nesting-depth multiplicities of a Dyck word.

    Input is either a parenthesis string or a word of lower/raise atoms
    with "(" = lower, ")" = raise.  Returns (m_1, .., m_L) where m_d
    counts pairs enclosed by exactly d-1 others; trailing zeros dropped.
    """
    if isinstance(word, str):
        steps = []
        for ch in word:
            if ch == "(":
                steps.append(1)
            elif ch == ")":
                steps.append(-1)
            elif not ch.isspace():
                raise NotDyck(f"unexpected character {ch!r}")
    else:
        steps = []
        for atom in word:
            if atom == LOWER:
                steps.append(1)
            elif atom == RAISE:
                steps.append(-1)
            else:
                raise NotDyck("only lower/raise atoms allowed in a Dyck word")
    depth = 0
    counts = {}
    for s in steps:
        if s == 1:
            depth += 1
            counts[depth] = counts.get(depth, 0) + 1
        else:
            depth -= 1
            if depth < 0:
                raise NotDyck("unbalanced: closes below depth zero")
    if depth != 0:
        raise NotDyck("unbalanced: unclosed opens remain")
    top = max(counts, default=0)
    return tuple(counts.get(d, 0) for d in range(1, top + 1))


def psi_eval(mvec, x):
    """Sum_{n>=0} x^n prod_i (1 - t^(n+i))^(m_i) in closed form.

    x is a QTRat; the sum collapses to sum_k c_k / (1 - x t^k).  Raises
    DivergentTrace if some needed denominator 1 - x t^k is zero.
    """
    coeffs = [{0: 1}]  # poly in y = t^n, coefficient dicts te -> int
    for i, mi in enumerate(mvec, start=1):
        for _ in range(mi):
            new = [dict(c) for c in coeffs] + [{}]
            for k, c in enumerate(coeffs):
                tgt = new[k + 1]
                for te, v in c.items():
                    tgt[te + i] = tgt.get(te + i, 0) - v
            coeffs = [{te: v for te, v in c.items() if v} for c in new]
    total = zero()
    for k, c in enumerate(coeffs):
        if not c:
            continue
        num = zero()
        for te, v in c.items():
            num = num + QTRat.monomial(te=te, c=v)
        den = 1 - x * QTRat.monomial(te=k)
        if den.is_zero():
            raise DivergentTrace(f"pole at ratio x t^{k} = 1")
        total = total + num / den
    return total


def delta_t_operator(prefix, m):
    """Coefficientwise z^n -> (1 - t^n)^m z^(n+1) on a series prefix."""
    out = [zero()]
    for n, c in enumerate(prefix):
        out.append(c * (1 - QTRat.monomial(te=n)) ** m)
    return out
