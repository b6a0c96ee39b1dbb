"""Exact arithmetic in the coefficient field Q(q, t).

Polynomials in q, t with integer coefficients are sparse dicts mapping
(q_exp, t_exp) -> nonzero int.  Rational functions are stored reduced
(gcd(num, den) = 1) with the denominator's leading coefficient positive
under the lex order on (q_exp, t_exp), so equal values are structurally
equal and JSON output is canonical.

The formal half-integer parameter that shifts t-exponents by multiples of
a symbol u never appears here: a power t^(a + b*u) is stored as the
monomial q^b t^a, i.e. t^u is identified with q.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _igcd

from .errors import DivisionByZero, SpecializationPole

Key = tuple  # (q_exp, t_exp)


#### dense univariate helpers (lists of ints, index = degree)

def _trim(u):
    while u and u[-1] == 0:
        u.pop()
    return u


def _uni_content(u):
    g = 0
    for c in u:
        g = _igcd(g, c)
        if g == 1:
            return 1
    return g


def _uni_scale_div(u, c):
    return [ci // c for ci in u]


def _uni_prem(u, v):
    # pseudo-remainder of u by v, up to powers of lc(v)
    u = u[:]
    dv = len(v) - 1
    lv = v[-1]
    while u and len(u) - 1 >= dv:
        d = len(u) - 1 - dv
        lu = u[-1]
        u = [lv * c for c in u]
        for i, cv in enumerate(v):
            u[i + d] -= lu * cv
        _trim(u)
    return u


def _uni_gcd(u, v):
    """gcd in Z[t] of dense lists, positive leading coefficient."""
    u, v = _trim(u[:]), _trim(v[:])
    if not u:
        u, v = v, u
    if not v:
        # gcd(p, 0) is p itself, sign-normalized
        if not u:
            return []
        return [-x for x in u] if u[-1] < 0 else u
    cu, cv = _uni_content(u), _uni_content(v)
    c = _igcd(cu, cv)
    u = _uni_scale_div(u, cu)
    v = _uni_scale_div(v, cv)
    while v:
        r = _uni_prem(u, v)
        if r:
            rc = _uni_content(r)
            r = _uni_scale_div(r, rc) if rc > 1 else r
        u, v = v, r
    if u[-1] < 0:
        u = [-x for x in u]
    return [c * x for x in u] if c > 1 else u


def _uni_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _trim(out)


def _uni_divexact(a, b):
    # exact division in Z[t]; internal use only (after a gcd)
    a = a[:]
    out = [0] * (len(a) - len(b) + 1) if len(a) >= len(b) else []
    lb = b[-1]
    while a and len(a) >= len(b):
        d = len(a) - len(b)
        c = a[-1] // lb
        out[d] = c
        for i, cb in enumerate(b):
            a[i + d] -= c * cb
        _trim(a)
    if a:
        raise ArithmeticError("inexact univariate division")
    return _trim(out)


#### bivariate PRS over Z[t] (lists over q-degree of t-lists)

def _bi_content(A):
    g = []
    for c in A:
        if c:
            g = _uni_gcd(g, c)
            if g == [1]:
                return g
    return g


def _bi_prem(U, V):
    U = [c[:] for c in U]
    dv = len(V) - 1
    lv = V[-1]
    while U and len(U) - 1 >= dv:
        d = len(U) - 1 - dv
        lu = U[-1]
        U = [_uni_mul(lv, c) for c in U]
        for i, cv in enumerate(V):
            t = _uni_mul(lu, cv)
            c = U[i + d]
            if len(c) < len(t):
                c += [0] * (len(t) - len(c))
            for j, tj in enumerate(t):
                c[j] -= tj
            U[i + d] = _trim(c)
        while U and not U[-1]:
            U.pop()
    return U


def _bi_gcd(U, V):
    cU, cV = _bi_content(U), _bi_content(V)
    c = _uni_gcd(cU, cV)
    U = [_uni_divexact(x, cU) if x else [] for x in U]
    V = [_uni_divexact(x, cV) if x else [] for x in V]
    while V:
        R = _bi_prem(U, V)
        if R:
            cR = _bi_content(R)
            R = [_uni_divexact(x, cR) if x else [] for x in R]
        U, V = V, R
    cU = _bi_content(U)
    U = [_uni_divexact(x, cU) if x else [] for x in U]
    return [_uni_mul(c, x) if x else [] for x in U]


#### sparse dict layer

def _dict_gcd(a: dict, b: dict) -> dict:
    """gcd in Z[q, t], leading (lex) coefficient positive."""
    if not a or not b:
        src = b if not a else a
        if not src:
            return {}
        out = dict(src)
        if out[max(out)] < 0:
            out = {k: -v for k, v in out.items()}
        return out
    amq = min(k[0] for k in a)
    amt = min(k[1] for k in a)
    bmq = min(k[0] for k in b)
    bmt = min(k[1] for k in b)
    gq, gt = min(amq, bmq), min(amt, bmt)
    A = {(k[0] - amq, k[1] - amt): v for k, v in a.items()}
    B = {(k[0] - bmq, k[1] - bmt): v for k, v in b.items()}
    ca = _uni_content(list(A.values()))
    cb = _uni_content(list(B.values()))
    c = _igcd(ca, cb)
    if len(A) == 1 or len(B) == 1:
        return {(gq, gt): c}
    A = {k: v // ca for k, v in A.items()}
    B = {k: v // cb for k, v in B.items()}
    aq = max(k[0] for k in A)
    bq = max(k[0] for k in B)
    if aq == 0 and bq == 0:
        ta = [0] * (max(k[1] for k in A) + 1)
        for k, v in A.items():
            ta[k[1]] = v
        tb = [0] * (max(k[1] for k in B) + 1)
        for k, v in B.items():
            tb[k[1]] = v
        g = _uni_gcd(ta, tb)
        out = {(gq, gt + i): c * v for i, v in enumerate(g) if v}
        return out
    at = max(k[1] for k in A)
    bt = max(k[1] for k in B)
    if at == 0 and bt == 0:
        qa = [0] * (aq + 1)
        for k, v in A.items():
            qa[k[0]] = v
        qb = [0] * (bq + 1)
        for k, v in B.items():
            qb[k[0]] = v
        g = _uni_gcd(qa, qb)
        return {(gq + i, gt): c * v for i, v in enumerate(g) if v}
    UA = [[] for _ in range(aq + 1)]
    for k, v in A.items():
        col = UA[k[0]]
        if len(col) <= k[1]:
            col += [0] * (k[1] + 1 - len(col))
        col[k[1]] = v
    UB = [[] for _ in range(bq + 1)]
    for k, v in B.items():
        col = UB[k[0]]
        if len(col) <= k[1]:
            col += [0] * (k[1] + 1 - len(col))
        col[k[1]] = v
    G = _bi_gcd([_trim(x) for x in UA], [_trim(x) for x in UB])
    out = {}
    for i, col in enumerate(G):
        for j, v in enumerate(col):
            if v:
                out[(gq + i, gt + j)] = c * v
    lead = max(out)
    if out[lead] < 0:
        out = {k: -v for k, v in out.items()}
    return out


def _dict_divexact(a: dict, b: dict) -> dict:
    if not b:
        raise DivisionByZero("polynomial division by zero")
    if b == _ONE_D:
        return dict(a)
    work = dict(a)
    quot = {}
    lb = max(b)
    lcb = b[lb]
    while work:
        la = max(work)
        ca = work[la]
        eq = (la[0] - lb[0], la[1] - lb[1])
        if eq[0] < 0 or eq[1] < 0 or ca % lcb:
            raise ArithmeticError("inexact polynomial division")
        cq = ca // lcb
        quot[eq] = cq
        for eb, cb in b.items():
            k = (eq[0] + eb[0], eq[1] + eb[1])
            nv = work.get(k, 0) - cq * cb
            if nv:
                work[k] = nv
            else:
                work.pop(k, None)
    return quot


_ONE_D = {(0, 0): 1}


class QTPoly:
    """Sparse polynomial in Z[q, t]; the dict is treated as frozen."""

    __slots__ = ("d",)

    def __init__(self, d=None):
        self.d = {k: v for k, v in d.items() if v} if d else {}

    @classmethod
    def _raw(cls, d):
        p = object.__new__(cls)
        p.d = d
        return p

    @classmethod
    def const(cls, c):
        return cls._raw({(0, 0): c} if c else {})

    @classmethod
    def mono(cls, qe, te, c=1):
        if qe < 0 or te < 0:
            raise ValueError("QTPoly exponents must be nonnegative")
        return cls._raw({(qe, te): c} if c else {})

    def __bool__(self):
        return bool(self.d)

    def __eq__(self, other):
        return isinstance(other, QTPoly) and self.d == other.d

    def __add__(self, other):
        out = dict(self.d)
        for k, v in other.d.items():
            nv = out.get(k, 0) + v
            if nv:
                out[k] = nv
            else:
                out.pop(k, None)
        return QTPoly._raw(out)

    def __sub__(self, other):
        out = dict(self.d)
        for k, v in other.d.items():
            nv = out.get(k, 0) - v
            if nv:
                out[k] = nv
            else:
                out.pop(k, None)
        return QTPoly._raw(out)

    def __neg__(self):
        return QTPoly._raw({k: -v for k, v in self.d.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return QTPoly._raw({})
            return QTPoly._raw({k: v * other for k, v in self.d.items()})
        a, b = self.d, other.d
        if len(a) > len(b):
            a, b = b, a
        out = {}
        for (qa, ta), va in a.items():
            for (qb, tb), vb in b.items():
                k = (qa + qb, ta + tb)
                nv = out.get(k, 0) + va * vb
                if nv:
                    out[k] = nv
                else:
                    del out[k]
        return QTPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a QTPoly")
        out = QTPoly._raw({(0, 0): 1})
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def leading(self):
        k = max(self.d)
        return k, self.d[k]

    def is_one(self):
        return self.d == _ONE_D

    def triples(self):
        return sorted([qe, te, c] for (qe, te), c in self.d.items())

    def __repr__(self):
        return f"QTPoly({_poly_str(self.d)})"


def _poly_str(d, q="q", t="t"):
    if not d:
        return "0"
    parts = []
    for (qe, te) in sorted(d, reverse=True):
        c = d[(qe, te)]
        mono = []
        if qe:
            mono.append(q if qe == 1 else f"{q}^{qe}")
        if te:
            mono.append(t if te == 1 else f"{t}^{te}")
        body = "*".join(mono)
        if not body:
            s = str(c)
        elif c == 1:
            s = body
        elif c == -1:
            s = "-" + body
        else:
            s = f"{c}*{body}"
        parts.append(s)
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out


class QTRat:
    """Reduced rational function num/den in Q(q, t)."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, reduce=True):
        if isinstance(num, int):
            num = QTPoly.const(num)
        if den is None:
            den = QTPoly._raw(dict(_ONE_D))
        elif isinstance(den, int):
            den = QTPoly.const(den)
        if not den:
            raise DivisionByZero("zero denominator")
        if reduce:
            num, den = _reduce_pair(num, den)
        self.num = num
        self.den = den

    @classmethod
    def _raw(cls, num, den):
        r = object.__new__(cls)
        r.num = num
        r.den = den
        return r

    @classmethod
    def monomial(cls, qe=0, te=0, c=1):
        """c * q^qe * t^te with exponents of either sign."""
        if not c:
            return cls._raw(QTPoly._raw({}), QTPoly._raw(dict(_ONE_D)))
        nq, nt = max(qe, 0), max(te, 0)
        dq, dt = max(-qe, 0), max(-te, 0)
        if c < 0 or (dq, dt) != (0, 0):
            num = QTPoly.mono(nq, nt, c)
            den = QTPoly.mono(dq, dt, 1)
            return cls._raw(num, den)
        return cls._raw(QTPoly.mono(nq, nt, c), QTPoly._raw(dict(_ONE_D)))

    @classmethod
    def from_fraction(cls, f):
        f = Fraction(f)
        return cls._raw(QTPoly.const(f.numerator), QTPoly.const(f.denominator))

    def is_zero(self):
        return not self.num.d

    def is_one(self):
        return self.num.is_one() and self.den.is_one()

    def __bool__(self):
        return bool(self.num.d)

    def __eq__(self, other):
        if isinstance(other, int):
            other = QTRat(other)
        return (isinstance(other, QTRat) and self.num.d == other.num.d
                and self.den.d == other.den.d)

    def __hash__(self):
        return hash((frozenset(self.num.d.items()), frozenset(self.den.d.items())))

    def __add__(self, other):
        if isinstance(other, int):
            other = QTRat(other)
        elif not isinstance(other, QTRat):
            return NotImplemented
        if not self.num.d:
            return other
        if not other.num.d:
            return self
        b, d = self.den, other.den
        if b.d == d.d:
            e = self.num + other.num
            if not e.d:
                return _ZERO
            g = _dict_gcd(e.d, b.d)
            if g == _ONE_D:
                return QTRat._raw(e, QTPoly._raw(dict(b.d)))
            return QTRat._raw(QTPoly._raw(_dict_divexact(e.d, g)),
                              QTPoly._raw(_dict_divexact(b.d, g)))
        g = _dict_gcd(b.d, d.d)
        if g == _ONE_D:
            num = self.num * other.den + other.num * self.den
            if not num.d:
                return _ZERO
            return QTRat._raw(num, b * d)
        b0 = QTPoly._raw(_dict_divexact(b.d, g))
        d0 = QTPoly._raw(_dict_divexact(d.d, g))
        e = self.num * d0 + other.num * b0
        if not e.d:
            return _ZERO
        h = _dict_gcd(e.d, g)
        if h == _ONE_D:
            return QTRat._raw(e, b0 * d)
        return QTRat._raw(QTPoly._raw(_dict_divexact(e.d, h)),
                          b0 * QTPoly._raw(_dict_divexact(d.d, h)))

    __radd__ = __add__

    def __neg__(self):
        return QTRat._raw(-self.num, self.den)

    def __sub__(self, other):
        if isinstance(other, int):
            other = QTRat(other)
        elif not isinstance(other, QTRat):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            other = QTRat(other)
        elif not isinstance(other, QTRat):
            return NotImplemented
        if not self.num.d or not other.num.d:
            return _ZERO
        a, b = self.num, self.den
        c, d = other.num, other.den
        g1 = _dict_gcd(a.d, d.d)
        g2 = _dict_gcd(c.d, b.d)
        if g1 != _ONE_D:
            a = QTPoly._raw(_dict_divexact(a.d, g1))
            d = QTPoly._raw(_dict_divexact(d.d, g1))
        if g2 != _ONE_D:
            c = QTPoly._raw(_dict_divexact(c.d, g2))
            b = QTPoly._raw(_dict_divexact(b.d, g2))
        return QTRat._raw(a * c, b * d)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num.d:
            raise DivisionByZero("inverse of zero")
        num, den = self.den, self.num
        if den.leading()[1] < 0:
            num, den = -num, -den
        return QTRat._raw(num, den)

    def __truediv__(self, other):
        if isinstance(other, int):
            other = QTRat(other)
        elif not isinstance(other, QTRat):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n):
        if n == 0:
            return _ONE
        if n < 0:
            return self.inverse() ** (-n)
        out = _ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def as_fraction(self):
        """Value as a Fraction; requires a constant (no q, t left)."""
        for k in self.num.d:
            if k != (0, 0):
                raise ValueError("not a constant")
        for k in self.den.d:
            if k != (0, 0):
                raise ValueError("not a constant")
        return Fraction(self.num.d.get((0, 0), 0), self.den.d[(0, 0)])

    def to_obj(self):
        return {"num": self.num.triples(), "den": self.den.triples()}

    @classmethod
    def from_obj(cls, obj):
        num = {}
        for qe, te, c in obj["num"]:
            num[(int(qe), int(te))] = int(c)
        den = {}
        for qe, te, c in obj["den"]:
            den[(int(qe), int(te))] = int(c)
        if not den:
            raise DivisionByZero("zero denominator in serialized value")
        return cls._raw(QTPoly._raw(num), QTPoly._raw(den))

    def __str__(self):
        if self.den.is_one():
            return _poly_str(self.num.d)
        ns = _poly_str(self.num.d)
        ds = _poly_str(self.den.d)
        if len(self.num.d) > 1:
            ns = f"({ns})"
        if " " in ds or "*" in ds:
            ds = f"({ds})"
        return f"{ns}/{ds}"

    __repr__ = __str__

    def latex(self):
        if self.den.is_one():
            return _poly_latex(self.num.d)
        return r"\frac{%s}{%s}" % (_poly_latex(self.num.d), _poly_latex(self.den.d))


def _poly_latex(d):
    if not d:
        return "0"
    parts = []
    for (qe, te) in sorted(d, reverse=True):
        c = d[(qe, te)]
        mono = ""
        if qe:
            mono += "q" if qe == 1 else "q^{%d}" % qe
        if te:
            mono += "t" if te == 1 else "t^{%d}" % te
        if not mono:
            s = str(c)
        elif c == 1:
            s = mono
        elif c == -1:
            s = "-" + mono
        else:
            s = f"{c}{mono}"
        parts.append(s)
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out


def _reduce_pair(num, den):
    if not num.d:
        return QTPoly._raw({}), QTPoly._raw(dict(_ONE_D))
    g = _dict_gcd(num.d, den.d)
    if g != _ONE_D:
        num = QTPoly._raw(_dict_divexact(num.d, g))
        den = QTPoly._raw(_dict_divexact(den.d, g))
    if den.leading()[1] < 0:
        num, den = -num, -den
    return num, den


_ZERO = QTRat(0)
_ONE = QTRat(1)


def zero():
    return _ZERO


def one():
    return _ONE


def bracket(m, c=0):
    """(1 - q^c t^m)/(1 - t); the t-integer [m] when c = 0."""
    if m < 0 or c < 0:
        raise ValueError("bracket arguments must be nonnegative")
    num = QTPoly._raw({(0, 0): 1}) - QTPoly.mono(c, m)
    den = QTPoly._raw({(0, 0): 1, (0, 1): -1})
    return QTRat(num, den)


def specialize(r, q=None, t=None):
    """Substitute q and/or t in a QTRat.

    Each of q, t may be None (leave alone), an int/Fraction (numeric),
    or the name of the other variable ("t" for q, "q" for t).  Raises
    SpecializationPole when the reduced denominator vanishes.
    """
    num = _spec_poly(r.num.d, q, t)
    den = _spec_poly(r.den.d, q, t)
    if den.is_zero():
        raise SpecializationPole(f"denominator vanishes under q={q!r}, t={t!r}")
    return num / den


def _spec_poly(d, q, t):
    out = _ZERO
    for (qe, te), c in d.items():
        if q is None:
            nqe, scale_q = qe, None
        elif q == "t":
            nqe, scale_q = 0, None
            te = te + qe
        else:
            nqe, scale_q = 0, Fraction(q) ** qe
        if t is None:
            nte, scale_t = te, None
        elif t == "q":
            nqe, nte, scale_t = nqe + te, 0, None
        else:
            nte, scale_t = 0, Fraction(t) ** te
        term = QTRat.monomial(nqe, nte, c)
        if scale_q is not None:
            term = term * QTRat.from_fraction(scale_q)
        if scale_t is not None:
            term = term * QTRat.from_fraction(scale_t)
        out = out + term
    return out
