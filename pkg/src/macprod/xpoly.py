"""Polynomials in x_1..x_n over Q(q, t), with the rescaled Hecke action.

The generator used everywhere is the integral form T~_i = t^(1/2) T_i:

    T~_i f = t f - (t x_i - x_{i+1}) (f - s_i f)/(x_i - x_{i+1}),

which satisfies (T~_i - t)(T~_i + 1) = 0 and the braid relations, and the
cyclic shift (w f)(x_1..x_n) = f(q x_n, x_1, .., x_{n-1}).  The divided
difference is computed by exact synthetic division; a nonzero remainder
is a bug, not a user error.
"""

from __future__ import annotations

from .errors import (IndexOutOfRange, InternalNonDivisibility)
from .qtfield import QTRat, specialize as _spec_rat

_T = QTRat.monomial(te=1)
_ONE = QTRat(1)


class XPoly:
    """Sparse polynomial: dict mapping exponent tuples to nonzero QTRat."""

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {}
        if terms:
            for e, c in terms.items():
                if c:
                    self.terms[tuple(e)] = c

    @classmethod
    def _raw(cls, n, terms):
        p = object.__new__(cls)
        p.n = n
        p.terms = terms
        return p

    @classmethod
    def zero(cls, n):
        return cls._raw(n, {})

    @classmethod
    def one(cls, n):
        return cls._raw(n, {(0,) * n: _ONE})

    @classmethod
    def monomial(cls, exps, coef=None):
        exps = tuple(exps)
        if any(e < 0 for e in exps):
            raise IndexOutOfRange(f"negative exponent in {exps}")
        c = _ONE if coef is None else (QTRat(coef) if isinstance(coef, int) else coef)
        return cls._raw(len(exps), {exps: c} if c else {})

    @classmethod
    def variable(cls, i, n):
        if not 1 <= i <= n:
            raise IndexOutOfRange(f"x_{i} out of range for n={n}")
        e = [0] * n
        e[i - 1] = 1
        return cls._raw(n, {tuple(e): _ONE})

    def _check(self, other):
        if self.n != other.n:
            raise IndexOutOfRange(f"mixed variable counts {self.n} and {other.n}")

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, XPoly) and self.n == other.n
                and self.terms == other.terms)

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            nv = out.get(e)
            nv = c if nv is None else nv + c
            if nv:
                out[e] = nv
            else:
                out.pop(e, None)
        return XPoly._raw(self.n, out)

    def __sub__(self, other):
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            nv = out.get(e)
            nv = -c if nv is None else nv - c
            if nv:
                out[e] = nv
            else:
                out.pop(e, None)
        return XPoly._raw(self.n, out)

    def __neg__(self):
        return XPoly._raw(self.n, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (QTRat, int)):
            return self.scale(other)
        self._check(other)
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                k = tuple(x + y for x, y in zip(ea, eb))
                v = ca * cb
                nv = out.get(k)
                nv = v if nv is None else nv + v
                if nv:
                    out[k] = nv
                else:
                    del out[k]
        return XPoly._raw(self.n, out)

    __rmul__ = __mul__

    def scale(self, c):
        if isinstance(c, int):
            c = QTRat(c)
        if not c:
            return XPoly._raw(self.n, {})
        return XPoly._raw(self.n, {e: v * c for e, v in self.terms.items()})

    def coeff_of(self, exps):
        from .qtfield import zero
        return self.terms.get(tuple(exps), zero())

    def degree(self):
        return max((sum(e) for e in self.terms), default=0)

    def is_homogeneous(self, d=None):
        degs = {sum(e) for e in self.terms}
        if not degs:
            return True
        return degs == {d if d is not None else degs.pop()}

    def apply_s(self, i):
        """Swap x_i and x_{i+1} (1-based adjacent transposition)."""
        if not 1 <= i <= self.n - 1:
            raise IndexOutOfRange(f"s_{i} out of range for n={self.n}")
        k = i - 1
        out = {}
        for e, c in self.terms.items():
            if e[k] == e[k + 1]:
                out[e] = c
            else:
                f = list(e)
                f[k], f[k + 1] = f[k + 1], f[k]
                out[tuple(f)] = c
        return XPoly._raw(self.n, out)

    def apply_perm(self, w):
        """Relabel variables by the 1-based permutation: x_i -> x_{w(i)}."""
        if sorted(w) != list(range(1, self.n + 1)):
            raise IndexOutOfRange(f"{w} is not a permutation of 1..{self.n}")
        out = {}
        for e, c in self.terms.items():
            f = [0] * self.n
            for i, ei in enumerate(e):
                f[w[i] - 1] = ei
            out[tuple(f)] = c
        return XPoly._raw(self.n, out)

    def divided_difference(self, i):
        """(f - s_i f)/(x_i - x_{i+1}); division is exact by symmetry."""
        diff = self - self.apply_s(i)
        if not diff.terms:
            return XPoly.zero(self.n)
        k = i - 1
        buckets = {}
        for e, c in diff.terms.items():
            buckets.setdefault(e[k], {})[e] = c
        quot = {}
        for d in range(max(buckets), 0, -1):
            for e, c in buckets.get(d, {}).items():
                if not c:
                    continue
                qe = list(e)
                qe[k] -= 1
                qe = tuple(qe)
                nv = quot.get(qe)
                nv = c if nv is None else nv + c
                if nv:
                    quot[qe] = nv
                else:
                    del quot[qe]
                re = list(qe)
                re[k + 1] += 1
                re = tuple(re)
                lower = buckets.setdefault(d - 1, {})
                lv = lower.get(re)
                lower[re] = c if lv is None else lv + c
        for c in buckets.get(0, {}).values():
            if c:
                raise InternalNonDivisibility(
                    "remainder after dividing by x_%d - x_%d" % (i, i + 1))
        return XPoly._raw(self.n, quot)

    def demazure_T(self, i):
        """T~_i f = t f - (t x_i - x_{i+1}) (f - s_i f)/(x_i - x_{i+1})."""
        dd = self.divided_difference(i)
        if not dd.terms:
            return self.scale(_T)
        ei = [0] * self.n
        ei[i - 1] = 1
        ej = [0] * self.n
        ej[i] = 1
        fac = XPoly._raw(self.n, {tuple(ei): _T, tuple(ej): -_ONE})
        return self.scale(_T) - fac * dd

    def demazure_T_inv(self, i):
        """T~_i^{-1} f = (T~_i f - (t - 1) f)/t."""
        tm1 = _T - _ONE
        return (self.demazure_T(i) - self.scale(tm1)).scale(_T.inverse())

    def shift_omega(self):
        """f(x) -> f(q x_n, x_1, .., x_{n-1}): rotate exponents, pay q^(e_1)."""
        out = {}
        for e, c in self.terms.items():
            k = e[1:] + (e[0],)
            out[k] = c * QTRat.monomial(qe=e[0]) if e[0] else c
        return XPoly._raw(self.n, out)

    def is_symmetric(self):
        return all(self.apply_s(i) == self for i in range(1, self.n))

    def specialize(self, q=None, t=None):
        out = {}
        for e, c in self.terms.items():
            v = _spec_rat(c, q=q, t=t)
            if v:
                out[e] = v
        return XPoly._raw(self.n, out)

    def eval(self, xs):
        """Value at x_i = xs[i-1] (QTRat or int entries)."""
        if len(xs) != self.n:
            raise IndexOutOfRange("wrong number of values")
        xs = [QTRat(v) if isinstance(v, int) else v for v in xs]
        from .qtfield import zero
        total = zero()
        for e, c in self.terms.items():
            v = c
            for ei, xi in zip(e, xs):
                if ei:
                    v = v * xi ** ei
            total = total + v
        return total

    def eval_ones(self):
        from .qtfield import zero
        total = zero()
        for c in self.terms.values():
            total = total + c
        return total

    def sorted_terms(self):
        """Terms in graded-lex descending order."""
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]),
                      reverse=True)

    def to_obj(self):
        return {"n": self.n,
                "terms": [{"exp": list(e), "coef": c.to_obj()}
                          for e, c in sorted(self.terms.items())]}

    @classmethod
    def from_obj(cls, obj):
        n = int(obj["n"])
        terms = {}
        for entry in obj["terms"]:
            e = tuple(int(v) for v in entry["exp"])
            if len(e) != n:
                raise IndexOutOfRange("exponent length != n")
            terms[e] = QTRat.from_obj(entry["coef"])
        return cls._raw(n, terms)

    def _mono_str(self, e, sep="*", pow_fmt="^%d", var="x%d"):
        parts = []
        for i, ei in enumerate(e, start=1):
            if ei:
                parts.append(var % i + (pow_fmt % ei if ei > 1 else ""))
        return sep.join(parts)

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        for e, c in self.sorted_terms():
            mono = self._mono_str(e)
            cs = str(c)
            if not mono:
                chunks.append(cs)
            elif c.is_one():
                chunks.append(mono)
            elif len(c.num.d) > 1 and c.den.is_one():
                chunks.append(f"({cs})*{mono}")
            else:
                chunks.append(f"{cs}*{mono}")
        return " + ".join(chunks)

    __repr__ = __str__

    def latex(self):
        if not self.terms:
            return "0"
        chunks = []
        for e, c in self.sorted_terms():
            mono = self._mono_str(e, sep=" ", pow_fmt="^{%d}", var="x_{%d}")
            if not mono:
                chunks.append(c.latex())
            elif c.is_one():
                chunks.append(mono)
            else:
                cl = c.latex()
                if len(c.num.d) > 1 and c.den.is_one():
                    cl = r"\left(%s\right)" % cl
                chunks.append(f"{cl}\\, {mono}")
        return " + ".join(chunks)
