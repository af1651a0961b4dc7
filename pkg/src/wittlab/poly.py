"""Sparse multivariate polynomials with exact rational coefficients.

Variables may carry positive integer weights, and a context may truncate
everything above a weighted degree ``cap``.  The truncated ring is the
quotient by the ideal of monomials of weighted degree > cap, so ring
identities survive truncation exactly.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from operator import add

from .arith import normalize

Monomial = tuple[int, ...]


class PolyContext:
    """Variable names, weights and an optional weighted-degree cap."""

    def __init__(self, names, weights=None, cap: int | None = None):
        self.names = tuple(names)
        self.nvars = len(self.names)
        self.weights = tuple(weights) if weights is not None else (1,) * self.nvars
        if len(self.weights) != self.nvars or any(w < 1 for w in self.weights):
            raise ValueError("weights must be positive, one per variable")
        self.cap = cap
        self.zero_monomial: Monomial = (0,) * self.nvars
        self._degree: dict[Monomial, int] = {}
        self._key = (self.names, self.weights, cap)

    def __eq__(self, other):
        return isinstance(other, PolyContext) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"PolyContext({list(self.names)}, cap={self.cap})"

    def degree(self, mono: Monomial) -> int:
        d = self._degree.get(mono)
        if d is None:
            d = sum(w * e for w, e in zip(self.weights, mono))
            self._degree[mono] = d
        return d

    def var(self, i: int) -> "Poly":
        """The ``i``-th variable, 0-based."""
        mono = [0] * self.nvars
        mono[i] = 1
        return Poly(self, {tuple(mono): 1})

    def const(self, c) -> "Poly":
        return Poly(self, {self.zero_monomial: c} if c else {})

    def monomial(self, exps, coeff=1) -> "Poly":
        return Poly(self, {tuple(exps): coeff})

    def from_dict(self, terms: dict) -> "Poly":
        return Poly(self, dict(terms))


class Poly:
    """Immutable sparse polynomial.

    Stored as integer numerators over one common positive denominator, so the
    inner multiplication loops only touch Python ints.  ``terms`` exposes the
    coefficients as int/Fraction.
    """

    __slots__ = ("ctx", "_num", "_den", "_terms", "_hash")

    def __init__(self, ctx: PolyContext, terms: dict):
        cap = ctx.cap
        den = 1
        items = []
        for m, c in terms.items():
            if c and (cap is None or ctx.degree(m) <= cap):
                if isinstance(c, Fraction):
                    den = den * c.denominator // gcd(den, c.denominator)
                items.append((m, c))
        num = {}
        for m, c in items:
            if isinstance(c, Fraction):
                num[m] = c.numerator * (den // c.denominator)
            else:
                num[m] = c * den
        self._set(ctx, num, den)

    def _set(self, ctx, num, den):
        self.ctx = ctx
        if den != 1 and num:
            g = den
            for v in num.values():
                g = gcd(g, v)
                if g == 1:
                    break
            if g != 1:
                num = {m: v // g for m, v in num.items()}
                den //= g
        elif not num:
            den = 1
        self._num = num
        self._den = den
        self._terms = None
        self._hash = None

    @classmethod
    def _raw(cls, ctx, num, den=1):
        """Build from already truncated integer numerators (zeros removed)."""
        obj = cls.__new__(cls)
        obj._set(ctx, num, den)
        return obj

    @property
    def terms(self) -> dict:
        t = self._terms
        if t is None:
            d = self._den
            if d == 1:
                t = dict(self._num)
            else:
                t = {m: normalize(Fraction(v, d)) for m, v in self._num.items()}
            self._terms = t
        return t

    # -- coercion --------------------------------------------------------
    def _lift(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.ctx != self.ctx:
                raise ValueError(f"mixing polynomials from {self.ctx} and {other.ctx}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ctx.const(other)
        return NotImplemented

    # -- arithmetic ------------------------------------------------------
    def _combine(self, other, sign):
        d1, d2 = self._den, other._den
        if d1 == d2:
            den, f1, f2 = d1, 1, 1
        else:
            g = gcd(d1, d2)
            den = d1 // g * d2
            f1, f2 = den // d1, den // d2
        if f1 == 1:
            out = dict(self._num)
        else:
            out = {m: v * f1 for m, v in self._num.items()}
        for m, v in other._num.items():
            v = sign * v * f2
            w = out.get(m, 0) + v
            if w:
                out[m] = w
            else:
                out.pop(m, None)
        return Poly._raw(self.ctx, out, den)

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self._combine(other, 1)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.ctx, {m: -v for m, v in self._num.items()}, self._den)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self._combine(other, -1)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other._combine(self, -1)

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return Poly._raw(self.ctx, {})
            return Poly._raw(self.ctx, {m: v * other for m, v in self._num.items()}, self._den)
        if isinstance(other, Fraction):
            if not other:
                return Poly._raw(self.ctx, {})
            return Poly._raw(self.ctx, {m: v * other.numerator for m, v in self._num.items()},
                             self._den * other.denominator)
        other = self._lift(other)
        if other is NotImplemented:
            return other
        ctx = self.ctx
        a, b = self._num, other._num
        if len(a) > len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        cap = ctx.cap
        if cap is None:
            for ma, ca in a.items():
                for mb, cb in b.items():
                    m = tuple(map(add, ma, mb))
                    out[m] = get(m, 0) + ca * cb
        else:
            deg = ctx.degree
            bs = sorted(b.items(), key=lambda t: deg(t[0]))
            bdeg = [deg(m) for m, _ in bs]
            for ma, ca in a.items():
                room = cap - deg(ma)
                for (mb, cb), db in zip(bs, bdeg):
                    if db > room:
                        break
                    m = tuple(map(add, ma, mb))
                    out[m] = get(m, 0) + ca * cb
        return Poly._raw(ctx, {m: c for m, c in out.items() if c}, self._den * other._den)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers")
        result = self.ctx.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c) -> "Poly":
        return self * c

    # -- queries ---------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ctx.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ctx == other.ctx and self._den == other._den and self._num == other._num

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ctx, self._den, frozenset(self._num.items())))
        return self._hash

    def __bool__(self):
        return bool(self._num)

    def is_zero(self) -> bool:
        return not self._num

    def coefficient(self, mono) -> Fraction | int:
        return self.terms.get(tuple(mono), 0)

    def constant_term(self):
        return self.terms.get(self.ctx.zero_monomial, 0)

    def degree(self) -> int:
        """Largest weighted degree present (-1 for zero)."""
        return max((self.ctx.degree(m) for m in self._num), default=-1)

    def min_degree(self) -> int:
        return min((self.ctx.degree(m) for m in self._num), default=-1)

    def _filter(self, keep) -> "Poly":
        return Poly._raw(self.ctx, {m: v for m, v in self._num.items() if keep(m)}, self._den)

    def homogeneous_part(self, d: int) -> "Poly":
        deg = self.ctx.degree
        return self._filter(lambda m: deg(m) == d)

    def truncate(self, d: int) -> "Poly":
        deg = self.ctx.degree
        return self._filter(lambda m: deg(m) <= d)

    def is_integral(self) -> bool:
        return self._den == 1

    def map_monomials(self, fn) -> "Poly":
        """Apply ``fn`` to each exponent tuple; ``None`` drops the term."""
        out: dict = {}
        cap = self.ctx.cap
        deg = self.ctx.degree
        for m, v in self._num.items():
            m2 = fn(m)
            if m2 is not None and (cap is None or deg(m2) <= cap):
                w = out.get(m2, 0) + v
                if w:
                    out[m2] = w
                else:
                    del out[m2]
        return Poly._raw(self.ctx, out, self._den)

    def evaluate(self, values, one=1):
        """Substitute ``values[i]`` for variable ``i`` in any ring supporting + and *."""
        cache: dict = {}
        total = 0
        for m, c in self.terms.items():
            term = None
            for i, e in enumerate(m):
                if e:
                    key = (i, e)
                    p = cache.get(key)
                    if p is None:
                        p = _power(values[i], e, one)
                        cache[key] = p
                    term = p if term is None else term * p
            term = one if term is None else term
            total = total + term * c
        return total

    def __repr__(self):
        if not self._num:
            return "0"
        parts = []
        terms = self.terms
        for m in sorted(terms, key=lambda m: (self.ctx.degree(m), m)):
            c = terms[m]
            mono = "*".join(
                n if e == 1 else f"{n}^{e}" for n, e in zip(self.ctx.names, m) if e
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"({c})*{mono}")
        return " + ".join(parts)


def _power(x, e, one):
    result = None
    base = x
    while e:
        if e & 1:
            result = base if result is None else result * base
        e >>= 1
        if e:
            base = base * base
    return one if result is None else result
