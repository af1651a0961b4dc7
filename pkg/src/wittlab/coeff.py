"""Coefficient rings carrying a special lambda-ring structure.

Every ring is described by its Adams operations.  The lambda and symmetric
power operations are recovered from them through the Newton recursions

    n lambda^n(x) = sum_{i=1..n} (-1)^(i-1) Psi^i(x) lambda^(n-i)(x)
    n S^n(x)      = sum_{i=1..n} Psi^i(x) S^(n-i)(x)

Division by ``n`` goes through :meth:`Ring.div`, which raises
:class:`IntegralityError` in an integral ring when a denominator survives.

Ring values are native Python objects: ``int`` for the integers,
``Fraction`` for the rationals, and :class:`~wittlab.poly.Poly` for the
polynomial rings.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from .arith import normalize
from .poly import Poly, PolyContext


class IntegralityError(ArithmeticError):
    """An exact division left a denominator in an integral ring."""


class TruncationError(ValueError):
    """A request needs more components than a truncation holds."""


class Ring:
    """Base class; subclasses are frozen dataclasses so they compare by value."""

    integral = False
    binomial = False

    # basic structure
    def zero(self):
        return 0

    def one(self):
        return 1

    def coerce(self, x):
        raise NotImplementedError

    def is_zero(self, x) -> bool:
        return not x

    def adams(self, n: int, x):
        raise NotImplementedError

    def div(self, x, n: int):
        """Exact division of ``x`` by the integer ``n``."""
        raise NotImplementedError

    def random_element(self, rng: random.Random, size: int = 3):
        raise NotImplementedError

    # derived operations
    def lambdas(self, x, n: int) -> list:
        """``[lambda^0(x), ..., lambda^n(x)]``."""
        out = [self.one()]
        psi = [None] + [self.adams(i, x) for i in range(1, n + 1)]
        for k in range(1, n + 1):
            acc = self.zero()
            for i in range(1, k + 1):
                term = psi[i] * out[k - i]
                acc = acc + term if i % 2 else acc - term
            out.append(self.div(acc, k))
        return out

    def symmetric_powers(self, x, n: int) -> list:
        """``[S^0(x), ..., S^n(x)]``."""
        out = [self.one()]
        psi = [None] + [self.adams(i, x) for i in range(1, n + 1)]
        for k in range(1, n + 1):
            acc = self.zero()
            for i in range(1, k + 1):
                acc = acc + psi[i] * out[k - i]
            out.append(self.div(acc, k))
        return out

    def lam(self, n: int, x):
        return self.lambdas(x, n)[n]

    def sym(self, n: int, x):
        return self.symmetric_powers(x, n)[n]

    def power(self, x, k: int):
        result = self.one()
        base = x
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def format(self, x) -> str:
        return str(x)


@dataclass(frozen=True)
class Integers(Ring):
    integral = True
    binomial = True

    def coerce(self, x):
        if isinstance(x, bool):
            raise TypeError("bool is not an integer value")
        if isinstance(x, int):
            return x
        if isinstance(x, Fraction) and x.denominator == 1:
            return x.numerator
        raise TypeError(f"{x!r} is not an integer")

    def adams(self, n, x):
        return x

    def div(self, x, n):
        q, r = divmod(x, n)
        if r:
            raise IntegralityError(f"{x} is not divisible by {n} in the integers")
        return q

    def random_element(self, rng, size=3):
        return rng.randint(-size, size)

    def __str__(self):
        return "int"


@dataclass(frozen=True)
class Rationals(Ring):
    binomial = True

    def coerce(self, x):
        if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
            return normalize(Fraction(x))
        raise TypeError(f"{x!r} is not rational")

    def adams(self, n, x):
        return x

    def div(self, x, n):
        return normalize(Fraction(x) / n)

    def random_element(self, rng, size=3):
        return normalize(Fraction(rng.randint(-size, size), rng.randint(1, size)))

    def __str__(self):
        return "rat"


class _PolyRing(Ring):
    """Shared code for the polynomial rings over the rationals."""

    @property
    def ctx(self) -> PolyContext:
        raise NotImplementedError

    def zero(self):
        return self.ctx.const(0)

    def one(self):
        return self.ctx.const(1)

    def coerce(self, x):
        if isinstance(x, Poly):
            if x.ctx != self.ctx:
                raise TypeError(f"polynomial from another ring: {x.ctx}")
            return x
        if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
            return self.ctx.const(x)
        raise TypeError(f"cannot coerce {x!r} into {self}")

    def is_zero(self, x):
        return x.is_zero()

    def div(self, x, n):
        return x * Fraction(1, n)

    def gen(self, i: int) -> Poly:
        return self.ctx.var(i)


@dataclass(frozen=True)
class FreeLambda(_PolyRing):
    """Free lambda-ring over Q on one generator, truncated above degree ``D``.

    Elements are polynomials in the Adams images p_1, ..., p_D of the
    generator, deg p_k = k.  Psi^n(p_k) = p_{nk}, which is zero when nk > D.
    """

    D: int

    def __post_init__(self):
        if self.D < 1:
            raise ValueError("degree cap must be positive")

    @cached_property
    def ctx(self) -> PolyContext:
        return PolyContext([f"p{k}" for k in range(1, self.D + 1)],
                           range(1, self.D + 1), cap=self.D)

    @cached_property
    def _adams_cache(self) -> dict:
        return {}

    def p(self, k: int) -> Poly:
        if not 1 <= k <= self.D:
            return self.zero()
        return self.ctx.var(k - 1)

    def _adams_monomial(self, n, m):
        key = (n, m)
        cache = self._adams_cache
        if key in cache:
            return cache[key]
        D = self.D
        out = [0] * D
        for k, e in enumerate(m, start=1):
            if e:
                if n * k > D:
                    result = None
                    break
                out[n * k - 1] += e
        else:
            result = tuple(out)
        cache[key] = result
        return result

    def adams(self, n, x):
        if n == 1:
            return x
        return x.map_monomials(lambda m: self._adams_monomial(n, m))

    def random_element(self, rng, size=3, max_degree: int = 2, terms: int = 3):
        """Small random element: a constant plus a few low-degree monomials."""
        D = self.D
        out = self.ctx.const(rng.randint(-size, size))
        for _ in range(terms):
            deg = rng.randint(1, min(max_degree, D))
            mono = [0] * D
            left = deg
            while left:
                k = rng.randint(1, left)
                mono[k - 1] += 1
                left -= k
            out = out + self.ctx.monomial(mono, rng.randint(-size, size))
        return out

    def __str__(self):
        return f"free:{self.D}"


@dataclass(frozen=True)
class MultiPoly(_PolyRing):
    """Q[x_1, ..., x_k] with each variable a line element: Psi^n(x_i) = x_i^n."""

    nvars: int
    names: tuple = field(default=None, compare=True)

    @cached_property
    def ctx(self) -> PolyContext:
        names = self.names or tuple(f"x{i}" for i in range(1, self.nvars + 1))
        if len(names) != self.nvars:
            raise ValueError("one name per variable")
        return PolyContext(names)

    def adams(self, n, x):
        if n == 1:
            return x
        return x.map_monomials(lambda m: tuple(n * e for e in m))

    def random_element(self, rng, size=3, max_degree: int = 2, terms: int = 3):
        out = self.ctx.const(rng.randint(-size, size))
        for _ in range(terms):
            mono = [0] * self.nvars
            for _ in range(rng.randint(1, max_degree)):
                mono[rng.randrange(self.nvars)] += 1
            out = out + self.ctx.monomial(mono, rng.randint(-size, size))
        return out

    def __str__(self):
        return f"poly:{self.nvars}"


@dataclass(frozen=True)
class Binomial(Ring):
    """Wrap a torsion-free ring with the trivial Adams operations Psi^n = id."""

    base: Ring

    binomial = True

    @property
    def integral(self):
        return self.base.integral

    def zero(self):
        return self.base.zero()

    def one(self):
        return self.base.one()

    def coerce(self, x):
        return self.base.coerce(x)

    def is_zero(self, x):
        return self.base.is_zero(x)

    def adams(self, n, x):
        return x

    def div(self, x, n):
        return self.base.div(x, n)

    def random_element(self, rng, size=3, **kw):
        return self.base.random_element(rng, size, **kw)

    def __str__(self):
        return f"binom({self.base})"


# A RingSpec is simply the ring object.
RingSpec = Ring

_RING_RE = re.compile(r"^(int|rat|free:(\d+)|poly:(\d+)|binom:(.+))$")


def parse_ring(text: str) -> Ring:
    """Parse ``int``, ``rat``, ``free:D``, ``poly:k`` or ``binom:<ring>``."""
    m = _RING_RE.match(text.strip())
    if not m:
        raise ValueError(f"unknown ring {text!r}; expected int, rat, free:D, poly:k or binom:<ring>")
    if m.group(1) == "int":
        return Integers()
    if m.group(1) == "rat":
        return Rationals()
    if m.group(2):
        return FreeLambda(int(m.group(2)))
    if m.group(3):
        return MultiPoly(int(m.group(3)))
    return Binomial(parse_ring(m.group(4)))


@dataclass(frozen=True)
class Elem:
    """A ring value paired with its ring, with operator sugar."""

    ring: Ring
    value: object

    def _v(self, other):
        if isinstance(other, Elem):
            if other.ring != self.ring:
                raise ValueError("elements of different rings")
            return other.value
        return self.ring.coerce(other)

    def __add__(self, other):
        return Elem(self.ring, self.value + self._v(other))

    __radd__ = __add__

    def __sub__(self, other):
        return Elem(self.ring, self.value - self._v(other))

    def __rsub__(self, other):
        return Elem(self.ring, self._v(other) - self.value)

    def __mul__(self, other):
        return Elem(self.ring, self.value * self._v(other))

    __rmul__ = __mul__

    def __neg__(self):
        return Elem(self.ring, -self.value)

    def __pow__(self, k):
        return Elem(self.ring, self.ring.power(self.value, k))

    def __eq__(self, other):
        if isinstance(other, Elem):
            return self.ring == other.ring and self.value == other.value
        try:
            return self.value == self.ring.coerce(other)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash((self.ring, self.value))

    def adams(self, n):
        return Elem(self.ring, self.ring.adams(n, self.value))

    def lam(self, n):
        return Elem(self.ring, self.ring.lam(n, self.value))

    def sym(self, n):
        return Elem(self.ring, self.ring.sym(n, self.value))

    def __repr__(self):
        return f"Elem({self.ring}, {self.value!r})"


# -- serialization --------------------------------------------------------

def _monomial_name(ctx: PolyContext, m) -> str:
    parts = [n if e == 1 else f"{n}^{e}" for n, e in zip(ctx.names, m) if e]
    return "*".join(parts) if parts else "1"


def _parse_monomial(ctx: PolyContext, text: str):
    exps = [0] * ctx.nvars
    text = text.strip()
    if text == "1":
        return tuple(exps)
    index = {n: i for i, n in enumerate(ctx.names)}
    for factor in text.split("*"):
        name, _, power = factor.strip().partition("^")
        if name not in index:
            raise ValueError(f"unknown variable {name!r}")
        try:
            e = int(power) if power else 1
        except ValueError:
            raise ValueError(f"bad exponent in {factor!r}") from None
        if e < 0:
            raise ValueError(f"negative exponent in {factor!r}")
        exps[index[name]] += e
    return tuple(exps)


def to_json_value(ring: Ring, x):
    """Rationals become "p/q" strings; polynomials become {monomial: "p/q"}."""
    from .arith import format_rational

    if isinstance(x, Poly):
        items = sorted(x.terms.items(), key=lambda t: (x.ctx.degree(t[0]), t[0]))
        return {_monomial_name(x.ctx, m): format_rational(c) for m, c in items}
    return format_rational(x)


def from_json_value(ring: Ring, obj):
    from .arith import parse_rational

    base = ring.base if isinstance(ring, Binomial) else ring
    if isinstance(base, _PolyRing):
        if isinstance(obj, dict):
            terms: dict = {}
            for k, v in obj.items():
                m = _parse_monomial(base.ctx, k)
                terms[m] = terms.get(m, 0) + parse_rational(v)
            return Poly(base.ctx, terms)
        return base.ctx.const(parse_rational(obj))
    return ring.coerce(normalize(parse_rational(obj)))
