"""Symmetric functions in the power-sum basis.

A symmetric function truncated at degree D is an element of the free
lambda-ring ``FreeLambda(D)``: a polynomial in p_1, ..., p_D.  Plethysm
substitutes p_j -> Psi^j(inner).  This module also builds the universal
integral polynomials behind the lambda-ring Lambda_1, the necklace
polynomials of an alphabet, and the supersymmetric generator families.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .arith import divisors, gcd, mobius
from .coeff import FreeLambda, MultiPoly, Ring
from .poly import Poly, PolyContext


# -- Newton identities over any Q-algebra of values ------------------------

def h_from_p(p: list, one) -> list:
    """[h_0, ..., h_n] from [p_1, ..., p_n]:  n h_n = sum p_i h_{n-i}."""
    h = [one]
    for n in range(1, len(p) + 1):
        acc = p[0] * h[n - 1]
        for i in range(2, n + 1):
            acc = acc + p[i - 1] * h[n - i]
        h.append(acc * Fraction(1, n))
    return h


def e_from_p(p: list, one) -> list:
    """[e_0, ..., e_n] from [p_1, ..., p_n]:  n e_n = sum (-1)^(i-1) p_i e_{n-i}."""
    e = [one]
    for n in range(1, len(p) + 1):
        acc = p[0] * e[n - 1]
        for i in range(2, n + 1):
            term = p[i - 1] * e[n - i]
            acc = acc + term if i % 2 else acc - term
        e.append(acc * Fraction(1, n))
    return e


def p_from_h(h: list) -> list:
    """[p_1, ..., p_n] from [h_1, ..., h_n] (integral)."""
    p: list = []
    for n in range(1, len(h) + 1):
        acc = h[n - 1] * n
        for i in range(1, n):
            acc = acc - p[i - 1] * h[n - i - 1]
        p.append(acc)
    return p


def p_from_e(e: list) -> list:
    """[p_1, ..., p_n] from [e_1, ..., e_n] (integral)."""
    p: list = []
    for n in range(1, len(e) + 1):
        acc = e[n - 1] * n
        for i in range(1, n):
            term = p[i - 1] * e[n - i - 1]
            acc = acc - term if i % 2 else acc + term
        p.append(acc if n % 2 else -acc)
    return p


# -- universal polynomials -----------------------------------------------

@lru_cache(maxsize=None)
def _letters_ctx(prefixes: tuple, n: int) -> PolyContext:
    names = [f"{c}{i}" for c in prefixes for i in range(1, n + 1)]
    weights = [i for _ in prefixes for i in range(1, n + 1)]
    return PolyContext(names, weights)


def _assert_integral(P: Poly, label: str) -> Poly:
    if not P.is_integral():
        raise AssertionError(f"{label} came out non-integral: {P}")
    return P


@lru_cache(maxsize=None)
def pbar_product(n: int) -> Poly:
    """P-bar_n(a_1..a_n; b_1..b_n): coefficient of t^n in prod 1/(1 - x_i y_j t),
    written in the complete homogeneous images a_k = h_k(X), b_k = h_k(Y)."""
    ctx = _letters_ctx(("a", "b"), n)
    a = [ctx.var(i) for i in range(n)]
    b = [ctx.var(n + i) for i in range(n)]
    pa, pb = p_from_h(a), p_from_h(b)
    pxy = [x * y for x, y in zip(pa, pb)]
    return _assert_integral(h_from_p(pxy, ctx.const(1))[n], f"P-bar_{n}")


@lru_cache(maxsize=None)
def p_elementary_product(n: int) -> Poly:
    """P_n(s; sigma): coefficient of t^n in prod (1 + x_i y_j t) in elementary images."""
    ctx = _letters_ctx(("s", "u"), n)
    s = [ctx.var(i) for i in range(n)]
    u = [ctx.var(n + i) for i in range(n)]
    ps, pu = p_from_e(s), p_from_e(u)
    pxy = [x * y for x, y in zip(ps, pu)]
    return _assert_integral(e_from_p(pxy, ctx.const(1))[n], f"P_{n}")


@lru_cache(maxsize=None)
def q_adams(n: int, k: int) -> Poly:
    """Q_{n,k}(a_1..a_{nk}): coefficient of t^k in prod 1/(1 - x_i^n t)."""
    ctx = _letters_ctx(("a",), n * k)
    a = [ctx.var(i) for i in range(n * k)]
    pa = p_from_h(a)
    pn = [pa[j * n - 1] for j in range(1, k + 1)]
    return _assert_integral(h_from_p(pn, ctx.const(1))[k], f"Q_{n},{k}")


@lru_cache(maxsize=None)
def pbar_lambda(n: int, m: int) -> Poly:
    """P-bar_{n,m}(a_1..a_{nm}): coefficient of t^n in
    prod_{i_1 < ... < i_m} 1/(1 - x_{i_1} ... x_{i_m} t)."""
    ctx = _letters_ctx(("a",), n * m)
    a = [ctx.var(i) for i in range(n * m)]
    pa = p_from_h(a)
    one = ctx.const(1)
    # p_k of the m-th exterior power is e_m evaluated on the k-th Adams image
    p_ext = [e_from_p([pa[j * k - 1] for j in range(1, m + 1)], one)[m] for k in range(1, n + 1)]
    return _assert_integral(h_from_p(p_ext, one)[n], f"P-bar_{n},{m}")


def universal_polynomials(n: int, m: int | None = None) -> Poly:
    """P-bar_n when ``m`` is None, else P-bar_{n,m}."""
    return pbar_product(n) if m is None else pbar_lambda(n, m)


# -- symmetric functions in the power-sum basis ----------------------------

SymFunc = Poly


def power_sum(R: FreeLambda, n: int) -> Poly:
    return R.p(n)


def exp_series(R: FreeLambda, g: Poly) -> Poly:
    """exp(g) truncated at degree D; g must have zero constant term."""
    if g.constant_term():
        raise ValueError("exp needs a series without constant term")
    total = R.one()
    term = R.one()
    k = 0
    while True:
        k += 1
        term = term * g * Fraction(1, k)
        if term.is_zero():
            return total
        total = total + term


def log_series(R: FreeLambda, f: Poly) -> Poly:
    """log(f) for f with constant term 1."""
    if f.constant_term() != 1:
        raise ValueError("log needs constant term 1")
    g = f - 1
    total = R.zero()
    power = R.one()
    k = 0
    while True:
        k += 1
        power = power * g
        if power.is_zero():
            return total
        total = total + power * Fraction((-1) ** (k - 1), k)


def h_list(R: FreeLambda) -> list:
    """[h_0, ..., h_D] in the power-sum basis."""
    return h_from_p([R.p(k) for k in range(1, R.D + 1)], R.one())


def e_list(R: FreeLambda) -> list:
    return e_from_p([R.p(k) for k in range(1, R.D + 1)], R.one())


def h_series(R: FreeLambda) -> Poly:
    """H = sum_n h_n = exp(sum p_n / n)."""
    return sum(h_list(R)[1:], R.one())


def e_series(R: FreeLambda) -> Poly:
    """E = sum_n e_n = exp(sum (-1)^(n-1) p_n / n)."""
    return sum(e_list(R)[1:], R.one())


def e_series_signed(R: FreeLambda) -> Poly:
    """exp(sum (-1)^n p_n / n) = sum (-1)^n h_n, the reciprocal of E."""
    return exp_series(R, sum((R.p(n) * Fraction((-1) ** n, n) for n in range(1, R.D + 1)), R.zero()))


def basis_convert(f: Poly, basis: str) -> Poly:
    """Rewrite a power-sum polynomial in the ``h``, ``e`` or ``p`` basis.

    The result is a polynomial in variables h1..hD (or e1..eD) with the same
    weights and cap.
    """
    R = FreeLambda(f.ctx.cap)
    if f.ctx != R.ctx:
        raise ValueError("expected a symmetric function in power sums")
    if basis == "p":
        return f
    if basis not in ("h", "e"):
        raise ValueError(f"unknown basis {basis!r}")
    ctx = PolyContext([f"{basis}{k}" for k in range(1, R.D + 1)], range(1, R.D + 1), cap=R.D)
    gens = [ctx.var(i) for i in range(R.D)]
    ps = p_from_h(gens) if basis == "h" else p_from_e(gens)
    return f.evaluate(ps, ctx.const(1))


def basis_to_power_sums(g: Poly, basis: str) -> Poly:
    """Inverse of :func:`basis_convert`."""
    R = FreeLambda(g.ctx.cap)
    if basis == "p":
        return g
    vals = (h_list(R) if basis == "h" else e_list(R))[1:]
    return g.evaluate(vals, R.one())


def plethysm(outer: Poly, inner: Poly) -> Poly:
    """outer o inner = outer(Psi^1 inner, Psi^2 inner, ...).

    The variables of ``outer`` are slots: slot j receives Psi^j(inner).
    With slot variables p_j this is ordinary plethysm; with the generalised
    product the family d_n is carried by how ``inner`` was built.
    """
    if outer.ctx != inner.ctx:
        raise ValueError("outer and inner must share a degree cap")
    if inner.constant_term():
        raise ValueError("inner series must have zero constant term")
    R = FreeLambda(inner.ctx.cap)
    return outer.evaluate([R.adams(j, inner) for j in range(1, R.D + 1)], R.one())


def default_family(R: FreeLambda):
    """d_n = p_1^n, under which Psi^d(d_{n/d}) = p_d^{n/d}."""
    p1 = R.p(1)
    return lambda n: p1 ** n


def l_series(R: FreeLambda) -> Poly:
    """L = sum_n (1/n) sum_{d|n} mu(d) p_d^{n/d}."""
    return sum((necklace_term(R, n) for n in range(1, R.D + 1)), R.zero())


def necklace_term(R: FreeLambda, n: int) -> Poly:
    return sum((R.p(d) ** (n // d) * mobius(d) for d in divisors(n)), R.zero()) * Fraction(1, n)


def ltilde_series(R: FreeLambda) -> Poly:
    """L-tilde = sum_n (1/n) sum_{d|n} (-1)^{n/d} mu(d) p_d^{n/d}."""
    total = R.zero()
    for n in range(1, R.D + 1):
        term = sum((R.p(d) ** (n // d) * (mobius(d) * (-1) ** (n // d)) for d in divisors(n)), R.zero())
        total = total + term * Fraction(1, n)
    return total


def a_series(R: FreeLambda, family=None) -> Poly:
    """A = exp(sum_n d_n / n) with d_n = family(n)."""
    family = family or default_family(R)
    return exp_series(R, sum((family(n) * Fraction(1, n) for n in range(1, R.D + 1)), R.zero()))


def b_series(R: FreeLambda, family=None) -> Poly:
    """B = sum_n (1/n) sum_{d|n} mu(d) Psi^d(d_{n/d})."""
    return lk_series(R, 1, family)


def ramanujan_sum(k: int, d: int) -> int:
    """c(k, d) = sum of k-th powers of the primitive d-th roots of unity."""
    g = gcd(k, d)
    return sum(e * mobius(d // e) for e in divisors(g))


def lk_series(R: FreeLambda, k: int, family=None) -> Poly:
    """L(k) = sum_n (1/n) sum_{d|n} c(k, d) Psi^d(d_{n/d})."""
    family = family or default_family(R)
    total = R.zero()
    for n in range(1, R.D + 1):
        term = R.zero()
        for d in divisors(n):
            c = ramanujan_sum(k, d)
            if c:
                term = term + R.adams(d, family(n // d)) * c
        total = total + term * Fraction(1, n)
    return total


def lk_expected(R: FreeLambda, k: int, family=None) -> Poly:
    """prod_{l | k} Psi^l(A), the value of A (*) L(k)."""
    A = a_series(R, family)
    out = R.one()
    for l in divisors(k):
        out = out * R.adams(l, A)
    return out


# -- necklace polynomials of an alphabet ----------------------------------

@dataclass(frozen=True)
class Alphabet:
    """A finite multiset of one-dimensional letters in ``ring``."""

    ring: Ring
    letters: tuple

    def power_sum(self, d: int):
        ring = self.ring
        return sum((ring.power(x, d) for x in self.letters), ring.zero())

    def adams(self, d: int) -> "Alphabet":
        return Alphabet(self.ring, tuple(self.ring.power(x, d) for x in self.letters))

    def times(self, other: "Alphabet") -> "Alphabet":
        return Alphabet(self.ring, tuple(x * y for x in self.letters for y in other.letters))

    def power(self, r: int) -> "Alphabet":
        out = Alphabet(self.ring, (self.ring.one(),))
        for _ in range(r):
            out = out.times(self)
        return out


def necklace_sym(alphabet: Alphabet, k: int):
    """M(X, k) = (1/k) sum_{d|k} mu(d) p_d(X)^{k/d}."""
    ring = alphabet.ring
    acc = ring.zero()
    for d in divisors(k):
        mu = mobius(d)
        if mu:
            acc = acc + ring.power(alphabet.power_sum(d), k // d) * mu
    return ring.div(acc, k)


# -- supersymmetric polynomials -------------------------------------------

def super_ring(a: int, b: int) -> MultiPoly:
    if a < 0 or b < 0 or a + b < 1:
        raise ValueError("need a, b >= 0 with a + b >= 1")
    names = tuple(f"x{i}" for i in range(1, a + 1)) + tuple(f"y{j}" for j in range(1, b + 1))
    return MultiPoly(a + b, names)


def _product_series(R: MultiPoly, num: list, den: list, N: int) -> list:
    """Coefficients 0..N of prod (1 + u t) / prod (1 - v t) over the given letters."""
    f = [R.one()] + [R.zero() for _ in range(N)]
    for u in num:
        for k in range(N, 0, -1):
            f[k] = f[k] + u * f[k - 1]
    for v in den:
        for k in range(1, N + 1):
            f[k] = f[k] + v * f[k - 1]
    return f


def supersym_generators(a: int, b: int, N: int) -> dict[str, list]:
    """The families sigma, h, e, tau, q, t, l, each as [f^(1), ..., f^(N)]."""
    from .witt import from_ghost

    R = super_ring(a, b)
    xs = [R.gen(i) for i in range(a)]
    ys = [R.gen(a + j) for j in range(b)]
    sigma = [sum((x ** n for x in xs), R.zero()) - sum((y ** n for y in ys), R.zero())
             for n in range(1, N + 1)]
    h = _product_series(R, [-y for y in ys], xs, N)[1:]
    e = _product_series(R, xs, [-y for y in ys], N)[1:]
    tau = _product_series(R, [-x for x in xs], ys, N)[1:]
    q = list(from_ghost(R, sigma))
    t = list(from_ghost(R, [s if n % 2 else -s for n, s in enumerate(sigma, start=1)]))
    l = []
    for n in range(1, N + 1):
        acc = R.zero()
        for d in divisors(n):
            if mobius(d):
                acc = acc + sigma[d - 1] ** (n // d) * mobius(d)
        l.append(acc * Fraction(1, n))
    return {"sigma": sigma, "h": h, "e": e, "tau": tau, "q": q, "t": t, "l": l}


def is_supersymmetric(f: Poly, a: int, b: int) -> bool:
    """Symmetric in the x's, symmetric in the y's, and free of t after x_1 = y_1 = t."""
    if f.ctx.nvars != a + b:
        raise ValueError("polynomial does not live in a + b variables")

    def swapped(i, j):
        def fn(m):
            m = list(m)
            m[i], m[j] = m[j], m[i]
            return tuple(m)
        return f.map_monomials(fn)

    for i in range(a - 1):
        if swapped(i, i + 1) != f:
            return False
    for j in range(a, a + b - 1):
        if swapped(j, j + 1) != f:
            return False
    if a == 0 or b == 0:
        return True
    # x_1 -> t and y_1 -> t: collect by the remaining variables and the t-degree
    collected: dict = {}
    for m, c in f.terms.items():
        tdeg = m[0] + m[a]
        rest = m[1:a] + m[a + 1:]
        key = (tdeg, rest)
        collected[key] = collected.get(key, 0) + c
    return all(c == 0 for (tdeg, _), c in collected.items() if tdeg > 0)
