"""Normalized q-series, Faber polynomials and replicability.

A normalized series is F(q) = q^{-1} + sum_{n>=1} f(n) q^n.  Its Faber
polynomials X_m satisfy X_m(F) = (1/m) q^{-m} + sum_{n>=1} H_{m,n} q^n, and

    sum_{m,n} H_{m,n} p^m q^n = -log(1 - sum_{m,n>=1} f(m+n-1) p^m q^n).

F is replicable when H_{a,b} = H_{c,d} whenever ab = cd and (a,b) = (c,d);
its replicates are then read off from
H_{m,n} = sum_{a | (m,n)} (1/a) f^{(a)}(mn / a^2).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import isqrt

from .arith import divisors, gcd, normalize, parse_rational, format_rational
from .coeff import Rationals, TruncationError
from . import gradedlog


class NotReplicableError(ValueError):
    """The H-table is inconsistent with any family of replicates."""


# -- truncated Laurent series --------------------------------------------

@dataclass(frozen=True)
class Laurent:
    """sum_{e >= val} c_e q^e, known exactly for exponents e < prec."""

    val: int
    coeffs: tuple
    prec: int

    def __post_init__(self):
        keep = max(0, self.prec - self.val)
        object.__setattr__(self, "coeffs", tuple(normalize(c) for c in self.coeffs[:keep]))

    def __getitem__(self, e: int):
        if e >= self.prec:
            raise TruncationError(f"coefficient of q^{e} is beyond precision {self.prec}")
        i = e - self.val
        if i < 0 or i >= len(self.coeffs):
            return 0
        return self.coeffs[i]

    def _aligned(self, other, sign):
        val = min(self.val, other.val)
        prec = min(self.prec, other.prec)
        out = [0] * max(0, prec - val)
        for i, c in enumerate(self.coeffs):
            e = self.val + i
            if e < prec:
                out[e - val] += c
        for i, c in enumerate(other.coeffs):
            e = other.val + i
            if e < prec:
                out[e - val] += sign * c
        return Laurent(val, tuple(out), prec)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Laurent(0, (other,), self.prec)
        return self._aligned(other, 1)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Laurent(0, (other,), self.prec)
        return self._aligned(other, -1)

    def __neg__(self):
        return Laurent(self.val, tuple(-c for c in self.coeffs), self.prec)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Laurent(self.val, tuple(c * other for c in self.coeffs), self.prec)
        val = self.val + other.val
        prec = min(self.prec + other.val, other.prec + self.val)
        n = max(0, prec - val)
        out = [0] * n
        a, b = self.coeffs, other.coeffs
        for i, ca in enumerate(a):
            if not ca or i >= n:
                continue
            for j in range(min(len(b), n - i)):
                cb = b[j]
                if cb:
                    out[i + j] += ca * cb
        return Laurent(val, tuple(out), prec)

    __rmul__ = __mul__

    def truncate(self, prec: int) -> "Laurent":
        return Laurent(self.val, self.coeffs, min(prec, self.prec))


# -- normalized q-series ---------------------------------------------------

@dataclass(frozen=True)
class QSeries:
    """q^{-1} + sum_{n=1..N} f(n) q^n with exact rational coefficients."""

    f: tuple

    def __post_init__(self):
        if len(self.f) < 1:
            raise ValueError("need at least one coefficient")
        object.__setattr__(self, "f", tuple(normalize(Fraction(c)) for c in self.f))

    @property
    def N(self) -> int:
        return len(self.f)

    def coefficient(self, n: int):
        """f(n) for n >= 1; f(-1) = 1 and f(0) = 0."""
        if n == -1:
            return 1
        if n == 0 or n < -1:
            return 0
        if n > self.N:
            raise TruncationError(f"f({n}) is beyond the known order {self.N}")
        return self.f[n - 1]

    __call__ = coefficient

    def laurent(self) -> Laurent:
        return Laurent(-1, (1, 0) + self.f, self.N + 1)

    @classmethod
    def from_json(cls, obj) -> "QSeries":
        if not isinstance(obj, dict) or "f" not in obj or not isinstance(obj["f"], list):
            raise ValueError('expected an object {"f": [...]}')
        return cls(tuple(parse_rational(x) for x in obj["f"]))

    def to_json(self) -> dict:
        return {"f": [format_rational(x) for x in self.f]}

    @classmethod
    def load(cls, path) -> "QSeries":
        with open(path) as fh:
            return cls.from_json(json.load(fh))


# -- the j-function ---------------------------------------------------------

def _sigma3(n):
    return sum(d ** 3 for d in divisors(n))


@lru_cache(maxsize=None)
def j_oracle(N: int) -> QSeries:
    """J = E_4^3 / Delta - 744 to order q^N, in exact integers."""
    if N < 1:
        raise ValueError("order must be positive")
    M = N + 2
    e4 = [1] + [240 * _sigma3(n) for n in range(1, M)]
    e4sq = _mul_trunc(e4, e4, M)
    e4cube = _mul_trunc(e4sq, e4, M)
    # 1 / prod (1 - q^n)^24 = prod (sum_k q^{nk})^24
    inv = [1] + [0] * (M - 1)
    for n in range(1, M):
        for _ in range(24):
            for k in range(n, M):
                inv[k] += inv[k - n]
    j = _mul_trunc(e4cube, inv, M)  # q * J(q) + 744 q
    f = tuple(j[n + 1] for n in range(1, N + 1))
    return QSeries(f)


def _mul_trunc(a, b, M):
    out = [0] * M
    for i, x in enumerate(a[:M]):
        if x:
            for j in range(M - i):
                out[i + j] += x * b[j]
    return out


# -- Faber polynomials ---------------------------------------------------------

def faber_polynomial(F: QSeries, m: int) -> tuple:
    """Coefficients (c_0, ..., c_m) of X_m(w) = sum c_k w^k, by triangular elimination
    of the negative powers of q in polynomials of F."""
    if m < 1:
        raise ValueError("m must be positive")
    if m > F.N + 1:
        raise TruncationError(f"X_{m} needs f(1..{m - 1})")
    # powers F^k truncated at q^0 (all we need to kill the principal part)
    Fl = F.laurent().truncate(m + 1)
    powers = [Laurent(0, (1,), m + 1), Fl]
    for _ in range(2, m + 1):
        powers.append(powers[-1] * Fl)
    coeffs = [Fraction(0)] * (m + 1)
    coeffs[m] = Fraction(1, m)
    G = powers[m] * Fraction(1, m)
    for e in range(m - 1, -1, -1):
        c = G[-e]
        if c:
            coeffs[e] -= c
            G = G - powers[e] * c
    return tuple(normalize(c) for c in coeffs)


def faber_expansions(F: QSeries, M: int) -> list:
    """[X_1(F), ..., X_M(F)] as Laurent series, by the recursion

        Phi_1 = F,  Phi_{n+1} = F Phi_n - sum_{k=1}^{n-1} f(k) Phi_{n-k} - (n+1) f(n)

    for Phi_n = n X_n.  X_m(F) is known up to q^{N+1-m}."""
    if M < 1:
        return []
    if M > F.N + 1:
        raise TruncationError(f"X_{M} needs f(1..{M - 1})")
    Fl = F.laurent()
    phi = [None, Fl]
    for n in range(1, M):
        nxt = Fl * phi[n]
        for k in range(1, n):
            fk = F(k)
            if fk:
                nxt = nxt - phi[n - k] * fk
        if F(n):
            nxt = nxt - (n + 1) * F(n)
        phi.append(nxt)
    return [phi[m] * Fraction(1, m) for m in range(1, M + 1)]


def h_table(F: QSeries, max_product: int | None = None) -> dict:
    """H_{m,n} for all m, n >= 1 with mn <= max_product (default N)."""
    P = F.N if max_product is None else max_product
    if P > F.N:
        raise TruncationError(f"H_(m,n) with mn <= {P} needs f up to {P}")
    X = faber_expansions(F, P)
    return {(m, n): X[m - 1][n] for m in range(1, P + 1) for n in range(1, P // m + 1)}


def h_triangle(F: QSeries, total: int) -> dict:
    """H_{m,n} for m, n >= 1 with m + n <= total."""
    if total > F.N + 1:
        raise TruncationError(f"H with m + n <= {total} needs f up to {total - 1}")
    X = faber_expansions(F, total - 1)
    return {(m, n): X[m - 1][n] for m in range(1, total) for n in range(1, total - m + 1)}


def faber_residual(F: QSeries, m: int) -> Laurent:
    """X_m(F) - (1/m) q^{-m}; it must lie in q Q[[q]]."""
    c = faber_polynomial(F, m)
    Fl = F.laurent()
    acc = Laurent(0, (c[0],), F.N + 2 - m)
    power = Laurent(0, (1,), F.N + 2)
    for k in range(1, m + 1):
        power = power * Fl
        if c[k]:
            acc = acc + power * c[k]
    return acc - Laurent(-m, (Fraction(1, m),), acc.prec)


# -- Norton's identities ------------------------------------------------------

def norton_series(F: QSeries, total: int) -> gradedlog.GradedSeries:
    """S = sum_{m,n>=1, m+n<=total} f(m+n-1) p^m q^n as a rank-2 graded series."""
    terms = {((m, n), 0): F(m + n - 1) for m in range(1, total) for n in range(1, total - m + 1)}
    return gradedlog.GradedSeries(2, total, Rationals(), terms)


@dataclass
class CheckReport:
    ok: bool
    mismatches: list = field(default_factory=list)

    def __bool__(self):
        return self.ok


def norton1_check(F: QSeries, total: int) -> CheckReport:
    """sum H_{m,n} p^m q^n = -log(1 - sum f(i+j-1) p^i q^j) for m + n <= total."""
    H = h_triangle(F, total)
    logS = gradedlog.Log(norton_series(F, total))
    bad = []
    for m in range(1, total):
        for n in range(1, total - m + 1):
            lhs, rhs = H[(m, n)], logS.coefficient((m, n), 0)
            if lhs != rhs:
                bad.append(((m, n), lhs, rhs))
    return CheckReport(not bad, bad)


def w_value(F: QSeries, m: int, n: int, S=None):
    """W(m, n) = sum over T(m,n) of (|s|-1)!/s! prod f(i+j-1)^{s_ij}."""
    S = S or norton_series(F, m + n)
    return gradedlog.w_coefficient(S, (m, n), 0)


def h_equals_w_check(F: QSeries, total: int) -> CheckReport:
    H = h_triangle(F, total)
    S = norton_series(F, total)
    bad = []
    for m in range(1, total):
        for n in range(1, total - m + 1):
            w = gradedlog.w_coefficient(S, (m, n), 0)
            if H[(m, n)] != w:
                bad.append(((m, n), H[(m, n)], w))
    return CheckReport(not bad, bad)


def product_form_check(F: QSeries, total: int) -> CheckReport:
    """prod_{m,n} exp(-H_{m,n} p^m q^n) = 1 - sum f(m+n-1) p^m q^n for m + n <= total."""
    H = h_triangle(F, total)
    S = norton_series(F, total)
    prod = S._new({}, Fraction(1))
    for (m, n), h in sorted(H.items()):
        if m + n <= total and h:
            prod = prod * gradedlog.exponential(S._new({((m, n), 0): -h}))
    resid = prod - (1 - S)
    bad = [(idx, v) for idx, v in sorted(resid.terms.items())]
    return CheckReport(not bad and resid.const == 0, bad)


def norton2_check(F: QSeries, pmax: int, qmax: int) -> CheckReport:
    """p^{-1} prod_m exp(-X_m(F(q)) p^m) = F(p) - F(q), compared for p-exponents
    -1..pmax and q-exponents up to qmax."""
    A = pmax + 1  # highest power of p inside the product
    need = qmax + 2 * A + 1
    if need > F.N:
        raise TruncationError(f"needs f up to {need}")
    X = faber_expansions(F, A)
    # G = -sum X_m p^m as {p-degree: Laurent}
    G = {m: -X[m - 1] for m in range(1, A + 1)}
    one = Laurent(0, (1,), need + 1)
    total = {0: one}
    term = {0: one}
    for k in range(1, A + 1):
        nxt: dict = {}
        for d1, c1 in term.items():
            for d2, c2 in G.items():
                d = d1 + d2
                if d <= A:
                    prod = c1 * c2
                    nxt[d] = nxt[d] + prod if d in nxt else prod
        term = {d: c * Fraction(1, k) for d, c in nxt.items()}
        for d, c in term.items():
            total[d] = total[d] + c if d in total else c
    bad = []
    Fl = F.laurent()
    for k in range(0, A + 1):
        lhs = total.get(k)
        # coefficient of p^{k-1} on the right
        if k == 0:
            rhs = Laurent(0, (1,), need + 1)
        elif k == 1:
            rhs = -Fl
        else:
            rhs = Laurent(0, (F(k - 1),), need + 1)
        for e in range(-A, qmax + 1):
            a = lhs[e] if lhs is not None else 0
            b = rhs[e]
            if a != b:
                bad.append(((k - 1, e), a, b))
    return CheckReport(not bad, bad)


def monster_denominator_check(F: QSeries, total: int) -> CheckReport:
    """prod_{m,n} exp(-sum_{d|(m,n)} (1/d) f(mn/d^2) p^m q^n) = 1 - sum f(i+j-1) p^i q^j,
    which holds when every replicate of F is F itself."""
    S = norton_series(F, total)
    L = S._new({((m, n), 0): F(m * n) for m in range(1, total) for n in range(1, total - m + 1)})
    resid = gradedlog.denominator_check(L, S)
    bad = [(idx, v) for idx, v in sorted(resid.terms.items())]
    return CheckReport(not bad and resid.const == 0, bad)


# -- replicability ----------------------------------------------------------------

def is_replicable(F: QSeries, order: int | None = None) -> tuple[bool, list]:
    """Check H_{a,b} = H_{c,d} for ab = cd <= order with equal gcd.

    Returns (verdict, violations) where each violation is ((a,b), (c,d)).
    """
    P = F.N if order is None else order
    H = h_table(F, P)
    violations = []
    for prod_ in range(1, P + 1):
        pairs = [(a, prod_ // a) for a in divisors(prod_)]
        by_gcd: dict = {}
        for a, b in pairs:
            by_gcd.setdefault(gcd(a, b), []).append((a, b))
        for group in by_gcd.values():
            first = group[0]
            for other in group[1:]:
                if H[first] != H[other]:
                    violations.append((first, other))
    return (not violations, violations)


def extract_replicates(F: QSeries, amax: int, order: int, check_order: int | None = None) -> dict:
    """Replicates f^{(a)}(1..order) for a <= amax from the collapsed relation

        f^{(a)}(n) = a (H_{a,an} - sum_{a'|a, a'<a} (1/a') f^{(a')}(a^2 n / a'^2)).

    The full relation is then re-checked on every H_{m,n} with mn <= check_order
    (default: the largest product the data allows); any mismatch raises
    NotReplicableError.
    """
    if amax < 1 or order < 1:
        raise ValueError("amax and order must be positive")
    need = amax * amax * order
    if need > F.N:
        raise TruncationError(f"replicates up to a={amax}, order {order} need f up to {need}")
    P = F.N if check_order is None else min(check_order, F.N)
    X = faber_expansions(F, max(amax, isqrt(P)))
    memo: dict = {}

    def rep(a, n):
        key = (a, n)
        if key in memo:
            return memo[key]
        if a == 1:
            v = F(n)
        else:
            acc = Fraction(X[a - 1][a * n])
            for a2 in divisors(a)[:-1]:
                acc -= Fraction(1, a2) * rep(a2, a * a * n // (a2 * a2))
            v = normalize(a * acc)
        memo[key] = v
        return v

    out = {a: tuple(rep(a, n) for n in range(1, order + 1)) for a in range(1, amax + 1)}

    H = h_table(F, P)
    for (m, n), h in H.items():
        total = Fraction(0)
        for a in divisors(gcd(m, n)):
            total += Fraction(1, a) * rep(a, m * n // (a * a))
        if total != h:
            raise NotReplicableError(f"H_({m},{n}) = {h} but the replicates give {total}")
    return out


def replicable_report(F: QSeries, order: int | None = None, amax: int | None = None) -> dict:
    """JSON-ready report {replicable, violations, replicates}."""
    verdict, violations = is_replicable(F, order)
    report = {
        "replicable": verdict,
        "violations": [[list(x), list(y)] for x, y in violations],
        "replicates": None,
    }
    if amax and verdict:
        k = F.N // (amax * amax)
        if k >= 1:
            reps = extract_replicates(F, amax, k, order)
            report["replicates"] = {str(a): [format_rational(v) for v in vals]
                                    for a, vals in reps.items()}
    return report
