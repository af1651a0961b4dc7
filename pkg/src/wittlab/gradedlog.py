"""Graded formal series R[[Gamma x Z_2]] and the logarithm attached to them.

Gamma = Z_{>=0}^rank minus the origin.  A series is stored in the E-basis,
E^{(alpha,a)} E^{(beta,b)} = E^{(alpha+beta, a+b)}, truncated above the
height ht(alpha) = sum(alpha) > cap.  With the sign convention
E^{(alpha,a)} = (-1)^a e^{(alpha,a)}, the E-coefficient of a homogeneous
piece V_{(alpha,a)} is |V_{(alpha,a)}| = (-1)^a dim V_{(alpha,a)}.

    Log(f) = sum_{k>=1} f^k / k          Exp(f) = 1 - exp(-f)
    eta    = sum_k (1/k) Theta_k Psi^k    omega = sum_k (mu(k)/k) Theta_k Psi^k
    D      = omega o Log

For a Gamma x Z_2-graded Lie superalgebra L with homology H(L),
|L| = D([H(L)]) coefficientwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import factorial

from .arith import divisors, gcd, mobius
from .coeff import Rationals, Ring

Index = tuple  # (alpha: tuple[int, ...], parity: int)


def height(alpha) -> int:
    return sum(alpha)


def all_indices(rank: int, cap: int) -> list:
    """Every (alpha, a) with 1 <= ht(alpha) <= cap, ordered by height."""
    out = []
    for alpha in product(range(cap + 1), repeat=rank):
        h = sum(alpha)
        if 1 <= h <= cap:
            out.append((alpha, 0))
            out.append((alpha, 1))
    out.sort(key=lambda idx: (height(idx[0]), idx))
    return out


def _add_index(x, y):
    return (tuple(p + q for p, q in zip(x[0], y[0])), (x[1] + y[1]) % 2)


def _scale_index(k, x):
    return (tuple(k * p for p in x[0]), (k * x[1]) % 2)


@dataclass
class GradedSeries:
    """const + sum c_{(alpha,a)} E^{(alpha,a)}."""

    rank: int
    cap: int
    ring: Ring = field(default_factory=Rationals)
    terms: dict = field(default_factory=dict)
    const: object = 0

    def __post_init__(self):
        if self.rank < 1 or self.cap < 1:
            raise ValueError("rank and cap must be positive")
        if self.ring.integral:
            raise ValueError("graded series need a Q-algebra of coefficients")
        clean = {}
        for (alpha, a), c in self.terms.items():
            alpha = tuple(int(x) for x in alpha)
            if len(alpha) != self.rank or min(alpha) < 0 or a not in (0, 1):
                raise ValueError(f"bad index {(alpha, a)} for rank {self.rank}")
            h = sum(alpha)
            if h == 0:
                raise ValueError("the zero degree is not in Gamma; use const")
            c = self.ring.coerce(c)
            if h <= self.cap and not self.ring.is_zero(c):
                clean[(alpha, a)] = c
        self.terms = clean
        self.const = self.ring.coerce(self.const)

    # -- helpers -------------------------------------------------------
    def _new(self, terms, const=None):
        g = GradedSeries.__new__(GradedSeries)
        g.rank, g.cap, g.ring = self.rank, self.cap, self.ring
        g.terms = {k: v for k, v in terms.items() if not self.ring.is_zero(v)}
        g.const = self.ring.zero() if const is None else const
        return g

    def _match(self, other):
        if isinstance(other, GradedSeries):
            if (other.rank, other.cap, other.ring) != (self.rank, self.cap, self.ring):
                raise ValueError("graded series with different rank, cap or ring")
            return other
        return self._new({}, self.ring.coerce(other))

    def coefficient(self, alpha, a: int = 0):
        return self.terms.get((tuple(alpha), a), self.ring.zero())

    def __getitem__(self, idx):
        alpha, a = idx
        return self.coefficient(alpha, a)

    def indices(self) -> list:
        return all_indices(self.rank, self.cap)

    # -- arithmetic ----------------------------------------------------
    def __add__(self, other):
        other = self._match(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v if k in out else v
        return self._new(out, self.const + other.const)

    __radd__ = __add__

    def __neg__(self):
        return self._new({k: -v for k, v in self.terms.items()}, -self.const)

    def __sub__(self, other):
        return self + (-self._match(other))

    def __rsub__(self, other):
        return self._match(other) - self

    def scale(self, c):
        return self._new({k: v * c for k, v in self.terms.items()}, self.const * c)

    def __mul__(self, other):
        if not isinstance(other, GradedSeries):
            return self.scale(other)
        other = self._match(other)
        cap = self.cap
        out: dict = {}
        a0, b0 = self.const, other.const
        if not self.ring.is_zero(b0):
            for k, v in self.terms.items():
                out[k] = v * b0
        if not self.ring.is_zero(a0):
            for k, v in other.terms.items():
                out[k] = out[k] + a0 * v if k in out else a0 * v
        bs = sorted(other.terms.items(), key=lambda kv: height(kv[0][0]))
        for k1, v1 in self.terms.items():
            room = cap - height(k1[0])
            for k2, v2 in bs:
                if height(k2[0]) > room:
                    break
                k = _add_index(k1, k2)
                out[k] = out[k] + v1 * v2 if k in out else v1 * v2
        return self._new(out, a0 * b0)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, GradedSeries):
            return NotImplemented
        return ((self.rank, self.cap, self.ring) == (other.rank, other.cap, other.ring)
                and self.const == other.const and self.terms == other.terms)

    def is_zero(self) -> bool:
        return not self.terms and self.ring.is_zero(self.const)

    def min_height(self) -> int:
        return min((height(k[0]) for k in self.terms), default=self.cap + 1)

    # -- operators -----------------------------------------------------
    def theta(self, k: int) -> "GradedSeries":
        """Theta_k: E^{(alpha,a)} -> E^{(k alpha, k a)}."""
        if not self.ring.is_zero(self.const):
            raise ValueError("Theta_k acts on the augmentation ideal only")
        out: dict = {}
        for idx, v in self.terms.items():
            if k * height(idx[0]) <= self.cap:
                key = _scale_index(k, idx)  # for even k both parities land on parity 0
                out[key] = out[key] + v if key in out else v
        return self._new(out)

    def adams(self, k: int) -> "GradedSeries":
        """Psi^k applied to the coefficients."""
        return self._new({idx: self.ring.adams(k, v) for idx, v in self.terms.items()},
                         self.ring.adams(k, self.const))

    def _dirichlet(self, weight) -> "GradedSeries":
        if not self.ring.is_zero(self.const):
            raise ValueError("operator needs zero constant term")
        out: dict = {}
        for idx, v in self.terms.items():
            h = height(idx[0])
            for k in range(1, self.cap // h + 1):
                w = weight(k)
                if w:
                    key = _scale_index(k, idx)
                    term = self.ring.adams(k, v) * w
                    out[key] = out[key] + term if key in out else term
        return self._new(out)

    def log(self) -> "GradedSeries":
        return Log(self)

    def exp(self) -> "GradedSeries":
        return Exp(self)


def _require_augmented(f: GradedSeries, name: str):
    if not f.ring.is_zero(f.const):
        raise ValueError(f"{name} needs a series without constant term")


def Log(f: GradedSeries) -> GradedSeries:
    """Log(f) = sum_k f^k / k = -log(1 - f)."""
    _require_augmented(f, "Log")
    total = f._new({})
    power = f._new({}, f.ring.one())
    for k in range(1, f.cap + 1):
        power = power * f
        if power.is_zero():
            break
        total = total + power.scale(Fraction(1, k))
    return total


def exponential(f: GradedSeries) -> GradedSeries:
    """exp(f) with constant term 1."""
    _require_augmented(f, "exp")
    total = f._new({}, f.ring.one())
    term = f._new({}, f.ring.one())
    for k in range(1, f.cap + 1):
        term = (term * f).scale(Fraction(1, k))
        if term.is_zero():
            break
        total = total + term
    return total


def Exp(f: GradedSeries) -> GradedSeries:
    """Exp(f) = 1 - exp(-f), the inverse of Log."""
    e = exponential(-f)
    return f._new({k: -v for k, v in e.terms.items()})


def binomial_power(f: GradedSeries, c) -> GradedSeries:
    """(1 + f)^c = sum_k binom(c, k) f^k for rational c."""
    _require_augmented(f, "binomial power")
    c = Fraction(c)
    total = f._new({}, f.ring.one())
    term = f._new({}, f.ring.one())
    for k in range(1, f.cap + 1):
        term = (term * f).scale((c - k + 1) / k)
        if term.is_zero():
            break
        total = total + term
    return total


def eta(f: GradedSeries) -> GradedSeries:
    return f._dirichlet(lambda k: Fraction(1, k))


def omega(f: GradedSeries) -> GradedSeries:
    return f._dirichlet(lambda k: Fraction(mobius(k), k))


def D(f: GradedSeries) -> GradedSeries:
    """D = omega o Log; sends [H(L)] to |L|."""
    return omega(Log(f))


# -- combinatorial route: the W coefficients -----------------------------

def w_coefficient(f: GradedSeries, alpha, a: int):
    """W(alpha, a) = sum_{s in T(alpha,a)} (|s| - 1)!/s! prod f^s.

    T(alpha, a) is the set of multiplicity vectors over supp(f) whose
    weighted sum is (alpha, a).  Equals the (alpha, a) coefficient of Log(f).
    """
    _require_augmented(f, "W")
    target = (tuple(alpha), a)
    ring = f.ring
    support = [(idx, v) for idx, v in sorted(f.terms.items())
               if all(x <= y for x, y in zip(idx[0], target[0]))]
    total = ring.zero()

    def rec(i, remaining, parity, count, denom, prod_val):
        nonlocal total
        if not any(remaining):
            if parity == target[1] and count:
                total = total + prod_val * Fraction(factorial(count - 1), denom)
            return
        if i == len(support):
            return
        (beta, b), v = support[i]
        # multiplicity 0
        rec(i + 1, remaining, parity, count, denom, prod_val)
        m = 0
        rem = remaining
        val = prod_val
        while True:
            rem = tuple(x - y for x, y in zip(rem, beta))
            if min(rem) < 0:
                break
            m += 1
            val = val * v
            rec(i + 1, rem, (parity + m * b) % 2, count + m, denom * factorial(m), val)

    rec(0, target[0], 0, 0, 1, ring.one())
    return total


def closed_formula(f: GradedSeries, alpha, a: int):
    """|L_{(alpha,a)}| = sum_{(alpha,a) = d(tau,b)} (mu(d)/d) Psi^d(W(tau,b))."""
    alpha = tuple(alpha)
    g = 0
    for x in alpha:
        g = gcd(g, x)
    ring = f.ring
    total = ring.zero()
    for d in divisors(g):
        mu = mobius(d)
        if not mu:
            continue
        tau_ = tuple(x // d for x in alpha)
        for b in (0, 1):
            if (d * b) % 2 == a:
                total = total + ring.adams(d, w_coefficient(f, tau_, b)) * Fraction(mu, d)
    return total


def closed_formula_series(f: GradedSeries) -> GradedSeries:
    return f._new({idx: closed_formula(f, *idx) for idx in f.indices()})


# -- denominator identity -------------------------------------------------

def denominator_product(L: GradedSeries) -> GradedSeries:
    """prod_{(alpha,a)} exp(-sum_r (1/r) Psi^r(|L_{(alpha,a)}|) E^{r(alpha,a)})."""
    _require_augmented(L, "denominator product")
    out = L._new({}, L.ring.one())
    for idx, v in sorted(L.terms.items()):
        single = eta(L._new({idx: v}))
        out = out * exponential(-single)
    return out


def denominator_check(L: GradedSeries, H: GradedSeries) -> GradedSeries:
    """Residual of the denominator identity: product - (1 - [H])."""
    return denominator_product(L) - (1 - H)


def lie_from_homology(H: GradedSeries) -> GradedSeries:
    return D(H)


def dims_from_signed(L: GradedSeries) -> dict:
    """dim L_{(alpha,a)} = (-1)^a |L_{(alpha,a)}|."""
    return {idx: (-v if idx[1] else v) for idx, v in L.terms.items()}


# -- recursive solvers ------------------------------------------------------

def _form_value(form, x, y):
    if form is None:
        return sum(p * q for p, q in zip(x, y))
    return sum(form[i][j] * x[i] * y[j] for i in range(len(x)) for j in range(len(y)))


def _reachable(H: GradedSeries) -> list:
    """Indices in the semigroup generated by supp(H), by increasing height."""
    seen = set(H.terms)
    frontier = list(H.terms)
    gens = list(H.terms)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = _add_index(x, g)
                if height(y[0]) <= H.cap and y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(seen, key=lambda idx: (height(idx[0]), idx))


def _lie_from_eta(H: GradedSeries, eta_vals: dict) -> dict:
    """Invert eta(alpha,a) = sum_{k} (1/k) Psi^k L(alpha/k, b)."""
    ring = H.ring
    L: dict = {}
    for idx in sorted(eta_vals, key=lambda idx: (height(idx[0]), idx)):
        alpha, a = idx
        val = eta_vals[idx]
        g = 0
        for x in alpha:
            g = gcd(g, x)
        for k in divisors(g)[1:]:
            beta = tuple(x // k for x in alpha)
            for b in (0, 1):
                if (k * b) % 2 == a and (beta, b) in L:
                    val = val - ring.adams(k, L[(beta, b)]) * Fraction(1, k)
        L[idx] = val
    return L


@dataclass
class SolverResult:
    eta: dict
    lie: dict
    eta_star: dict | None = None

    def as_series(self, like: GradedSeries) -> GradedSeries:
        return like._new(dict(self.lie))


def recursive_solver(H: GradedSeries, variant: str = "a", rho=None, form=None) -> SolverResult:
    """Solve for eta = Log([H]) and |L| by the two recursions.

    variant ``"a"``: (rho|alpha) eta(alpha,a) - sum_{beta<alpha} (rho|beta) eta(beta,b)
    H(alpha-beta, a-b) = (rho|alpha) H(alpha,a).

    variant ``"b"``: eta*(alpha,a) - sum_{beta<alpha} eta*(beta,b) H(alpha-beta, a-b)
    = (alpha|alpha) H(alpha,a), where eta*(g,a) = (g|g) eta(g,a) - sum over ordered
    splittings (g',a') + (g'',a'') of (g'|g'') eta(g',a') eta(g'',a'').

    The bilinear form defaults to the standard dot product and rho to (1,...,1).
    A zero pivot raises ValueError.
    """
    _require_augmented(H, "recursive solver")
    ring = H.ring
    rank = H.rank
    rho = tuple(rho) if rho is not None else (1,) * rank
    order = _reachable(H)
    Hc = H.terms
    zero = ring.zero()

    def smaller(idx):
        # pairs (beta, b) already solved with (alpha - beta, a - b) in supp(H)
        alpha, a = idx
        for (gamma, c), hv in Hc.items():
            beta = tuple(x - y for x, y in zip(alpha, gamma))
            if min(beta) < 0 or not any(beta):
                continue
            yield (beta, (a - c) % 2), hv

    eta_vals: dict = {}
    if variant == "a":
        for idx in order:
            r = _form_value(form, rho, idx[0])
            if r == 0:
                raise ValueError(f"zero pivot (rho|alpha) at {idx}")
            acc = Hc.get(idx, zero) * r
            for key, hv in smaller(idx):
                e = eta_vals.get(key)
                if e is not None:
                    acc = acc + e * hv * _form_value(form, rho, key[0])
            eta_vals[idx] = acc * Fraction(1, r)
        return SolverResult(eta_vals, _lie_from_eta(H, eta_vals))
    if variant == "b":
        star: dict = {}
        for idx in order:
            gg = _form_value(form, idx[0], idx[0])
            acc = Hc.get(idx, zero) * gg
            for key, hv in smaller(idx):
                e = star.get(key)
                if e is not None:
                    acc = acc + e * hv
            star[idx] = acc
            if gg == 0:
                raise ValueError(f"zero pivot (alpha|alpha) at {idx}")
            quad = zero
            for k1, e1 in eta_vals.items():
                k2 = (tuple(x - y for x, y in zip(idx[0], k1[0])), (idx[1] - k1[1]) % 2)
                if min(k2[0]) < 0 or not any(k2[0]):
                    continue
                e2 = eta_vals.get(k2)
                if e2 is not None:
                    quad = quad + e1 * e2 * _form_value(form, k1[0], k2[0])
            eta_vals[idx] = (acc + quad) * Fraction(1, gg)
        return SolverResult(eta_vals, _lie_from_eta(H, eta_vals), star)
    raise ValueError(f"unknown variant {variant!r}")


def monster_recursion(c, mmax: int, nmax: int) -> dict:
    """Root multiplicities [L_(m,n)] from H_(m,n) = c(m+n-1) by the rho = (1,0) recursion:

        [L_(m,n)] = -sum_{k|(m,n), k>1} (1/k) [L_(m/k,n/k)]
                    + sum_{1<=k<m, 1<=l<n} (k/m) c(k,l) [H_(m-k,n-l)] + [H_(m,n)]

    with c(m,n) = sum_{k|(m,n)} (1/k) [L_(m/k,n/k)].  Coefficients are numbers,
    so Psi acts trivially.  ``c`` maps an index to the coefficient of q^index.
    """
    Hv = {(i, j): Fraction(c(i + j - 1)) for i in range(1, mmax + 1) for j in range(1, nmax + 1)}
    L: dict = {}
    cc: dict = {}
    for m in range(1, mmax + 1):
        for n in range(1, nmax + 1):
            g = gcd(m, n)
            val = Hv[(m, n)]
            for k in divisors(g)[1:]:
                val -= L[(m // k, n // k)] / k
            for k in range(1, m):
                for l in range(1, n):
                    val += Fraction(k, m) * cc[(k, l)] * Hv[(m - k, n - l)]
            L[(m, n)] = val
            cc[(m, n)] = sum(L[(m // k, n // k)] / k for k in divisors(g))
    return L


# -- free Lie superalgebras -------------------------------------------------

def free_lie_dims(V: GradedSeries) -> GradedSeries:
    """|L(V)| for the free Lie superalgebra on V, whose homology is V itself."""
    return D(V)


def rank1_signed(v0, v1, n: int) -> Fraction:
    """|L(V)_n| = (1/n) sum_{d|n} mu(d) ([V_0] - [V_1])^{n/d} for numeric dims, Psi = id."""
    x = Fraction(v0) - Fraction(v1)
    return sum((mobius(d) * x ** (n // d) for d in divisors(n)), Fraction(0)) / n


def rank1_total(v0, v1, n: int) -> Fraction:
    """dim L(V)_n = (1/n) sum_{d|n} mu(d) ([V_0] - (-1)^d [V_1])^{n/d}, Psi = id."""
    total = Fraction(0)
    for d in divisors(n):
        total += mobius(d) * (Fraction(v0) - (-1) ** d * Fraction(v1)) ** (n // d)
    return total / n
