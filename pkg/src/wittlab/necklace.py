"""The necklace ring Nr(R) of a special lambda-ring R.

Addition is coordinatewise and the product is

    (b c)_n = sum_{[i,j] = n} (i, j) Psi^{n/i}(b_i) Psi^{n/j}(c_j).

The ghost map is phi_n(b) = sum_{d | n} d Psi^{n/d}(b_d).  The map tau
sends a Witt vector (a_n) to sum_n V_n M(a_n), where M(r) is the vector of
necklace polynomials M(r, n) = (1/n) sum_{d|n} mu(d) Psi^d(r^{n/d}).
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import divisors, gcd, lcm, mobius
from .coeff import Ring, TruncationError
from .lambda1 import Series1
from .witt import WittVector


def _check_length(N):
    if N < 1:
        raise TruncationError("truncation length must be at least 1")


class _AdamsCache:
    """Memoise Psi^k of a fixed list of components."""

    def __init__(self, ring: Ring, coords):
        self.ring = ring
        self.coords = coords
        self.cache: dict = {}

    def __call__(self, k: int, i: int):
        key = (k, i)
        v = self.cache.get(key)
        if v is None:
            v = self.ring.adams(k, self.coords[i - 1])
            self.cache[key] = v
        return v


@dataclass(frozen=True)
class NecklaceVector:
    ring: Ring
    coords: tuple

    def __post_init__(self):
        _check_length(len(self.coords))
        object.__setattr__(self, "coords", tuple(self.ring.coerce(c) for c in self.coords))

    @property
    def N(self) -> int:
        return len(self.coords)

    @classmethod
    def zero(cls, ring: Ring, N: int) -> "NecklaceVector":
        return cls(ring, tuple(ring.zero() for _ in range(N)))

    @classmethod
    def one(cls, ring: Ring, N: int) -> "NecklaceVector":
        return cls(ring, (ring.one(),) + tuple(ring.zero() for _ in range(N - 1)))

    def _match(self, other):
        if not isinstance(other, NecklaceVector):
            raise TypeError(f"expected NecklaceVector, got {type(other).__name__}")
        if other.ring != self.ring or other.N != self.N:
            raise ValueError("necklace vectors over different rings or truncations")
        return other

    def __add__(self, other):
        other = self._match(other)
        return NecklaceVector(self.ring, tuple(x + y for x, y in zip(self.coords, other.coords)))

    def __neg__(self):
        return NecklaceVector(self.ring, tuple(-x for x in self.coords))

    def __sub__(self, other):
        return self + (-self._match(other))

    def __mul__(self, other):
        other = self._match(other)
        ring, N = self.ring, self.N
        B = _AdamsCache(ring, self.coords)
        C = _AdamsCache(ring, other.coords)
        out = []
        for n in range(1, N + 1):
            acc = ring.zero()
            divs = divisors(n)
            for i in divs:
                if ring.is_zero(self.coords[i - 1]):
                    continue
                for j in divs:
                    if lcm(i, j) != n or ring.is_zero(other.coords[j - 1]):
                        continue
                    acc = acc + B(n // i, i) * C(n // j, j) * gcd(i, j)
            out.append(acc)
        return NecklaceVector(ring, tuple(out))

    def ghost(self) -> tuple:
        return nr_ghost(self)

    @classmethod
    def from_ghost(cls, ring: Ring, ghost) -> "NecklaceVector":
        return nr_from_ghost(ring, ghost)

    def verschiebung(self, r: int) -> "NecklaceVector":
        return nr_verschiebung(self, r)

    def frobenius(self, r: int) -> "NecklaceVector":
        return nr_frobenius(self, r)


def nr_ghost(b: NecklaceVector) -> tuple:
    ring = b.ring
    out = []
    for n in range(1, b.N + 1):
        acc = ring.zero()
        for d in divisors(n):
            acc = acc + ring.adams(n // d, b.coords[d - 1]) * d
        out.append(acc)
    return tuple(out)


def nr_from_ghost(ring: Ring, ghost) -> NecklaceVector:
    """b_n = (1/n) sum_{d|n} mu(d) Psi^d(w_{n/d})."""
    N = len(ghost)
    _check_length(N)
    out = []
    for n in range(1, N + 1):
        acc = ring.zero()
        for d in divisors(n):
            mu = mobius(d)
            if mu:
                acc = acc + ring.adams(d, ghost[n // d - 1]) * mu
        out.append(ring.div(acc, n))
    return NecklaceVector(ring, tuple(out))


def nr_verschiebung(b: NecklaceVector, r: int) -> NecklaceVector:
    """V_r: beta_n = alpha_{n/r} when r | n, else 0."""
    if r < 1:
        raise ValueError("index must be positive")
    ring = b.ring
    out = [ring.zero() for _ in range(b.N)]
    for i, a in enumerate(b.coords, start=1):
        if i * r <= b.N:
            out[i * r - 1] = a
    return NecklaceVector(ring, tuple(out))


def nr_frobenius(b: NecklaceVector, r: int) -> NecklaceVector:
    """F_r: beta_n = sum_{[r,j] = rn} (j/n) Psi^{rn/j}(alpha_j); length floor(N/r)."""
    if r < 1:
        raise ValueError("index must be positive")
    M = b.N // r
    if M < 1:
        raise TruncationError(f"F_{r} of a length-{b.N} vector is empty")
    ring = b.ring
    out = []
    for n in range(1, M + 1):
        acc = ring.zero()
        for j in divisors(r * n):
            if lcm(r, j) == r * n:
                acc = acc + ring.adams(r * n // j, b.coords[j - 1]) * (j // n)
        out.append(acc)
    return NecklaceVector(ring, tuple(out))


def m_value(ring: Ring, r, n: int):
    """M(r, n) = (1/n) sum_{d|n} mu(d) Psi^d(r^{n/d})."""
    acc = ring.zero()
    for d in divisors(n):
        mu = mobius(d)
        if mu:
            acc = acc + ring.adams(d, ring.power(r, n // d)) * mu
    return ring.div(acc, n)


def m_vector(ring: Ring, r, N: int) -> NecklaceVector:
    """The necklace vector M(r) = (M(r, 1), ..., M(r, N))."""
    _check_length(N)
    r = ring.coerce(r)
    # share the powers of r across components
    powers = [ring.one(), r]
    for _ in range(2, N + 1):
        powers.append(powers[-1] * r)
    out = []
    for n in range(1, N + 1):
        acc = ring.zero()
        for d in divisors(n):
            mu = mobius(d)
            if mu:
                acc = acc + ring.adams(d, powers[n // d]) * mu
        out.append(ring.div(acc, n))
    return NecklaceVector(ring, tuple(out))


def tau(x: WittVector) -> NecklaceVector:
    """tau(a) = sum_n V_n M(a_n); component k is sum_{d|k} M(a_d, k/d)."""
    ring, N = x.ring, x.N
    out = [ring.zero() for _ in range(N)]
    for d, a in enumerate(x.coords, start=1):
        if ring.is_zero(a):
            continue
        M = m_vector(ring, a, N // d).coords
        for k in range(1, N // d + 1):
            out[d * k - 1] = out[d * k - 1] + M[k - 1]
    return NecklaceVector(ring, tuple(out))


def tau_inverse(b: NecklaceVector) -> WittVector:
    """Peel the triangular system a_n = b_n - sum_{d|n, d<n} M(a_d, n/d)."""
    ring, N = b.ring, b.N
    rest = list(b.coords)
    a = []
    for n in range(1, N + 1):
        an = rest[n - 1]
        a.append(an)
        if ring.is_zero(an):
            continue
        M = m_vector(ring, an, N // n).coords
        for k in range(2, N // n + 1):
            rest[n * k - 1] = rest[n * k - 1] - M[k - 1]
    return WittVector(ring, tuple(a))


def s_tilde(b: NecklaceVector) -> Series1:
    """s~(b) = prod_n sum_r S^r(b_n) t^{nr}."""
    ring, N = b.ring, b.N
    f = [ring.one()] + [ring.zero() for _ in range(N)]
    for n, bn in enumerate(b.coords, start=1):
        if ring.is_zero(bn):
            continue
        S = ring.symmetric_powers(bn, N // n)
        g = [ring.zero() for _ in range(N + 1)]
        for k in range(N + 1):
            if ring.is_zero(f[k]):
                continue
            for r in range(0, (N - k) // n + 1):
                g[k + n * r] = g[k + n * r] + f[k] * S[r]
        f = g
    return Series1(ring, tuple(f[1:]))


def s_tilde_inverse(f: Series1) -> NecklaceVector:
    """Recover b from s~(b) by dividing out one factor at a time."""
    ring, N = f.ring, f.N
    rest = list(f.full())
    b = []
    for n in range(1, N + 1):
        bn = rest[n]
        b.append(bn)
        if ring.is_zero(bn):
            continue
        # divide by sum_r S^r(bn) t^{nr}, i.e. multiply by sum_r (-1)^r lambda^r(bn) t^{nr}
        L = ring.lambdas(bn, N // n)
        g = [ring.zero() for _ in range(N + 1)]
        for k in range(N + 1):
            if ring.is_zero(rest[k]):
                continue
            for r in range(0, (N - k) // n + 1):
                term = rest[k] * L[r]
                g[k + n * r] = g[k + n * r] + term if r % 2 == 0 else g[k + n * r] - term
        rest = g
    return NecklaceVector(ring, tuple(b))


def nr_lambda(m: int, b: NecklaceVector) -> NecklaceVector:
    """lambda^m on Nr(R), transported through s~; length floor(N/m)."""
    return s_tilde_inverse(s_tilde(b).lambda_bar(m))


def canonical_iso(b: NecklaceVector, target: Ring) -> NecklaceVector:
    """tau_target o tau_source^{-1}: compare two lambda-structures on one carrier."""
    x = tau_inverse(b)
    return tau(WittVector(target, x.coords))


# -- necklace identities over alphabets -------------------------------------

def identity_product(X, Y, k: int):
    """M(XY, k) - sum_{[i,j]=k} (i,j) M(Psi^{k/i} X, i) M(Psi^{k/j} Y, j)."""
    from .symfun import necklace_sym

    ring = X.ring
    rhs = ring.zero()
    for i in divisors(k):
        for j in divisors(k):
            if lcm(i, j) == k:
                rhs = rhs + necklace_sym(X.adams(k // i), i) * necklace_sym(Y.adams(k // j), j) * gcd(i, j)
    return necklace_sym(X.times(Y), k) - rhs


def identity_power(X, r: int, k: int):
    """M(X^r, k) - sum_{[r,j]=kr} (j/k) M(Psi^{kr/j} X, j)."""
    from .symfun import necklace_sym

    ring = X.ring
    rhs = ring.zero()
    for j in divisors(k * r):
        if lcm(r, j) == k * r:
            rhs = rhs + necklace_sym(X.adams(k * r // j), j) * (j // k)
    return necklace_sym(X.power(r), k) - rhs


def identity_mixed(X, Y, r: int, s: int, k: int):
    """Component [r,s]k of V_r M(X) V_s M(Y) against (r,s) M(X^{s'} Y^{r'}, k),
    with r' = r/(r,s), s' = s/(r,s) and n = [r,s] k:

        (r,s) M(X^{s'} Y^{r'}, k)
          - sum_{[ri, sj] = n} (ri, sj) M(Psi^{n/(ri)} X, i) M(Psi^{n/(sj)} Y, j).
    """
    from .symfun import necklace_sym

    ring = X.ring
    g = gcd(r, s)
    n = lcm(r, s) * k
    rhs = ring.zero()
    for I in divisors(n):
        if I % r:
            continue
        for J in divisors(n):
            if J % s or lcm(I, J) != n:
                continue
            rhs = rhs + (necklace_sym(X.adams(n // I), I // r)
                         * necklace_sym(Y.adams(n // J), J // s) * gcd(I, J))
    lhs = necklace_sym(X.power(s // g).times(Y.power(r // g)), k) * g
    return lhs - rhs


def e_coefficient(ring: Ring, a, n: int):
    """E(a, n) = (1/n) sum_{d|n} mu(d) Psi^d(a_{n/d}) for a sequence a."""
    acc = ring.zero()
    for d in divisors(n):
        mu = mobius(d)
        if mu:
            acc = acc + ring.adams(d, a[n // d - 1]) * mu
    return ring.div(acc, n)


def identity_e(ring: Ring, a, b, n: int):
    """E(ab, n) - sum_{[i,j]=n} (i,j) Psi^{n/i} E(a,i) Psi^{n/j} E(b,j)."""
    ab = [x * y for x, y in zip(a, b)]
    rhs = ring.zero()
    for i in divisors(n):
        for j in divisors(n):
            if lcm(i, j) == n:
                rhs = rhs + (ring.adams(n // i, e_coefficient(ring, a, i))
                             * ring.adams(n // j, e_coefficient(ring, b, j)) * gcd(i, j))
    return e_coefficient(ring, ab, n) - rhs


def necklace_identity_check(ring: Ring, X, Y, kmax: int, rmax: int = 3) -> dict:
    """Residuals of the product, power, mixed and E identities up to ``kmax``."""
    out = {}
    for k in range(1, kmax + 1):
        out[("product", k)] = identity_product(X, Y, k)
        for r in range(1, rmax + 1):
            out[("power", r, k)] = identity_power(X, r, k)
            for s in range(1, rmax + 1):
                out[("mixed", r, s, k)] = identity_mixed(X, Y, r, s, k)
    return out
