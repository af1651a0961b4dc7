"""The ring Lambda_1(R) of power series 1 + a_1 t + a_2 t^2 + ... mod t^(N+1).

Addition is multiplication of series.  The product *_1 is characterised by
H(X) *_1 H(Y) = H(XY) where H(X) = prod 1/(1 - x t), and is evaluated either
through the ghost coordinates (logarithmic derivative) or through the
universal integral polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .coeff import Ring, TruncationError
from . import symfun


def dlog(ring: Ring, coeffs) -> tuple:
    """Coefficients d_1..d_N of f'/f = sum_{n>=0} d_{n+1} t^n, with f = 1 + sum a_n t^n."""
    a = [ring.one()] + list(coeffs)
    N = len(coeffs)
    d = [None]
    for n in range(1, N + 1):
        acc = a[n] * n
        for k in range(1, n):
            acc = acc - d[k] * a[n - k]
        d.append(acc)
    return tuple(d[1:])


def from_dlog(ring: Ring, d) -> tuple:
    """Inverse of :func:`dlog`: solve n a_n = sum_{k=1..n} d_k a_{n-k}."""
    a = [ring.one()]
    for n in range(1, len(d) + 1):
        acc = ring.zero()
        for k in range(1, n + 1):
            acc = acc + d[k - 1] * a[n - k]
        a.append(ring.div(acc, n))
    return tuple(a[1:])


def _series_mul(ring, a, b):
    """Coefficients 1..N of (1 + sum a) (1 + sum b)."""
    N = len(a)
    A = [ring.one()] + list(a)
    B = [ring.one()] + list(b)
    return tuple(
        sum((A[i] * B[n - i] for i in range(1, n)), A[n] + B[n]) for n in range(1, N + 1)
    )


def _series_inv(ring, a):
    N = len(a)
    A = [ring.one()] + list(a)
    inv = [ring.one()]
    for n in range(1, N + 1):
        acc = ring.zero()
        for i in range(1, n + 1):
            acc = acc - A[i] * inv[n - i]
        inv.append(acc)
    return tuple(inv[1:])


@dataclass(frozen=True)
class Series1:
    """1 + a_1 t + ... + a_N t^N in Lambda_1(R)."""

    ring: Ring
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) < 1:
            raise TruncationError("series must keep at least one coefficient")
        object.__setattr__(self, "coeffs", tuple(self.ring.coerce(c) for c in self.coeffs))

    @property
    def N(self) -> int:
        return len(self.coeffs)

    # -- construction --------------------------------------------------
    @classmethod
    def one(cls, ring: Ring, N: int) -> "Series1":
        return cls(ring, tuple(ring.zero() for _ in range(N)))

    @classmethod
    def from_full(cls, ring: Ring, coeffs) -> "Series1":
        """From (c_0, c_1, ..., c_N); c_0 must be 1."""
        coeffs = list(coeffs)
        if coeffs[0] != ring.one():
            raise ValueError("constant term must be 1")
        return cls(ring, tuple(coeffs[1:]))

    @classmethod
    def from_witt(cls, x) -> "Series1":
        """E(a) = prod_n 1/(1 - a_n t^n)."""
        ring, N = x.ring, x.N
        f = [ring.one()] + [ring.zero() for _ in range(N)]
        for n, a in enumerate(x.coords, start=1):
            if ring.is_zero(a):
                continue
            # multiply by the geometric series in a t^n
            for k in range(n, N + 1):
                f[k] = f[k] + a * f[k - n]
        return cls(ring, tuple(f[1:]))

    def to_witt(self):
        """Inverse of :meth:`from_witt`, peeling one factor at a time."""
        from .witt import WittVector

        ring, N = self.ring, self.N
        f = [ring.one()] + list(self.coeffs)
        a = []
        for n in range(1, N + 1):
            an = f[n]
            a.append(an)
            if ring.is_zero(an):
                continue
            # multiply by (1 - a_n t^n)
            for k in range(N, n - 1, -1):
                f[k] = f[k] - an * f[k - n]
        return WittVector(ring, tuple(a))

    @classmethod
    def from_dlog(cls, ring: Ring, d) -> "Series1":
        return cls(ring, from_dlog(ring, d))

    def full(self) -> tuple:
        return (self.ring.one(),) + self.coeffs

    def dlog(self) -> tuple:
        return dlog(self.ring, self.coeffs)

    # -- additive structure -------------------------------------------
    def _match(self, other):
        if not isinstance(other, Series1):
            raise TypeError(f"expected Series1, got {type(other).__name__}")
        if other.ring != self.ring or other.N != self.N:
            raise ValueError("series over different rings or truncations")
        return other

    def __add__(self, other):
        other = self._match(other)
        return Series1(self.ring, _series_mul(self.ring, self.coeffs, other.coeffs))

    def __neg__(self):
        return Series1(self.ring, _series_inv(self.ring, self.coeffs))

    def __sub__(self, other):
        return self + (-self._match(other))

    # -- multiplicative structure -------------------------------------
    def star1(self, other, method: str = "ghost") -> "Series1":
        """The product *_1; ``method`` is ``"ghost"`` or ``"universal"``."""
        other = self._match(other)
        ring = self.ring
        if method == "ghost":
            d = [x * y for x, y in zip(self.dlog(), other.dlog())]
            return Series1.from_dlog(ring, d)
        if method == "universal":
            out = []
            for n in range(1, self.N + 1):
                P = symfun.pbar_product(n)
                vals = list(self.coeffs[:n]) + list(other.coeffs[:n])
                out.append(P.evaluate(vals, ring.one()))
            return Series1(ring, tuple(out))
        raise ValueError(f"unknown method {method!r}")

    __mul__ = star1

    def star_q(self, other, q) -> "Series1":
        """*_q transported from *_1 through ghost coordinates scaled by 1/q.

        (1/(1-xt))^q *_q (1/(1-yt))^q = (1/(1-xyt))^q; the identity is
        (1/(1-t))^q.
        """
        other = self._match(other)
        q = Fraction(q)
        if q == 0:
            raise ZeroDivisionError("*_q is undefined for q = 0")
        ring = self.ring
        d = [ring.div(x * y * q.denominator, q.numerator)
             for x, y in zip(self.dlog(), other.dlog())]
        return Series1.from_dlog(ring, d)

    # -- operators -----------------------------------------------------
    def verschiebung(self, n: int) -> "Series1":
        """V_n: t -> t^n, keeping the truncation."""
        if n < 1:
            raise ValueError("index must be positive")
        ring = self.ring
        out = [ring.zero() for _ in range(self.N)]
        for k, a in enumerate(self.coeffs, start=1):
            if k * n <= self.N:
                out[k * n - 1] = a
        return Series1(ring, tuple(out))

    def frobenius(self, n: int) -> "Series1":
        """F_n, the n-th Adams operation of Lambda_1, via the integral polynomials Q_{n,k}.

        The result keeps floor(N / n) coefficients.
        """
        M = self.N // n
        if n < 1 or M < 1:
            raise TruncationError(f"F_{n} needs at least {n} coefficients")
        ring = self.ring
        out = [symfun.q_adams(n, k).evaluate(self.coeffs[: n * k], ring.one())
               for k in range(1, M + 1)]
        return Series1(ring, tuple(out))

    def lambda_bar(self, m: int) -> "Series1":
        """The lambda operation Lambda-bar^m of Lambda_1 via P-bar_{n,m}.

        The result keeps floor(N / m) coefficients.
        """
        M = self.N // m
        if m < 1 or M < 1:
            raise TruncationError(f"lambda^{m} needs at least {m} coefficients")
        ring = self.ring
        out = [symfun.pbar_lambda(n, m).evaluate(self.coeffs[: n * m], ring.one())
               for n in range(1, M + 1)]
        return Series1(ring, tuple(out))

    def truncate(self, M: int) -> "Series1":
        if M > self.N:
            raise TruncationError("cannot extend a truncation")
        return Series1(self.ring, self.coeffs[:M])


# -- the theta maps between Lambda, Lambda_0 and Lambda_1 ---------------

def theta0(f: Series1) -> Series1:
    """f(t) -> f(-t)."""
    return Series1(f.ring, tuple(c if k % 2 == 0 else -c for k, c in enumerate(f.coeffs, start=1)))


def theta1(f: Series1) -> Series1:
    """f(t) -> 1/f(-t)."""
    return -theta0(f)


def lambda_star(f: Series1, g: Series1) -> Series1:
    """Grothendieck's product on Lambda(R): E(X) * E(Y) = E(XY), E(X) = prod (1 + x t)."""
    f._match(g)
    ring = f.ring
    out = []
    for n in range(1, f.N + 1):
        P = symfun.p_elementary_product(n)
        vals = list(f.coeffs[:n]) + list(g.coeffs[:n])
        out.append(P.evaluate(vals, ring.one()))
    return Series1(ring, tuple(out))
