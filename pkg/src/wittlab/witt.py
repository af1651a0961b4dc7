"""Big Witt vectors truncated to the index set {1, ..., N}.

Components are indexed from 1.  Ring operations are transported through
the ghost map, w_n = sum_{d | n} d a_d^{n/d}, and pulled back with the
divisor recursion; in an integral ring every division is checked to be
exact.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import divisors
from .coeff import Ring, TruncationError


def _check_length(N: int):
    if N < 1:
        raise TruncationError("truncation length must be at least 1")


def ghost_map(ring: Ring, coords) -> tuple:
    """Ghost components (w_1, ..., w_N) of a Witt vector."""
    N = len(coords)
    _check_length(N)
    w = [ring.zero() for _ in range(N + 1)]
    for d in range(1, N + 1):
        a = coords[d - 1]
        if ring.is_zero(a):
            continue
        pw = a
        for k in range(1, N // d + 1):
            if k > 1:
                pw = pw * a
            w[d * k] = w[d * k] + pw * d
    return tuple(w[1:])


def from_ghost(ring: Ring, ghost) -> tuple:
    """Invert the ghost map; raises IntegralityError if the result leaves the ring."""
    N = len(ghost)
    _check_length(N)
    a: list = []
    powers: list[list] = []  # powers[d-1][k] = a_d^k
    for n in range(1, N + 1):
        acc = ghost[n - 1]
        for d in divisors(n)[:-1]:
            acc = acc - powers[d - 1][n // d] * d
        an = ring.div(acc, n)
        a.append(an)
        pw = [ring.one(), an]
        for _ in range(2, N // n + 1):
            pw.append(pw[-1] * an)
        powers.append(pw)
    return tuple(a)


@dataclass(frozen=True)
class WittVector:
    ring: Ring
    coords: tuple

    def __post_init__(self):
        _check_length(len(self.coords))
        object.__setattr__(self, "coords", tuple(self.ring.coerce(c) for c in self.coords))

    @property
    def N(self) -> int:
        return len(self.coords)

    @classmethod
    def from_ghost(cls, ring: Ring, ghost) -> "WittVector":
        return cls(ring, from_ghost(ring, tuple(ghost)))

    @classmethod
    def zero(cls, ring: Ring, N: int) -> "WittVector":
        return cls(ring, tuple(ring.zero() for _ in range(N)))

    @classmethod
    def one(cls, ring: Ring, N: int) -> "WittVector":
        return teichmuller(ring, ring.one(), N)

    def ghost(self) -> tuple:
        return ghost_map(self.ring, self.coords)

    def _match(self, other) -> "WittVector":
        if not isinstance(other, WittVector):
            raise TypeError(f"expected WittVector, got {type(other).__name__}")
        if other.ring != self.ring or other.N != self.N:
            raise ValueError("Witt vectors over different rings or truncations")
        return other

    def __add__(self, other):
        other = self._match(other)
        g = [x + y for x, y in zip(self.ghost(), other.ghost())]
        return WittVector.from_ghost(self.ring, g)

    def __neg__(self):
        return WittVector.from_ghost(self.ring, [-x for x in self.ghost()])

    def __sub__(self, other):
        other = self._match(other)
        g = [x - y for x, y in zip(self.ghost(), other.ghost())]
        return WittVector.from_ghost(self.ring, g)

    def __mul__(self, other):
        other = self._match(other)
        g = [x * y for x, y in zip(self.ghost(), other.ghost())]
        return WittVector.from_ghost(self.ring, g)

    def verschiebung(self, r: int) -> "WittVector":
        return verschiebung(self, r)

    def frobenius(self, r: int) -> "WittVector":
        return frobenius(self, r)

    def truncate(self, M: int) -> "WittVector":
        if M > self.N:
            raise TruncationError(f"cannot extend a length-{self.N} vector to {M}")
        return WittVector(self.ring, self.coords[:M])


def teichmuller(ring: Ring, r, N: int) -> WittVector:
    """The Teichmueller lift (r, 0, 0, ...)."""
    _check_length(N)
    return WittVector(ring, (ring.coerce(r),) + tuple(ring.zero() for _ in range(N - 1)))


def verschiebung(x: WittVector, r: int) -> WittVector:
    """V_r: ghost w_n -> r w_{n/r} when r | n, else 0.  Length is preserved."""
    if r < 1:
        raise ValueError("index must be positive")
    ring = x.ring
    coords = [ring.zero() for _ in range(x.N)]
    for i, a in enumerate(x.coords, start=1):
        if i * r <= x.N:
            coords[i * r - 1] = a
    return WittVector(ring, tuple(coords))


def frobenius(x: WittVector, r: int) -> WittVector:
    """F_r: ghost w_n -> w_{rn}; the result has length floor(N / r)."""
    if r < 1:
        raise ValueError("index must be positive")
    M = x.N // r
    if M < 1:
        raise TruncationError(f"F_{r} of a length-{x.N} vector is empty")
    g = x.ghost()
    return WittVector.from_ghost(x.ring, [g[r * n - 1] for n in range(1, M + 1)])


def witt_lambda(m: int, x: WittVector) -> WittVector:
    """lambda^m on W(R), transported from the lambda-ring structure of Lambda_1.

    Component n of the result depends on components up to n m, so the
    result has length floor(N / m).
    """
    from .lambda1 import Series1

    M = x.N // m
    if m < 1 or M < 1:
        raise TruncationError(f"lambda^{m} needs at least {m} components")
    f = Series1.from_witt(x)
    return f.lambda_bar(m).to_witt()
