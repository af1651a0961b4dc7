import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import ZZ, int_vectors
from wittlab.coeff import FreeLambda, IntegralityError, MultiPoly, Rationals, TruncationError
from wittlab.witt import WittVector, from_ghost, ghost_map, teichmuller, witt_lambda


def brute_ghost(a):
    return tuple(sum(d * a[d - 1] ** (n // d) for d in range(1, n + 1) if n % d == 0)
                 for n in range(1, len(a) + 1))


@given(int_vectors(10, 6))
def test_ghost_map_matches_divisor_sum(a):
    assert ghost_map(ZZ, a) == brute_ghost(a)


@pytest.mark.parametrize("ghost,coords", [
    ((2, 2, 2, 2), (2, -1, -2, -4)),
    ((0, 2, 0, 2), (0, 1, 0, 0)),
    ((3, 9, 27, 81), (3, 0, 0, 0)),
])
def test_from_ghost_examples(ghost, coords):
    assert from_ghost(ZZ, ghost) == coords
    assert ghost_map(ZZ, coords) == ghost


def test_ghost_of_small_vector():
    # w3 = a1^3 + 3 a3 = 1 and w4 = a1^4 + 2 a2^2 + 4 a4 = 3
    assert ghost_map(ZZ, (1, 1, 0, 0)) == (1, 3, 1, 3)


def test_from_ghost_rejects_non_integral_targets():
    with pytest.raises(IntegralityError):
        from_ghost(ZZ, (1, 2))  # a2 = (2 - 1)/2
    assert from_ghost(Rationals(), (1, 2)) == (1, Fraction(1, 2))


def test_zero_length_is_an_error():
    with pytest.raises(TruncationError):
        ghost_map(ZZ, ())


@given(int_vectors(12), int_vectors(12))
def test_ring_operations_are_ghost_componentwise(a, b):
    x, y = WittVector(ZZ, a), WittVector(ZZ, b)
    gx, gy = x.ghost(), y.ghost()
    assert (x + y).ghost() == tuple(p + q for p, q in zip(gx, gy))
    assert (x - y).ghost() == tuple(p - q for p, q in zip(gx, gy))
    assert (x * y).ghost() == tuple(p * q for p, q in zip(gx, gy))


@given(int_vectors(8), int_vectors(8), int_vectors(8))
def test_witt_ring_axioms(a, b, c):
    x, y, z = (WittVector(ZZ, v) for v in (a, b, c))
    assert x + y == y + x and x * y == y * x
    assert x * (y + z) == x * y + x * z
    assert x + WittVector.zero(ZZ, 8) == x
    assert x * WittVector.one(ZZ, 8) == x
    assert x - x == WittVector.zero(ZZ, 8)


def test_teichmuller_sum_example():
    one = teichmuller(ZZ, 1, 4)
    assert (one + one).coords == (2, -1, -2, -4)


@given(st.integers(-9, 9), st.integers(-9, 9))
def test_teichmuller_is_multiplicative(r, s):
    assert teichmuller(ZZ, r, 7) * teichmuller(ZZ, s, 7) == teichmuller(ZZ, r * s, 7)


def test_verschiebung_and_frobenius_of_teichmuller():
    R = MultiPoly(1)
    a = R.gen(0)
    t = teichmuller(R, a, 4)
    assert t.verschiebung(2).coords == (0, a, 0, 0)
    assert t.frobenius(2) == teichmuller(R, a * a, 2)


@given(int_vectors(12), st.integers(1, 4), st.integers(1, 4))
def test_verschiebung_frobenius_relations(a, r, s):
    from math import gcd, lcm
    x = WittVector(ZZ, a)
    M = 12 // r
    assert x.verschiebung(r).frobenius(r) == WittVector.from_ghost(
        ZZ, [r * w for w in x.ghost()[:M]])
    assert x.verschiebung(r).verschiebung(s) == x.verschiebung(r * s)
    if r * s <= 12:
        assert x.frobenius(r).frobenius(s) == x.frobenius(r * s)
    g = gcd(r, s)
    lhs = x.verschiebung(s).frobenius(r)
    rhs = x.frobenius(lcm(r, s) // s).verschiebung(lcm(r, s) // r)
    rhs = WittVector.from_ghost(ZZ, [g * w for w in rhs.ghost()]).truncate(lhs.N)
    assert lhs == rhs


@given(int_vectors(10), int_vectors(10))
def test_frobenius_is_a_ring_map(a, b):
    x, y = WittVector(ZZ, a), WittVector(ZZ, b)
    for r in (2, 3):
        assert (x * y).frobenius(r) == x.frobenius(r) * y.frobenius(r)
        assert (x + y).frobenius(r) == x.frobenius(r) + y.frobenius(r)


def test_frobenius_beyond_truncation():
    with pytest.raises(TruncationError):
        WittVector(ZZ, (1, 2)).frobenius(3)
    with pytest.raises(ValueError):
        WittVector(ZZ, (1, 2)).verschiebung(0)


@given(int_vectors(8))
def test_lambda_two_first_coordinate(a):
    assert witt_lambda(2, WittVector(ZZ, a)).coords[0] == -a[1]


@given(int_vectors(6))
def test_lambda_one_is_identity(a):
    x = WittVector(ZZ, a)
    assert witt_lambda(1, x) == x


def test_lambda_two_of_teichmuller_vanishes():
    R = MultiPoly(1)
    assert witt_lambda(2, teichmuller(R, R.gen(0), 8)) == WittVector.zero(R, 4)


def test_lambda_over_integers_stays_integral():
    rng = random.Random(3)
    for _ in range(10):
        x = WittVector(ZZ, tuple(rng.randint(-3, 3) for _ in range(9)))
        for m in (2, 3):
            y = witt_lambda(m, x)
            assert all(isinstance(c, int) for c in y.coords)


def test_free_lambda_ghost_round_trip():
    R = FreeLambda(6)
    rng = random.Random(5)
    x = WittVector(R, tuple(R.random_element(rng) for _ in range(6)))
    assert WittVector.from_ghost(R, x.ghost()) == x
