import random
from itertools import product
from math import gcd, lcm

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import ZZ, int_vectors
from wittlab.coeff import Binomial, FreeLambda, MultiPoly
from wittlab.lambda1 import Series1
from wittlab.necklace import (NecklaceVector, canonical_iso, identity_e, identity_mixed,
                              identity_power, identity_product, m_value, m_vector,
                              necklace_identity_check, nr_ghost, nr_lambda, s_tilde,
                              s_tilde_inverse, tau, tau_inverse)
from wittlab.symfun import Alphabet, necklace_sym
from wittlab.witt import WittVector


def primitive_necklaces(q, k):
    """Rotation classes of aperiodic words of length k over q letters, by enumeration."""
    seen, classes = set(), []
    for w in product(range(q), repeat=k):
        if w in seen:
            continue
        rots = {w[i:] + w[:i] for i in range(k)}
        seen |= rots
        if len(rots) == k:
            classes.append(min(rots))
    return classes


@pytest.mark.parametrize("q", [1, 2, 3])
def test_necklace_count_matches_enumeration(q):
    kmax = 10 if q < 3 else 8
    for k in range(1, kmax + 1):
        assert m_value(ZZ, q, k) == len(primitive_necklaces(q, k))


def test_two_letter_six_bead_necklaces():
    assert m_value(ZZ, 2, 6) == 9


def test_content_resolved_count():
    # coefficient of x^alpha in M(x1 + x2 + x3, k) counts primitive necklaces of content alpha
    R = MultiPoly(3)
    r = sum((R.gen(i) for i in range(3)), R.zero())
    for k in range(1, 7):
        counts: dict = {}
        for w in primitive_necklaces(3, k):
            c = tuple(w.count(i) for i in range(3))
            counts[c] = counts.get(c, 0) + 1
        assert m_value(R, r, k).terms == counts


def test_necklace_vector_shares_values():
    assert m_vector(ZZ, 3, 6).coords == tuple(m_value(ZZ, 3, k) for k in range(1, 7))


@given(int_vectors(10), int_vectors(10))
def test_tau_is_a_ring_isomorphism(a, b):
    x, y = WittVector(ZZ, a), WittVector(ZZ, b)
    assert tau(x + y) == tau(x) + tau(y)
    assert tau(x * y) == tau(x) * tau(y)
    assert tau_inverse(tau(x)) == x


@given(int_vectors(10))
def test_big_diagram_over_integers(a):
    x = WittVector(ZZ, a)
    b = tau(x)
    s = s_tilde(b)
    assert s == Series1.from_witt(x)
    assert nr_ghost(b) == x.ghost()
    assert s.dlog() == nr_ghost(b)
    assert s_tilde_inverse(s) == b


@given(int_vectors(8), int_vectors(8))
def test_necklace_product_is_ghost_componentwise(a, b):
    u, v = NecklaceVector(ZZ, a), NecklaceVector(ZZ, b)
    assert (u * v).ghost() == tuple(p * q for p, q in zip(u.ghost(), v.ghost()))
    assert NecklaceVector.from_ghost(ZZ, u.ghost()) == u


def test_lambda_on_necklace_vectors():
    assert nr_lambda(2, NecklaceVector(ZZ, (3, 1, 0, 0))).coords == (2, 4)
    R = MultiPoly(2)
    x1, x2 = R.gen(0), R.gen(1)
    N = 8
    b = m_vector(R, x1, N) + m_vector(R, x2, N)
    assert nr_lambda(2, b) == m_vector(R, x1 * x2, N // 2)


def free_vector(R, rng, N):
    return NecklaceVector(R, tuple(R.random_element(rng, size=2, terms=2) for _ in range(N)))


def scaled(b, c):
    return NecklaceVector(b.ring, tuple(x * c for x in b.coords))


@pytest.mark.parametrize("r,s", [(1, 2), (2, 2), (2, 3), (3, 4), (4, 2)])
def test_verschiebung_frobenius_suite(r, s):
    R = FreeLambda(8)
    N = 8
    rng = random.Random(r * 10 + s)
    b = free_vector(R, rng, N)
    a = R.random_element(rng, size=2, terms=2)
    c = R.random_element(rng, size=2, terms=2)
    g, l = gcd(r, s), lcm(r, s)
    # (a) V_r V_s = V_rs
    assert b.verschiebung(s).verschiebung(r) == b.verschiebung(r * s)
    # (b) F_r F_s = F_rs
    if r * s <= N:
        assert b.frobenius(s).frobenius(r) == b.frobenius(r * s)
    # (c) F_r V_r = r id
    assert b.verschiebung(r).frobenius(r).coords == scaled(b, r).coords[: N // r]
    # (d) with the exponents that make both ghosts agree
    lhs = m_vector(R, a, N).verschiebung(r) * m_vector(R, c, N).verschiebung(s)
    rhs = scaled(m_vector(R, R.power(a, s // g) * R.power(c, r // g), N).verschiebung(l), g)
    assert lhs == rhs
    # (e) F_r M(a) = M(a^r)
    assert m_vector(R, a, N).frobenius(r) == m_vector(R, R.power(a, r), N // r)
    # (f) F_r V_s = (r,s) V_{[r,s]/r} F_{[r,s]/s}
    lhs = b.verschiebung(s).frobenius(r)
    rhs = scaled(b.frobenius(l // s).verschiebung(l // r), g)
    assert lhs.coords == rhs.coords[: lhs.N]


def test_written_mixed_exponents_fail_off_the_diagonal():
    R = MultiPoly(2)
    a, c = R.gen(0), R.gen(1)
    N = 6
    lhs = m_vector(R, a, N).verschiebung(2) * m_vector(R, c, N).verschiebung(3)
    swapped = m_vector(R, a ** 3 * c ** 2, N).verschiebung(6)
    written = m_vector(R, a ** 2 * c ** 3, N).verschiebung(6)
    assert lhs == swapped
    assert lhs != written


def letter_alphabet(R, idx):
    return Alphabet(R, tuple(R.gen(i) for i in idx))


def test_necklace_identities_on_letters():
    R = MultiPoly(4)
    X, Y = letter_alphabet(R, (0, 1)), letter_alphabet(R, (2, 3))
    for key, resid in necklace_identity_check(R, X, Y, 6, rmax=3).items():
        assert resid == 0, key


def test_necklace_identities_in_a_binomial_ring():
    R = Binomial(MultiPoly(2))
    X = Alphabet(R, (R.base.gen(0), R.base.gen(1)))
    for k in range(1, 6):
        assert identity_product(X, X, k) == 0
        assert identity_power(X, 2, k) == 0
        assert identity_mixed(X, X, 2, 3, k) == 0


@given(st.lists(st.integers(-3, 3), min_size=3, max_size=3),
       st.lists(st.integers(-3, 3), min_size=2, max_size=2))
def test_necklace_identities_on_integer_alphabets(xs, ys):
    R = MultiPoly(1)
    X, Y = Alphabet(R, tuple(xs)), Alphabet(R, tuple(ys))
    for k in range(1, 6):
        assert identity_product(X, Y, k) == 0
        assert identity_power(Y, 3, k) == 0
        assert identity_mixed(X, Y, 2, 4, k) == 0


def test_e_identity():
    R = MultiPoly(2)
    x, y = R.gen(0), R.gen(1)
    a = [x ** n for n in range(1, 9)]
    b = [y ** n for n in range(1, 9)]
    for n in range(1, 9):
        assert identity_e(R, a, b, n) == 0
    rng = random.Random(8)
    F = FreeLambda(8)
    a = [F.random_element(rng) for _ in range(8)]
    b = [F.random_element(rng) for _ in range(8)]
    for n in range(1, 7):
        assert identity_e(F, a, b, n) == 0


def test_e_identity_reduces_to_product_identity():
    R = MultiPoly(2)
    x, y = R.gen(0), R.gen(1)
    a = [x ** n for n in range(1, 7)]
    b = [y ** n for n in range(1, 7)]
    X, Y = Alphabet(R, (x,)), Alphabet(R, (y,))
    from wittlab.necklace import e_coefficient
    for n in range(1, 7):
        assert e_coefficient(R, a, n) == necklace_sym(X, n)
    assert identity_product(X, Y, 6) == identity_e(R, a, b, 6) == 0


def test_canonical_iso_between_lambda_structures():
    A = MultiPoly(1)
    B = Binomial(A)
    x = A.gen(0)
    b = m_vector(A, x, 4)  # tau_A of the Teichmueller lift of x
    out = canonical_iso(b, B)
    assert out == m_vector(B, x, 4)
    assert canonical_iso(out, A) == b
    assert out.coords != b.coords  # M(x, 2) = (x^2 - x)/2 under Psi = id, 0 under Psi^2 x = x^2
