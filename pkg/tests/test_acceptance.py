"""Acceptance criteria 1-12.

Every check is exact (tolerance 0, rational arithmetic); the only float is the
wall-clock bound.  Each test prints one line

    [criterion N] PASS|FAIL  <what>  exact  <elapsed>s < <bound>s

Criterion 9 is split: 9a (omega o eta = eta o omega = id) and 9b
(omega o Log = Log o omega).  9b is false in general (see the counterexample
in test_gradedlog) and is kept as a faithful check, so it fails.
"""

import random
import time
from fractions import Fraction
from itertools import product
from math import gcd, lcm

from wittlab import gradedlog as gl
from wittlab import replicable as rp
from wittlab import symfun as sf
from wittlab.coeff import FreeLambda, Integers, Rationals
from wittlab.lambda1 import Series1
from wittlab.necklace import NecklaceVector, m_value, m_vector, nr_ghost, s_tilde, tau, tau_inverse
from wittlab.witt import WittVector

ZZ = Integers()
SEED = 20261015


class Criterion:
    def __init__(self, capsys, label, what, bound):
        self.capsys, self.label, self.what, self.bound = capsys, label, what, bound
        self.failures = []

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def check(self, ok, detail):
        if not ok:
            self.failures.append(detail)

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.t0
        if exc_type is not None:
            self.failures.append(f"{exc_type.__name__}: {exc}")
        in_time = elapsed < self.bound
        ok = not self.failures and in_time
        note = "" if not self.failures else f"  first failure: {self.failures[0]}"
        with self.capsys.disabled():
            print(f"\n[criterion {self.label}] {'PASS' if ok else 'FAIL'}  {self.what}  exact  "
                  f"{elapsed:.2f}s < {self.bound:.0f}s{'' if in_time else ' (too slow)'}{note}")
        assert not self.failures, self.failures[:3]
        assert in_time, f"{elapsed:.2f}s exceeds {self.bound}s"
        return False


def int_witt(rng, N, size=5):
    return WittVector(ZZ, tuple(rng.randint(-size, size) for _ in range(N)))


def free_witt(R, rng, N):
    return WittVector(R, tuple(R.random_element(rng) for _ in range(N)))


def test_criterion_01_ghost_homomorphism(capsys):
    rng = random.Random(SEED + 1)
    with Criterion(capsys, "1", "ghost map respects +, -, * on 200 integer pairs, N=16", 5) as c:
        for i in range(200):
            x, y = int_witt(rng, 16), int_witt(rng, 16)
            gx, gy = x.ghost(), y.ghost()
            c.check((x + y).ghost() == tuple(a + b for a, b in zip(gx, gy)), f"sum {i}")
            c.check((x - y).ghost() == tuple(a - b for a, b in zip(gx, gy)), f"difference {i}")
            c.check((x * y).ghost() == tuple(a * b for a, b in zip(gx, gy)), f"product {i}")


def test_criterion_02_big_diagram(capsys):
    rng = random.Random(SEED + 2)
    N = 12
    with Criterion(capsys, "2", "s~ tau = E, phi~ tau = ghost, dlog s~ = phi~ "
                   "(100 over Z, 100 over FreeLambda(12)), N=12", 30) as c:
        for ring in (ZZ, FreeLambda(12)):
            for i in range(100):
                x = int_witt(rng, N) if ring is ZZ else free_witt(ring, rng, N)
                b = tau(x)
                s = s_tilde(b)
                phi = nr_ghost(b)
                c.check(s == Series1.from_witt(x), f"{ring} sample {i}: s~ tau != E")
                c.check(phi == x.ghost(), f"{ring} sample {i}: phi~ tau != ghost")
                c.check(s.dlog() == phi, f"{ring} sample {i}: dlog s~ != phi~")


def test_criterion_03_teichmuller_isomorphism(capsys):
    rng = random.Random(SEED + 3)
    with Criterion(capsys, "3", "tau additive, multiplicative, bijective on 100 integer vectors, N=12",
                   30) as c:
        for i in range(100):
            x, y = int_witt(rng, 12), int_witt(rng, 12)
            tx, ty = tau(x), tau(y)
            c.check(tau(x + y) == tx + ty, f"additivity {i}")
            c.check(tau(x * y) == tx * ty, f"multiplicativity {i}")
            c.check(tau_inverse(tx) == x, f"tau^-1 tau {i}")
            b = NecklaceVector(ZZ, tuple(rng.randint(-5, 5) for _ in range(12)))
            c.check(tau(tau_inverse(b)) == b, f"tau tau^-1 {i}")


def brute_primitive_necklaces(q, k):
    seen = set()
    count = 0
    for w in product(range(q), repeat=k):
        if w in seen:
            continue
        rots = {w[i:] + w[:i] for i in range(k)}
        seen |= rots
        count += len(rots) == k
    return count


def test_criterion_04_necklace_oracle(capsys):
    with Criterion(capsys, "4", "M(X,k) = aperiodic rotation classes, |X| <= 3, k <= 10; M(2,6) = 9",
                   10) as c:
        c.check(m_value(ZZ, 2, 6) == 9, "M(2,6)")
        for q in (1, 2, 3):
            for k in range(1, 11):
                want = brute_primitive_necklaces(q, k)
                c.check(m_value(ZZ, q, k) == want, f"M({q},{k}) != {want}")


def test_criterion_05_verschiebung_frobenius(capsys):
    R = FreeLambda(12)
    N = 12
    rng = random.Random(SEED + 5)

    def scaled(b, k):
        return tuple(x * k for x in b.coords)

    with Criterion(capsys, "5", "V/F identities (a)-(f), r,s <= 4, FreeLambda(12), N=12, 5 samples",
                   30) as c:
        for trial in range(5):
            b = NecklaceVector(R, tuple(R.random_element(rng) for _ in range(N)))
            x = R.random_element(rng)
            y = R.random_element(rng)
            Mx, My = m_vector(R, x, N), m_vector(R, y, N)
            for r in range(1, 5):
                c.check(Mx.frobenius(r) == m_vector(R, R.power(x, r), N // r), f"(e) r={r}")
                c.check(b.verschiebung(r).frobenius(r).coords == scaled(b, r)[: N // r], f"(c) r={r}")
                for s in range(1, 5):
                    g, l = gcd(r, s), lcm(r, s)
                    c.check(b.verschiebung(s).verschiebung(r) == b.verschiebung(r * s), f"(a) {r},{s}")
                    if r * s <= N:
                        c.check(b.frobenius(s).frobenius(r) == b.frobenius(r * s), f"(b) {r},{s}")
                    # (d) with exponents a^{s/(r,s)} b^{r/(r,s)}, the ones the ghost map confirms
                    lhs = Mx.verschiebung(r) * My.verschiebung(s)
                    rhs = m_vector(R, R.power(x, s // g) * R.power(y, r // g), N).verschiebung(l)
                    c.check(lhs.coords == scaled(rhs, g), f"(d) {r},{s}")
                    lhs = b.verschiebung(s).frobenius(r)
                    rhs = b.frobenius(l // s).verschiebung(l // r)
                    c.check(lhs.coords == scaled(rhs, g)[: lhs.N], f"(f) {r},{s}")


def test_criterion_06_plethysm(capsys):
    with Criterion(capsys, "6", "H o L, H o L~, E o L, E o L~, A (*) B = A to degree 10", 60) as c:
        R = FreeLambda(10)
        p1, p2 = R.p(1), R.p(2)

        def geo(z):
            return sum((z ** k for k in range(11)), R.zero())

        H, L, Lt = sf.h_series(R), sf.l_series(R), sf.ltilde_series(R)
        E = sf.e_series_signed(R)  # exp(sum (-1)^n p_n / n)
        c.check(sf.plethysm(H, L) == geo(p1), "H o L")
        c.check(sf.plethysm(H, Lt) == geo(-p1), "H o L~")
        c.check(sf.plethysm(E, L) == (1 - p1) * geo(p2), "E o L")
        c.check(sf.plethysm(E, Lt) == (1 + p1) * geo(-p2), "E o L~")
        c.check(sf.plethysm(H, sf.b_series(R)) == sf.a_series(R), "A (*) B, d_n = p1^n")
        rng = random.Random(SEED + 6)
        for trial in range(2):
            fam = {}
            for n in range(1, 11):
                f = R.zero()
                for _ in range(2):
                    mono, left = [0] * 10, n
                    while left:
                        k = rng.randint(1, left)
                        mono[k - 1] += 1
                        left -= k
                    f = f + R.ctx.monomial(mono, rng.randint(-3, 3))
                fam[n] = f
            c.check(sf.plethysm(H, sf.b_series(R, fam.get)) == sf.a_series(R, fam.get),
                    f"A (*) B, random family {trial}")


def _series_product(R, factors, N):
    f = [R.one()] + [R.zero()] * N
    for n, v in enumerate(factors, start=1):
        for k in range(n, N + 1):
            f[k] = f[k] + v * f[k - n]
    return f


def _series_exp(R, g, N):
    f = [R.one()] + [R.zero()] * N
    for n in range(1, N + 1):
        acc = R.zero()
        for k in range(1, n + 1):
            acc = acc + g[k - 1] * f[n - k] * k
        f[n] = acc * Fraction(1, n)
    return f


def test_criterion_07_supersymmetric(capsys):
    N = 8
    with Criterion(capsys, "7", "six families supersymmetric (a,b <= 3, n <= 6), "
                   "generating identities to degree 8", 60) as c:
        for a in range(4):
            for b in range(4):
                if a + b == 0:
                    continue
                R = sf.super_ring(a, b)
                fams = sf.supersym_generators(a, b, N)
                for name in ("sigma", "h", "e", "q", "t", "l"):
                    for n, v in enumerate(fams[name][:6], start=1):
                        c.check(sf.is_supersymmetric(v, a, b), f"{name}^({n}) for a={a}, b={b}")
                sigma = fams["sigma"]
                h = [R.one()] + fams["h"]
                e = [R.one()] + fams["e"]
                c.check(_series_product(R, fams["q"], N) == h, f"h = prod 1/(1-q t^n), {a},{b}")
                c.check(_series_exp(R, [s * Fraction(1, n) for n, s in enumerate(sigma, 1)], N) == h,
                        f"h = exp, {a},{b}")
                c.check(_series_product(R, fams["t"], N) == e, f"e = prod 1/(1-t t^n), {a},{b}")
                c.check(_series_exp(R, [s * Fraction((-1) ** (n - 1), n)
                                        for n, s in enumerate(sigma, 1)], N) == e,
                        f"e = exp, {a},{b}")


def lyndon_counts(rank, cap):
    counts: dict = {}
    for n in range(1, cap + 1):
        for w in product(range(rank), repeat=n):
            if all(w < w[i:] + w[:i] for i in range(1, n)):
                key = tuple(w.count(i) for i in range(rank))
                counts[key] = counts.get(key, 0) + 1
    return counts


def test_criterion_08_free_lie(capsys):
    with Criterion(capsys, "8", "free Lie dims = Lyndon counts (<= 3 letters, degree <= 8); "
                   "one odd generator gives (1,1,0,...)", 30) as c:
        for rank in (1, 2, 3):
            V = gl.GradedSeries(rank, 8, Rationals(),
                                {(tuple(int(i == j) for j in range(rank)), 0): 1 for i in range(rank)})
            L = gl.free_lie_dims(V)
            want = lyndon_counts(rank, 8)
            for alpha, a in V.indices():
                c.check(L[(alpha, a)] == (want.get(alpha, 0) if a == 0 else 0), f"rank {rank} {alpha},{a}")
        V = gl.GradedSeries(1, 8, Rationals(), {((1,), 1): -1})
        dims = gl.dims_from_signed(gl.free_lie_dims(V))
        by_degree = [(int(dims.get(((n,), 0), 0)), int(dims.get(((n,), 1), 0))) for n in range(1, 9)]
        c.check(by_degree == [(0, 1), (1, 0)] + [(0, 0)] * 6, f"odd generator dims {by_degree}")
        # PBW: prod (1 + t^n)^{odd} / (1 - t^n)^{even} = dim T(V) = 1/(1 - t)
        series = [1] + [0] * 8
        for n, (d0, d1) in enumerate(by_degree, start=1):
            for _ in range(d0):
                for k in range(n, 9):
                    series[k] += series[k - n]
            for _ in range(d1):
                for k in range(8, n - 1, -1):
                    series[k] += series[k - n]
        c.check(series == [1] * 9, f"PBW series {series}")


def _random_graded(rank, cap, rng, density):
    terms = {}
    for idx in gl.all_indices(rank, cap):
        if rng.random() < density:
            terms[idx] = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
    return gl.GradedSeries(rank, cap, Rationals(), terms)


def test_criterion_09a_omega_eta_inverse(capsys):
    rng = random.Random(SEED + 9)
    with Criterion(capsys, "9a", "omega o eta = eta o omega = id, cap 10, rank <= 2", 30) as c:
        for rank in (1, 2):
            for i in range(10):
                f = _random_graded(rank, 10, rng, 0.4)
                c.check(gl.omega(gl.eta(f)) == f, f"omega eta, rank {rank}, sample {i}")
                c.check(gl.eta(gl.omega(f)) == f, f"eta omega, rank {rank}, sample {i}")


def test_criterion_09b_omega_commutes_with_log(capsys):
    rng = random.Random(SEED + 90)
    with Criterion(capsys, "9b", "omega o Log = Log o omega, cap 10, rank <= 2", 30) as c:
        samples = [gl.GradedSeries(1, 10, Rationals(), {((1,), 0): 1})]
        samples += [_random_graded(rank, 10, rng, 0.3) for rank in (1, 2) for _ in range(5)]
        for i, f in enumerate(samples):
            lhs, rhs = gl.omega(gl.Log(f)), gl.Log(gl.omega(f))
            if lhs != rhs:
                idx = min((k for k in set(lhs.terms) | set(rhs.terms) if lhs[k] != rhs[k]),
                          key=lambda k: (gl.height(k[0]), k))
                c.check(False, f"sample {i} at {idx}: {lhs[idx]} vs {rhs[idx]}")


def test_criterion_10_denominator_round_trip(capsys):
    rng = random.Random(SEED + 10)
    with Criterion(capsys, "10", "closed formula -> denominator product = 1 - [H]; "
                   "solver = closed formula (rank <= 2, cap 8)", 60) as c:
        for rank in (1, 2):
            for i in range(4):
                H = _random_graded(rank, 8, rng, 0.25 if rank == 2 else 0.5)
                L = gl.closed_formula_series(H)
                c.check(gl.denominator_check(L, H).is_zero(), f"residual, rank {rank}, sample {i}")
                for variant in ("a", "b"):
                    solved = gl.recursive_solver(H, variant).as_series(H)
                    c.check(solved == L, f"solver {variant}, rank {rank}, sample {i}")


def test_criterion_11_moonshine(capsys):
    with Criterion(capsys, "11", "c(1) = 196884; J replicable for mn <= 24; F^(2) = F^(3) = J "
                   "to order 12; Norton (1), (2) to bidegree (6,6)", 120) as c:
        J = rp.j_oracle(108)
        c.check(J(1) == 196884, f"c(1) = {J(1)}")
        ok, viol = rp.is_replicable(J, 24)
        c.check(ok, f"violations {viol[:3]}")
        reps = rp.extract_replicates(J, 3, 12, check_order=24)
        c.check(reps[2] == J.f[:12], "F^(2)")
        c.check(reps[3] == J.f[:12], "F^(3)")
        c.check(bool(rp.norton1_check(J, 12)), "Norton (1)")
        c.check(bool(rp.norton2_check(J, 6, 6)), "Norton (2)")


def test_criterion_12_unconditional_norton(capsys):
    rng = random.Random(SEED + 12)
    with Criterion(capsys, "12", "H = W and Norton (1) to m+n <= 12, Faber residual in qQ[[q]] "
                   "for m <= 10, 50 random series", 60) as c:
        for i in range(50):
            F = rp.QSeries(tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(12)))
            c.check(bool(rp.h_equals_w_check(F, 12)), f"H = W, series {i}")
            c.check(bool(rp.norton1_check(F, 12)), f"Norton (1), series {i}")
            for m in range(1, 11):
                r = rp.faber_residual(F, m)
                c.check(all(r[e] == 0 for e in range(-m, 1)), f"residual X_{m}, series {i}")
