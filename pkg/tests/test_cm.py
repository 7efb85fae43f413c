from math import isqrt

import pytest
from hypothesis import given, settings, strategies as st

from cmpoly.classpoly import hilbert_poly, ramanujan_poly
from cmpoly.cm import (INFINITY, CmSolution, CurveParams, cornacchia, curves_from_j,
                       find_candidate, generate_prime_order_curve, on_curve, point_add,
                       point_neg, random_point, scalar_mul, select_curve, smallest_nonresidue,
                       verify_curve)
from cmpoly.errors import (DegenerateJ, Inconclusive, InvalidDiscriminant, SearchExhausted,
                           UnsupportedFamily)
from cmpoly.finitefield import is_prime, poly_roots_mod_p


def brute_points(E):
    p = E.p
    pts = [INFINITY]
    for x in range(p):
        for y in range(p):
            if (y * y - x ** 3 - E.a * x - E.b) % p == 0:
                pts.append((x, y))
    return pts


def brute_cornacchia(D, p):
    for v in range(1, isqrt(4 * p // D) + 1):
        u2 = 4 * p - D * v * v
        u = isqrt(u2)
        if u > 0 and u * u == u2:
            return u, v
    return None


def test_cornacchia_examples():
    assert cornacchia(11, 5) == CmSolution(5, 3, 1, 11)
    assert cornacchia(11, 7) is None
    assert cornacchia(35, 11) == CmSolution(11, 3, 1, 35)


@pytest.mark.parametrize("D", [3, 7, 11, 19, 35, 43, 59, 67, 299, 515, 1019])
def test_cornacchia_exhaustive(D):
    for p in range(5, 4000):
        if not is_prime(p):
            continue
        got = cornacchia(D, p)
        expect = brute_cornacchia(D, p)
        if expect is None:
            assert got is None
        else:
            assert got is not None
            assert 4 * p == got.u ** 2 + D * got.v ** 2
            assert (got.u, got.v) == expect


def test_find_candidate_small():
    sol, m = find_candidate(11, 3, seed=0)
    assert (sol.p, sol.u, sol.v, m) == (5, 3, 1, 3)


def test_find_candidate_skips_composite_orders():
    sol = cornacchia(35, 11)
    assert not is_prime(11 + 1 - sol.u) and not is_prime(11 + 1 + sol.u)
    # the only 4-bit primes are 11 and 13; neither gives a prime order
    with pytest.raises(SearchExhausted):
        find_candidate(35, 4, seed=0)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([11, 19, 35, 43, 59, 83, 107, 299]), st.integers(8, 64),
       st.integers(0, 10 ** 6))
def test_find_candidate_postconditions(D, bits, seed):
    try:
        sol, m = find_candidate(D, bits, seed=seed)
    except SearchExhausted:
        return
    assert sol.p.bit_length() == bits and is_prime(sol.p)
    assert 4 * sol.p == sol.u ** 2 + D * sol.v ** 2
    assert sol.u % 2 == 1 and sol.v % 2 == 1
    assert is_prime(m) and m in (sol.p + 1 - sol.u, sol.p + 1 + sol.u)
    if is_prime(sol.p + 1 - sol.u):
        assert m == sol.p + 1 - sol.u


def test_find_candidate_rejects_bad_D():
    with pytest.raises(InvalidDiscriminant):
        find_candidate(7, 16)


def test_curves_from_j_example():
    E1, E2 = curves_from_j(2, 5)
    assert (E1.a, E1.b) == (1, 4)
    assert (E2.a, E2.b) == (4, 2)
    assert smallest_nonresidue(5) == 2
    with pytest.raises(DegenerateJ):
        curves_from_j(0, 5)
    with pytest.raises(DegenerateJ):
        curves_from_j(1728, 101)


@pytest.mark.parametrize("p", [5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47])
def test_twist_orders_sum(p):
    for j in range(1, p):
        if j == 1728 % p:
            continue
        E1, E2 = curves_from_j(j, p)
        assert (4 * E1.a ** 3 + 27 * E1.b ** 2) % p
        n1, n2 = len(brute_points(E1)), len(brute_points(E2))
        assert n1 + n2 == 2 * p + 2


def test_select_curve_examples():
    E1, E2 = curves_from_j(2, 5)
    assert len(brute_points(E1)) == 9 and len(brute_points(E2)) == 3
    chosen = select_curve(E1, E2, 3, seed=0)
    assert (chosen.a, chosen.b, chosen.m) == (4, 2, 3)
    chosen = select_curve(E1, E2, 9, seed=0)
    assert (chosen.a, chosen.b, chosen.m) == (1, 4, 9)
    for s in range(10):
        P = random_point(chosen, s)
        assert scalar_mul(9, P, chosen) is INFINITY


def test_select_curve_inconclusive():
    E1, E2 = curves_from_j(2, 5)
    # 18 kills every point on both curves
    with pytest.raises(Inconclusive):
        select_curve(E1, E2, 18, trials=8)
    with pytest.raises(Inconclusive):
        select_curve(E1, E2, 3, trials=0)


def test_group_law_small():
    E = CurveParams(5, 4, 2)
    P = (3, 1)
    assert on_curve(P, E)
    assert point_add(P, INFINITY, E) == P
    assert point_add(INFINITY, P, E) == P
    assert point_add(P, point_neg(P, E), E) is INFINITY
    assert point_neg(P, E) == (3, 4)
    assert scalar_mul(3, P, E) is INFINITY
    assert scalar_mul(0, P, E) is INFINITY
    assert scalar_mul(-1, P, E) == point_neg(P, E)


@pytest.mark.parametrize("p,a,b", [(101, 2, 3), (103, 7, 11), (211, 1, 1)])
def test_group_law_properties(p, a, b):
    E = CurveParams(p, a, b)
    pts = brute_points(E)
    n = len(pts)
    sample = pts[:: max(1, n // 12)]
    for P in sample:
        assert scalar_mul(n, P, E) is INFINITY
        for Q in sample:
            R = point_add(P, Q, E)
            assert on_curve(R, E)
            assert R == point_add(Q, P, E)
            for S in sample[:4]:
                assert point_add(point_add(P, Q, E), S, E) == point_add(P, point_add(Q, S, E), E)


def test_random_point_contract():
    E = CurveParams(103, 7, 11)
    for s in range(20):
        x, y = random_point(E, s)
        assert on_curve((x, y), E) and y <= E.p - y
    assert random_point(E, 4) == random_point(E, 4)


def test_verify_curve():
    E = CurveParams(5, 4, 2, m=3, D=11, j=2)
    assert verify_curve(E)
    assert not verify_curve(CurveParams(5, 4, 2, m=5, D=11, j=2))
    assert not verify_curve(CurveParams(5, 0, 0, m=3))
    assert not verify_curve(CurveParams(101, 2, 3, m=None))
    assert not verify_curve(CurveParams(101, 2, 3, m=1009))     # outside Hasse


def test_generate_desk_curve():
    E = generate_prime_order_curve(11, 3, "ramanujan", seed=1)
    assert (E.p, E.a, E.b, E.m, E.D) == (5, 4, 2, 3, 11)
    assert len(brute_points(E)) == 3


@pytest.mark.parametrize("family", ["ramanujan", "hilbert", "weber", "eta-13"])
def test_generate_families(family):
    D = 299
    E = generate_prime_order_curve(D, 40, family, seed=3)
    assert verify_curve(E, 20, 0)
    assert is_prime(E.m) and is_prime(E.p)
    assert abs(E.p + 1 - E.m) <= 2 * isqrt(E.p) + 2
    assert E.j in poly_roots_mod_p(hilbert_poly(D), E.p)


def test_generate_is_deterministic():
    a = generate_prime_order_curve(59, 64, "ramanujan", seed=9)
    b = generate_prime_order_curve(59, 64, "ramanujan", seed=9)
    assert a == b
    assert verify_curve(a, 20, 1)


def test_generate_rejections():
    with pytest.raises(InvalidDiscriminant):
        generate_prime_order_curve(14, 16)
    with pytest.raises(InvalidDiscriminant):
        generate_prime_order_curve(19, 16, "ramanujan")
    with pytest.raises(UnsupportedFamily):
        generate_prime_order_curve(35, 16, "eta-5-7")


def test_generate_accepts_prebuilt_poly():
    T = ramanujan_poly(35)
    E = generate_prime_order_curve(35, 32, "ramanujan", seed=2, poly=T)
    assert verify_curve(E)
