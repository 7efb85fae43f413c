from math import gcd

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from cmpoly.errors import InertPrime, InvalidDiscriminant
from cmpoly.forms import (QuadraticForm, class_number, is_squarefree, kronecker, n_system,
                          principal_form, reduce_form, reduced_forms, weber_forms)


def brute_reduced(D):
    out = []
    for a in range(1, D + 1):
        if 3 * a * a > D:
            break
        for b in range(-a + 1, a + 1):
            if (b * b + D) % (4 * a):
                continue
            c = (b * b + D) // (4 * a)
            if c < a or gcd(gcd(a, b), c) != 1:
                continue
            if (abs(b) == a or a == c) and b < 0:
                continue
            out.append((a, b, c))
    return sorted(out)


def test_small_examples():
    assert [tuple(f) for f in reduced_forms(11)] == [(1, 1, 3)]
    assert [tuple(f) for f in reduced_forms(23)] == [(1, 1, 6), (2, -1, 3), (2, 1, 3)]
    assert len(reduced_forms(299)) == 8
    assert class_number(11) == 1
    assert class_number(35) == 2
    assert class_number(107) == 3


@pytest.mark.parametrize("D", [3, 7, 11, 15, 23, 35, 47, 71, 299, 1155, 4007])
def test_matches_brute_force(D):
    assert [tuple(f) for f in reduced_forms(D)] == brute_reduced(D)


@pytest.mark.parametrize("D", [3, 7, 11, 19, 23, 43, 67, 163, 299, 1003])
def test_class_number_formula(D):
    # h(-D) = -(1/D) sum n (-D/n) for fundamental discriminants -D < -4
    if D == 3:
        assert class_number(D) == 1
        return
    if not is_squarefree(D):
        pytest.skip("formula below is for fundamental discriminants")
    s = sum(kronecker(-D, n) * n for n in range(1, D))
    assert class_number(D) == -s // D


def test_invalid_discriminant():
    for D in (12, 4, 0, -3):
        with pytest.raises(InvalidDiscriminant):
            reduced_forms(D)
    with pytest.raises(InvalidDiscriminant):
        principal_form(13)


def test_principal_form():
    assert tuple(principal_form(11)) == (1, 1, 3)
    assert tuple(principal_form(35)) == (1, 1, 9)
    assert tuple(principal_form(299)) == (1, 1, 75)
    for D in (11, 35, 299, 4007):
        assert reduced_forms(D)[0] == principal_form(D)
    p = principal_form(11).point()
    assert p.re == -0.5 and p.coeff == 0.5 and p.rad == 11


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 3000))
def test_forms_invariants(n):
    D = 4 * n + 3
    forms = reduced_forms(D)
    assert len(set(forms)) == len(forms)
    for f in forms:
        assert f.b * f.b - 4 * f.a * f.c == -D
        assert f.is_reduced()
        assert reduce_form(*f) == f


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 2000), st.integers(-6, 6), st.integers(-6, 6), st.data())
def test_reduction_of_equivalent_forms(n, x, y, data):
    D = 4 * n + 3
    if gcd(x, y) != 1:
        return
    f = data.draw(st.sampled_from(reduced_forms(D)))
    # complete (x, y) to an SL2(Z) matrix [[x, r], [y, s]]
    s, t, g = sympy.gcdex(x, y)
    s, r = int(s * g), int(-t * g)
    assert x * s - r * y == 1
    a, b, c = f
    A = a * x * x + b * x * y + c * y * y
    B = 2 * a * x * r + b * (x * s + r * y) + 2 * c * y * s
    C = a * r * r + b * r * s + c * s * s
    assert B * B - 4 * A * C == -D
    assert reduce_form(A, B, C) == f


@settings(max_examples=200, deadline=None)
@given(st.integers(-10 ** 6, 10 ** 6), st.integers(1, 10 ** 4).map(lambda k: 2 * k + 1))
def test_kronecker_matches_jacobi_for_odd_n(a, n):
    assert kronecker(a, n) == sympy.jacobi_symbol(a % n, n)


def test_kronecker_examples():
    assert kronecker(-11, 3) == 1
    assert kronecker(-35, 5) == 0
    assert kronecker(-299, 13) == 0
    assert kronecker(-7, 2) == 1      # -7 = 1 mod 8
    assert kronecker(-3, 2) == -1     # -3 = 5 mod 8
    assert kronecker(-4, 2) == 0
    assert kronecker(5, -1) == 1 and kronecker(-5, -1) == -1


@pytest.mark.parametrize("D,N", [(299, 13), (299, 35), (299, 39), (11, 3), (35, 5), (35, 7)])
def test_n_system(D, N):
    system = n_system(D, N)
    forms = reduced_forms(D)
    assert len(system.forms) == len(forms)
    assert system.B0 % 2 == 1 and (system.B0 ** 2 + D) % (4 * N) == 0
    assert not [b for b in range(1, system.B0, 2) if (b * b + D) % (4 * N) == 0]
    for f, g in zip(forms, system.forms):
        assert g.b ** 2 - 4 * g.a * g.c == -D
        assert gcd(g.a, N) == 1
        assert (g.b - system.B0) % (2 * N) == 0
        assert g.c % N == 0
        assert reduce_form(*g) == f


def test_n_system_b0_is_smallest():
    system = n_system(299, 13)
    candidates = [b for b in range(1, 4 * 13, 2) if (b * b + 299) % 52 == 0]
    assert system.B0 == min(candidates) == 13


def test_n_system_inert():
    # -23 is not a square mod 5
    assert kronecker(-23, 5) == -1
    with pytest.raises(InertPrime):
        n_system(23, 5)


def test_weber_forms_count_is_three_h():
    for D in (11, 19, 35, 51, 123, 299, 1003):
        assert len(weber_forms(D)) == 3 * class_number(D)
        for a, b, c in weber_forms(D):
            assert b * b - a * c == -D
            assert gcd(gcd(a, 2 * b), c) == 1
            assert abs(2 * b) <= a <= c


def test_is_squarefree():
    assert is_squarefree(299) and is_squarefree(11)
    assert not is_squarefree(99) and not is_squarefree(12)
