"""Ramanujan class invariants t(tau) for D = 11 mod 24.

For a reduced form Q the invariant is a fixed linear combination of the six
level-72 eta products R_i evaluated at tau_Q.  The combination is the third
row of A = A_2 A_3 B, where the A_n are images of SL2(Z/N(n)) elements under
the representation rho_k with rho(T) = S_0(k) and rho(S) = S_1(k).  All
matrix algebra is exact in Q(zeta_72).
"""
from dataclasses import dataclass
from functools import lru_cache

from mpmath import mp

from .cyclotomic import Cyclo, CycloMatrix6, ONE
from .errors import MatrixContract, UnsupportedK
from .forms import QuadraticForm
from .numerics import ApComplex, _run, _r_mpc

LEVEL = {2: 8, 3: 9}


def z(e):
    return Cyclo.zeta(e)


@lru_cache(maxsize=None)
def s_factor(k):
    """zeta^(6k) - zeta^(30k), which is +-sqrt(3) for k prime to 6."""
    return z(6 * k) - z(30 * k)


@lru_cache(maxsize=None)
def S0(k):
    k %= 72
    return CycloMatrix6.sparse({
        (0, 1): z(3 * k), (1, 2): z(3 * k), (2, 0): z(6 * k),
        (3, 4): z(-3 * k), (4, 5): z(-6 * k), (5, 3): z(-3 * k),
    })


@lru_cache(maxsize=None)
def S1(k):
    k %= 72
    s = s_factor(k)
    z3 = z(3 * k)
    return CycloMatrix6.sparse({
        (0, 0): ONE,
        (1, 3): (z3 * s).inverse(),
        (2, 4): z3 * s.inverse(),
        (3, 1): z3 * s,
        (4, 2): s * z(-3 * k),
        (5, 5): ONE,
    })


@lru_cache(maxsize=None)
def T_n(n, k):
    return S0(k) ** 9 if n == 2 else S0(k) ** -8


@lru_cache(maxsize=None)
def S_n(n, k):
    s0, s1 = S0(k), S1(k)
    if n == 2:
        return s0 ** -1 * s1 * s0 ** -10 * s1 * s0 ** -1 * s1 * s0 ** -18
    return s0 ** -1 * s1 * s0 ** 7 * s1 * s0 ** -1 * s1 * s0 ** 16


@lru_cache(maxsize=None)
def _T_pow(n, k, e):
    return T_n(n, k) ** (e % LEVEL[n])


@lru_cache(maxsize=None)
def _S_inv(n, k):
    return S_n(n, k) ** 3


@lru_cache(maxsize=None)
def B_matrix(k):
    k %= 72
    if k % 3 == 1:
        diag = [0, k - 1, 2 * k - 2, 2 * k - 2, k - 1, 3 * k - 3]
        return CycloMatrix6.sparse({(i, i): z(e) for i, e in enumerate(diag)})
    if k % 3 == 2:
        return CycloMatrix6.sparse({
            (0, 0): ONE, (1, 2): z(k - 2), (2, 1): z(2 * k - 1),
            (3, 4): z(2 * k - 1), (4, 3): z(k - 2), (5, 5): z(3 * k - 3),
        })
    raise UnsupportedK(f"k={k} is divisible by 3")


def build_Ln(form, n):
    a, b, c = form
    if a % n:
        return ((a, (b - 1) // 2), (0, 1))
    if c % n:
        return (((-b - 1) // 2, -c), (1, 0))
    return (((-b - 1) // 2 - a, (1 - b) // 2 - c), (1, -1))


def _det(m):
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def k_value(form):
    return (9 * _det(build_Ln(form, 2)) - 8 * _det(build_Ln(form, 3))) % 72


def A_n(form, n, k):
    """rho_k of the n-primary part of L_n * diag(1, 1/k).

    The word in S_n, T_n is an exact factorisation of that SL2(Z/N) element:
      n does not divide a:           S^-1 T^u S T^a S T^(u + x u^2), u = 1/a
      n | a, n does not divide c:    T^y S
      n | a and n | c:               T^(y - a) S T^(-1/(a + b + c))
    with x = (b - 1)/2 and y = (-b - 1)/2.
    """
    a, b, c = form
    N = LEVEL[n]
    S = S_n(n, k)
    T = lambda e: _T_pow(n, k, e)
    x, y = (b - 1) // 2, (-b - 1) // 2
    if a % n:
        u = pow(a, -1, N)
        return _S_inv(n, k) * T(u) * S * T(a) * S * T(u + x * u * u)
    if c % n:
        return T(y) * S
    return T(y - a) * S * T(-pow(a + b + c, -1, N))


@dataclass(frozen=True)
class RamanujanFormData:
    form: QuadraticForm
    k: int
    detL2: int
    detL3: int
    A: CycloMatrix6
    selected_index: int
    a2i: Cyclo

    @property
    def multiplier(self):
        """Exact factor in front of R_i: (zeta^(6k) - zeta^(30k)) * a_{2i}."""
        return s_factor(self.k) * self.a2i


def ramanujan_form_data(form):
    d2 = _det(build_Ln(form, 2))
    d3 = _det(build_Ln(form, 3))
    k = (9 * d2 - 8 * d3) % 72
    if k % 3 == 0:
        raise UnsupportedK(f"k={k} divisible by 3 for form {tuple(form)}")
    A = A_n(form, 2, k) * A_n(form, 3, k) * B_matrix(k)
    for i in range(6):
        if len(A.row_support(i)) != 1:
            raise MatrixContract(f"row {i} of A for form {tuple(form)} has "
                                 f"{len(A.row_support(i))} nonzero entries")
    idx = A.row_support(2)[0]
    return RamanujanFormData(form, k, d2, d3, A, idx, A[2, idx])


def ramanujan_invariant(form, prec, data=None):
    """t(tau_Q) for a reduced form Q of discriminant -D, D = 11 mod 24."""
    data = data or ramanujan_form_data(form)
    mult = data.multiplier
    tau = form.point()

    def f():
        return mult.to_mpc() * _r_mpc(data.selected_index, tau)
    return _run(prec, f)
