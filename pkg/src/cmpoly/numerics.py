"""Arbitrary-precision evaluation of eta, the Weber functions and the eta quotients.

All functions take a point of the upper half plane (a HalfPlanePoint or anything
mpmath.mpc accepts) and a precision in bits, evaluate with GUARD extra bits and
return an ApComplex rounded to the requested precision.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, log2, pi, sqrt

import mpmath
from mpmath import mp, mpc, mpf

from .errors import NonConvergent, UnsupportedPair
from .family import DOUBLE_PAIRS, SINGLE_LEVELS

GUARD = 64
MIN_PREC = 64
MAX_TERMS = 1_000_000


class ApComplex:
    """A complex number tagged with the precision (bits) it is good to."""
    __slots__ = ("value", "prec")

    def __init__(self, value, prec):
        if prec < MIN_PREC:
            raise ValueError(f"precision {prec} below {MIN_PREC} bits")
        self.value = mpc(value)
        self.prec = int(prec)

    @property
    def re(self):
        return self.value.real

    @property
    def im(self):
        return self.value.imag

    def _binary(self, other, op):
        if isinstance(other, ApComplex):
            prec = min(self.prec, other.prec)
            other = other.value
        else:
            prec = self.prec
        with mp.workprec(prec):
            return ApComplex(op(self.value, other), prec)

    def __add__(self, other):
        return self._binary(other, lambda x, y: x + y)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binary(other, lambda x, y: x - y)

    def __rsub__(self, other):
        return self._binary(other, lambda x, y: y - x)

    def __mul__(self, other):
        return self._binary(other, lambda x, y: x * y)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._binary(other, lambda x, y: x / y)

    def __rtruediv__(self, other):
        return self._binary(other, lambda x, y: y / x)

    def __pow__(self, n):
        with mp.workprec(self.prec):
            return ApComplex(self.value ** n, self.prec)

    def __neg__(self):
        return ApComplex(-self.value, self.prec)

    def __abs__(self):
        with mp.workprec(self.prec):
            return abs(self.value)

    def conjugate(self):
        return ApComplex(self.value.conjugate(), self.prec)

    def __complex__(self):
        return complex(self.value)

    def __repr__(self):
        return f"ApComplex({mpmath.nstr(self.value, 20)}, prec={self.prec})"


@dataclass(frozen=True)
class HalfPlanePoint:
    """tau = re + i * coeff * sqrt(rad) with exact rational data.

    Keeping CM points exact lets every evaluation pick its own precision and
    makes the affine maps tau/3, tau + 1/3, 3*tau used by the invariants exact.
    """
    re: Fraction
    coeff: Fraction
    rad: int = 1

    def __post_init__(self):
        if self.coeff <= 0 or self.rad <= 0:
            raise ValueError("point must lie in the upper half plane")

    def __add__(self, t):
        return HalfPlanePoint(self.re + Fraction(t), self.coeff, self.rad)

    def __mul__(self, r):
        r = Fraction(r)
        return HalfPlanePoint(self.re * r, self.coeff * r, self.rad)

    __rmul__ = __mul__

    def __truediv__(self, r):
        return self * (1 / Fraction(r))

    def im_float(self):
        return float(self.coeff) * sqrt(self.rad)

    def to_mpc(self):
        """Value at the current mpmath precision."""
        re = self.re
        return mpc(mpf(re.numerator) / re.denominator,
                   mpf(self.coeff.numerator) / self.coeff.denominator * mpmath.sqrt(self.rad))


class RootOfUnity72:
    """zeta_72^e, zeta_72 = exp(2 pi i / 72), with exact exponent arithmetic."""
    __slots__ = ("exponent",)

    def __init__(self, exponent):
        self.exponent = exponent % 72

    def __mul__(self, other):
        return RootOfUnity72(self.exponent + other.exponent)

    def __pow__(self, n):
        return RootOfUnity72(self.exponent * n)

    def inverse(self):
        return RootOfUnity72(-self.exponent)

    def __eq__(self, other):
        return isinstance(other, RootOfUnity72) and self.exponent == other.exponent

    def __hash__(self):
        return hash(("zeta72", self.exponent))

    def to_mpc(self):
        return mpmath.expjpi(mpf(self.exponent) / 36)

    def __repr__(self):
        return f"zeta72^{self.exponent}"


def _as_mpc(tau):
    if isinstance(tau, HalfPlanePoint):
        return tau.to_mpc()
    z = mpc(tau)
    if z.imag <= 0:
        raise ValueError("point must lie in the upper half plane")
    return z


def _im_float(tau):
    if isinstance(tau, HalfPlanePoint):
        return tau.im_float()
    return float(mpc(tau).imag)


def _terms_needed(tau, bits, per_term):
    """Smallest n with (2 pi Im tau log2 e) * per_term(n) >= bits, capped."""
    y = _im_float(tau)
    if y <= 0:
        raise ValueError("point must lie in the upper half plane")
    decay = 2 * pi * y / 0.6931471805599453  # bits lost per unit q-exponent
    # per_term is increasing; solve by doubling then bisection
    hi = 1
    while decay * per_term(hi) < bits:
        hi *= 2
        if hi > 4 * MAX_TERMS:
            break
    if hi > MAX_TERMS and decay * per_term(MAX_TERMS) < bits:
        raise NonConvergent(f"Im(tau)={y:.3g} needs more than {MAX_TERMS} terms")
    lo = hi // 2
    while lo + 1 < hi:
        mid = (lo + hi) // 2
        if decay * per_term(mid) >= bits:
            hi = mid
        else:
            lo = mid
    return hi


def _eta_mpc(tau):
    """Pentagonal-number series for eta at the current precision."""
    bits = mp.prec
    nmax = _terms_needed(tau, bits, lambda n: n * (3 * n - 1) / 2)
    z = _as_mpc(tau)
    q = mpmath.expjpi(2 * z)
    q3 = q * q * q
    qn = q          # q^n
    step = q ** 4   # q^(3n+1), ratio between consecutive q^(n(3n-1)/2)
    pent = q        # q^(n(3n-1)/2) for n = 1
    s = mpc(1)
    sign = -1
    for _ in range(nmax):
        s += sign * pent * (1 + qn)
        pent *= step
        step *= q3
        qn *= q
        sign = -sign
    return mpmath.expjpi(z / 12) * s


def _run(prec, fn):
    if prec < MIN_PREC:
        raise ValueError(f"precision {prec} below {MIN_PREC} bits")
    with mp.workprec(prec + GUARD):
        v = fn()
    with mp.workprec(prec):
        return ApComplex(+v, prec)


def eta(tau, prec):
    """Dedekind eta function."""
    return _run(prec, lambda: _eta_mpc(tau))


def _half_product(tau, sign, half):
    """prod over r >= 1 of (1 + sign * q^(r - 1/2)) or (1 + sign * q^r)."""
    bits = mp.prec
    shift = 0.5 if half else 0.0
    nmax = _terms_needed(tau, bits, lambda n: n - shift)
    z = _as_mpc(tau)
    q = mpmath.expjpi(2 * z)
    t = mpmath.expjpi(z) if half else q
    p = mpc(1)
    for _ in range(nmax):
        p *= 1 + sign * t
        t *= q
    return p


def weber_f(tau, prec):
    def f():
        z = _as_mpc(tau)
        return mpmath.expjpi(-z / 24) * _half_product(tau, 1, True)
    return _run(prec, f)


def weber_f1(tau, prec):
    def f():
        z = _as_mpc(tau)
        return mpmath.expjpi(-z / 24) * _half_product(tau, -1, True)
    return _run(prec, f)


def weber_f2(tau, prec):
    def f():
        z = _as_mpc(tau)
        return mpmath.sqrt(2) * mpmath.expjpi(z / 12) * _half_product(tau, 1, False)
    return _run(prec, f)


def _shift(tau, t):
    if isinstance(tau, HalfPlanePoint):
        return tau + t
    return _as_mpc(tau) + mpf(t.numerator) / t.denominator


def _scale(tau, r):
    if isinstance(tau, HalfPlanePoint):
        return tau * r
    return _as_mpc(tau) * (mpf(r.numerator) / r.denominator)


_THIRD = Fraction(1, 3)


def _r_mpc(i, tau):
    e = lambda t: _eta_mpc(t)
    d = e(tau) ** 2
    third = _scale(tau, _THIRD)
    if i == 0:
        num = e(_scale(tau, 3)) * e(third)
    elif i == 1:
        num = e(_scale(tau, 3)) * e(_shift(third, _THIRD))
    elif i == 2:
        num = e(_scale(tau, 3)) * e(_shift(third, 2 * _THIRD))
    elif i == 3:
        num = e(third) * e(_shift(third, 2 * _THIRD))
    elif i == 4:
        num = e(third) * e(_shift(third, _THIRD))
    elif i == 5:
        num = e(_shift(third, 2 * _THIRD)) * e(_shift(third, _THIRD))
    else:
        raise ValueError(f"index {i} not in 0..5")
    return num / d


def r_func(i, tau, prec):
    """The level-72 eta products R_0 .. R_5."""
    return _run(prec, lambda: _r_mpc(i, tau))


def _m_single(l, tau):
    return _eta_mpc(_scale(tau, Fraction(1, l))) / _eta_mpc(tau)


def _m_double(p1, p2, tau):
    num = _eta_mpc(_scale(tau, Fraction(1, p1))) * _eta_mpc(_scale(tau, Fraction(1, p2)))
    return num / (_eta_mpc(_scale(tau, Fraction(1, p1 * p2))) * _eta_mpc(tau))


def eta_quotient_single(l, tau, prec):
    """m_l(tau) = eta(tau/l) / eta(tau)."""
    if l not in SINGLE_LEVELS:
        raise ValueError(f"l={l} not in {SINGLE_LEVELS}")
    return _run(prec, lambda: _m_single(l, tau))


def eta_quotient_double(p1, p2, tau, prec):
    """m_{p1,p2}(tau) = eta(tau/p1) eta(tau/p2) / (eta(tau/(p1 p2)) eta(tau))."""
    if (p1, p2) not in DOUBLE_PAIRS:
        raise UnsupportedPair(f"pair ({p1}, {p2}) not in {DOUBLE_PAIRS}")
    return _run(prec, lambda: _m_double(p1, p2, tau))
