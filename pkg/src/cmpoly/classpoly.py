"""Class polynomials: Hilbert, Weber, single and double eta quotients, Ramanujan."""
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

import mpmath
from mpmath import mp, mpc

from .errors import (InertPrime, InvalidDiscriminant, PrecisionExhausted, SplitPrime,
                     UnsupportedFamily)
from .family import HILBERT, RAMANUJAN, WEBER, Family, double_eta, single_eta
from .forms import (check_discriminant, is_squarefree, kronecker, n_system, prime_factors,
                    reduced_forms, weber_forms)
from .numerics import (GUARD, HalfPlanePoint, _eta_mpc, _half_product, _m_double, _m_single,
                       _r_mpc)
from .precision import working_precision
from .ramanujan import ramanujan_form_data

TOLERANCE = Fraction(1, 2 ** (GUARD // 2))
LADDER = 3


@dataclass(frozen=True)
class ClassPolynomial:
    family: Family
    D: int
    coeffs: tuple  # constant term first
    prec: int = field(default=None, compare=False)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self):
        return format_poly(self.coeffs)


def format_poly(coeffs, var="x"):
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == 1 else f"{mag}{mono}"
        if not terms:
            terms.append(body if c > 0 else "-" + body)
        else:
            terms.append(("+ " if c > 0 else "- ") + body)
    return " ".join(terms) if terms else "0"


def poly_from_roots(roots):
    """Coefficients (constant first) of prod (x - r) at the current precision."""
    c = [mpc(1)]
    for r in roots:
        nxt = [mpc(0)] * (len(c) + 1)
        for i, x in enumerate(c):
            nxt[i + 1] += x
            nxt[i] -= r * x
        c = nxt
    return c


def _exact(x):
    """Exact rational value of a binary float (mpf, float or int)."""
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        return Fraction(x)
    if not isinstance(x, mpmath.mpf):
        x = mpmath.mpf(x)  # a float or decimal string; mpf(mpf) would re-round
    if not mpmath.isfinite(x):
        raise PrecisionExhausted(float("inf"), hint="non-finite coefficient")
    sign, man, exp, _ = x._mpf_
    v = Fraction(int(man)) * Fraction(2) ** int(exp)
    return -v if sign else v


def round_to_integers(coeffs, tol=TOLERANCE):
    """Nearest integers to complex coefficients; PrecisionExhausted past tol.

    Works on the exact binary values, so the result does not depend on the
    ambient mpmath precision.
    """
    tol = tol if isinstance(tol, Fraction) else _exact(tol)
    if not 0 < tol < Fraction(1, 2):
        raise ValueError("tolerance must lie in (0, 1/2)")
    out = []
    worst = Fraction(0)
    for z in coeffs:
        re, im = (z.real, z.imag) if hasattr(z, "imag") else (z, 0)
        re, im = _exact(re), _exact(im)
        n = round(re)
        worst = max(worst, abs(re - n), abs(im))
        out.append(int(n))
    if worst > tol:
        raise PrecisionExhausted(float(worst), hint="doubling the working precision")
    return out


def magnitude_bits(roots):
    """log2 of prod(1 + |r|) + log2(degree + 1), a bound on the size of every
    partial product formed while expanding prod(x - r)."""
    bits = sum(float(mpmath.log(1 + abs(r), 2)) for r in roots)
    return bits + len(roots).bit_length()


def _construct(family, D, roots_at, prec=None):
    prec = prec or working_precision(D, family)
    err = None
    for _ in range(LADDER + 1):
        with mp.workprec(prec + GUARD):
            roots = roots_at(prec)
            # A coefficient larger than 2^prec has no fractional bits left, so a
            # zero rounding residual would prove nothing; demand headroom first.
            headroom = prec - magnitude_bits(roots)
            coeffs = poly_from_roots(roots) if headroom >= GUARD // 2 else None
        try:
            if coeffs is None:
                raise PrecisionExhausted(mpmath.mpf(2) ** -headroom,
                                         hint=f"at least {prec - headroom + GUARD // 2} bits")
            return ClassPolynomial(family, D, tuple(round_to_integers(coeffs)), prec)
        except PrecisionExhausted as e:
            err = e
            prec *= 2
    raise PrecisionExhausted(err.residual, hint=f"working precision above {prec // 2} bits")


# Each *_roots function evaluates at the ambient mpmath precision.

def hilbert_roots(D):
    roots = []
    for f in reduced_forms(D):
        tau = f.point()
        h = (_eta_mpc(tau * 2) / _eta_mpc(tau)) ** 24
        roots.append((256 * h + 1) ** 3 / h)
    return roots


def hilbert_poly(D, prec=None):
    check_discriminant(D)
    return _construct(HILBERT, D, lambda p: hilbert_roots(D), prec)


def _zeta48(e):
    return mpmath.expjpi(mpmath.mpf(e) / 24)


def _weber_f(tau, sign):
    z = tau.to_mpc()
    return mpmath.expjpi(-z / 24) * _half_product(tau, sign, True)


def _weber_f2(tau):
    z = tau.to_mpc()
    return mpmath.sqrt(2) * mpmath.expjpi(z / 12) * _half_product(tau, 1, False)


def weber_invariant(a, b, c, D):
    """g at the root (-b + sqrt(-D))/a of the form (a, 2b, c)."""
    tau = HalfPlanePoint(Fraction(-b, a), Fraction(1, a), D)
    e = 3 if D % 3 == 0 else 1
    if a % 2 and c % 2:
        g = _zeta48(e * b * (c - a - a * a * c)) * _weber_f(tau, 1) ** e
    elif a % 2:
        g = -(-1) ** ((e * (a * a - 1)) // 8) * _zeta48(e * b * (a * c * c - a - 2 * c)) \
            * _weber_f(tau, -1) ** e
    else:
        g = -(-1) ** ((e * (c * c - 1)) // 8) * _zeta48(e * b * (c - a - 5 * a * c * c)) \
            * _weber_f2(tau) ** e
    return g / 2 if e == 3 else g


def weber_roots(D):
    return [weber_invariant(a, b, c, D) for a, b, c in weber_forms(D)]


def weber_poly(D, prec=None):
    check_discriminant(D)
    if D % 8 != 3:
        raise InvalidDiscriminant(f"Weber polynomials need D = 3 mod 8, got D={D}")
    h = len(reduced_forms(D))
    if len(weber_forms(D)) != 3 * h:
        raise InvalidDiscriminant(f"form count for -4D differs from 3h at D={D}")
    return _construct(WEBER, D, lambda p: weber_roots(D), prec)


def _check_levels(D, primes):
    check_discriminant(D)
    for q in primes:
        if kronecker(-D, q) == -1:
            raise InertPrime(f"kronecker(-{D}, {q}) = -1")


def single_eta_exponent(l):
    return 24 // (l - 1)


def single_eta_roots(D, l):
    e = single_eta_exponent(l)
    return [_m_single(l, f.point()) ** e for f in n_system(D, l).forms]


def single_eta_poly(D, l, prec=None):
    fam = single_eta(l)
    _check_levels(D, [l])
    if D % l:
        raise SplitPrime(f"l={l} does not divide D={D}: the invariant's minimal polynomial "
                         f"is not defined over the integers")
    return _construct(fam, D, lambda p: single_eta_roots(D, l), prec)


def double_eta_roots(D, p1, p2):
    return [_m_double(p1, p2, f.point()) for f in n_system(D, p1 * p2).forms]


def double_eta_poly(D, p1, p2, prec=None):
    fam = double_eta(p1, p2)
    _check_levels(D, [p1, p2])
    return _construct(fam, D, lambda p: double_eta_roots(D, p1, p2), prec)


def check_ramanujan_discriminant(D):
    check_discriminant(D)
    if D % 24 != 11 or not is_squarefree(D):
        raise InvalidDiscriminant(f"Ramanujan polynomials need squarefree D = 11 mod 24, got D={D}")


def ramanujan_data(D):
    check_ramanujan_discriminant(D)
    return [ramanujan_form_data(f) for f in reduced_forms(D)]


def ramanujan_roots(D, data=None):
    data = data or ramanujan_data(D)
    roots = []
    for d in data:
        roots.append(d.multiplier.to_mpc() * _r_mpc(d.selected_index, d.form.point()))
    return roots


def ramanujan_poly(D, prec=None):
    data = ramanujan_data(D)
    poly = _construct(RAMANUJAN, D, lambda p: ramanujan_roots(D, data), prec)
    if poly.coeffs[0] not in (1, -1):
        raise ArithmeticError(f"T_{D} has constant term {poly.coeffs[0]}, expected a unit")
    return poly


def build(family, D, prec=None):
    """Dispatch on family (a Family or its tag)."""
    if isinstance(family, str):
        family = Family.parse(family)
    kind = family.kind
    if kind == "hilbert":
        return hilbert_poly(D, prec)
    if kind == "weber":
        return weber_poly(D, prec)
    if kind == "eta":
        return single_eta_poly(D, family.params[0], prec)
    if kind == "eta2":
        return double_eta_poly(D, *family.params, prec=prec)
    if kind == "ramanujan":
        return ramanujan_poly(D, prec)
    raise UnsupportedFamily(f"unknown family {family}")
