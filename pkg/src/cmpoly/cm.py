"""Prime-order curves by complex multiplication."""
import random
from dataclasses import asdict, dataclass, replace
from math import isqrt

from .errors import (DegenerateJ, Inconclusive, InvalidDiscriminant, NoCubicFactor,
                     SearchExhausted, UnsupportedFamily)
from .family import Family
from .finitefield import (cubic_factor_root, is_prime, legendre, poly_roots_mod_p, sqrt_mod_p,
                          transform_root)


@dataclass(frozen=True)
class CmSolution:
    p: int
    u: int
    v: int
    D: int


@dataclass(frozen=True)
class CurveParams:
    """y^2 = x^3 + a x + b over F_p with group order m (None until known)."""
    p: int
    a: int
    b: int
    m: int = None
    D: int = None
    j: int = None

    def to_dict(self):
        return asdict(self)


INFINITY = None


def _rng(seed):
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def cornacchia(D, p):
    """(u, v) with 4p = u^2 + D v^2 and u, v > 0, or None."""
    if legendre(-D, p) != 1:
        return None
    x0 = sqrt_mod_p(-D, p)
    if x0 % 2 != D % 2:
        x0 = p - x0
    a, b = 2 * p, x0
    bound = isqrt(4 * p)
    while b > bound:
        a, b = b, a % b
    t = 4 * p - b * b
    if t <= 0 or t % D:
        return None
    v = isqrt(t // D)
    if v * v * D != t:
        return None
    return CmSolution(p, b, v, D)


def find_candidate(D, bitlen, seed=0, max_attempts=None):
    """Random prime p of bitlen bits with 4p = u^2 + D v^2, u, v odd, and a prime order.

    Returns (CmSolution, m) with m = p + 1 - u when prime, else p + 1 + u.
    """
    if D % 8 != 3:
        raise InvalidDiscriminant(f"prime order needs D = 3 mod 8, got D={D}")
    if bitlen < 3:
        raise ValueError("bitlen must be at least 3")
    rng = _rng(seed)
    cap = max_attempts or 10 * bitlen * bitlen
    lo, hi = 1 << (bitlen - 1), 1 << bitlen
    for _ in range(cap):
        p = rng.randrange(lo, hi) | 1
        if p <= 3 or not is_prime(p):
            continue
        sol = cornacchia(D, p)
        if sol is None or sol.u % 2 == 0 or sol.v % 2 == 0:
            continue
        for m in (p + 1 - sol.u, p + 1 + sol.u):
            if is_prime(m):
                return sol, m
    raise SearchExhausted(f"no candidate prime of {bitlen} bits for D={D} in {cap} attempts")


def smallest_nonresidue(p):
    c = 2
    while legendre(c, p) != -1:
        c += 1
    return c


def curves_from_j(j, p):
    """The curve with invariant j and its quadratic twist."""
    j %= p
    if j == 0 or j == 1728 % p:
        raise DegenerateJ(f"j={j} is 0 or 1728 mod {p}")
    k = j * pow(1728 - j, -1, p) % p
    a, b = 3 * k % p, 2 * k % p
    c = smallest_nonresidue(p)
    e1 = CurveParams(p, a, b, j=j)
    e2 = CurveParams(p, a * c * c % p, b * c ** 3 % p, j=j)
    return e1, e2


def on_curve(P, E):
    if P is INFINITY:
        return True
    x, y = P
    return (y * y - (x ** 3 + E.a * x + E.b)) % E.p == 0


def point_neg(P, E):
    if P is INFINITY:
        return P
    return (P[0], -P[1] % E.p)


def point_add(P, Q, E):
    if P is INFINITY:
        return Q
    if Q is INFINITY:
        return P
    p = E.p
    x1, y1 = P
    x2, y2 = Q
    if x1 == x2:
        if (y1 + y2) % p == 0:
            return INFINITY
        lam = (3 * x1 * x1 + E.a) * pow(2 * y1, -1, p) % p
    else:
        lam = (y2 - y1) * pow(x2 - x1, -1, p) % p
    x3 = (lam * lam - x1 - x2) % p
    return (x3, (lam * (x1 - x3) - y1) % p)


def scalar_mul(n, P, E):
    if n < 0:
        n, P = -n, point_neg(P, E)
    R = INFINITY
    while n:
        if n & 1:
            R = point_add(R, P, E)
        P = point_add(P, P, E)
        n >>= 1
    return R


def random_point(E, seed=0):
    """Draw x until x^3 + ax + b is a square; take the smaller root as y."""
    rng = _rng(seed)
    p = E.p
    while True:
        x = rng.randrange(p)
        y = sqrt_mod_p(x ** 3 + E.a * x + E.b, p)
        if y is not None:
            return (x, y)


def select_curve(E1, E2, m, trials=32, seed=0):
    """Pick the curve of order m from a curve/twist pair by Lagrange sampling.

    A point with mP != O rules its curve out. A point with m'P != O, where
    m' = 2p + 2 - m is the twist order, rules its curve in; this settles the
    cases where one order divides the other.
    """
    rng = _rng(seed)
    other = 2 * E1.p + 2 - m
    not_m = [False, False]
    not_other = [False, False]
    for _ in range(trials):
        for i, E in enumerate((E1, E2)):
            if not_m[i]:
                continue
            P = random_point(E, rng)
            if scalar_mul(m, P, E) is not INFINITY:
                not_m[i] = True
            elif 0 < other != m and scalar_mul(other, P, E) is not INFINITY:
                not_other[i] = True
    for i, E in enumerate((E1, E2)):
        if not not_m[i] and (not_m[1 - i] or not_other[i]):
            return replace(E, m=m)
    raise Inconclusive(f"no decisive witness for order {m} in {trials} trials")


def verify_curve(E, trials=20, seed=0):
    p, a, b, m = E.p, E.a, E.b, E.m
    if m is None or not is_prime(p) or p <= 3:
        return False
    if (4 * a ** 3 + 27 * b * b) % p == 0:
        return False
    t = p + 1 - m
    if t * t > 4 * p or not is_prime(m):
        return False
    rng = _rng(seed)
    for _ in range(trials):
        P = random_point(E, rng)
        if not on_curve(P, E) or scalar_mul(m, P, E) is not INFINITY:
            return False
    return True


def _j_candidates(poly, family, p, D, seed):
    if family.kind == "weber":
        try:
            x = cubic_factor_root(poly, p, seed)
            return [transform_root(family, x, p, D)]
        except NoCubicFactor:
            pass
    return [transform_root(family, x, p, D) for x in poly_roots_mod_p(poly, p, seed) if x]


def generate_prime_order_curve(D, bitlen, family="ramanujan", seed=0, poly=None, trials=32):
    """Search for a prime p and a curve over F_p of prime order with CM by -D."""
    from .classpoly import build, check_ramanujan_discriminant
    if isinstance(family, str):
        family = Family.parse(family)
    if D % 8 != 3:
        raise InvalidDiscriminant(f"prime order needs D = 3 mod 8, got D={D}")
    if family.kind == "eta2":
        raise UnsupportedFamily("double eta polynomials are not used for curve generation")
    if family.kind == "ramanujan":
        check_ramanujan_discriminant(D)
    poly = poly or build(family, D)
    rng = random.Random(seed)
    cap = 10 * bitlen * bitlen
    for _ in range(cap):
        sol, m = find_candidate(D, bitlen, rng)
        js = _j_candidates(poly, family, sol.p, D, rng.randrange(1 << 30))
        if not js:
            continue
        j = js[0]
        E1, E2 = curves_from_j(j, sol.p)
        n = trials
        for _ in range(4):
            try:
                E = select_curve(E1, E2, m, n, rng)
                break
            except Inconclusive:
                n *= 2
        else:
            continue
        E = replace(E, D=D)
        if verify_curve(E, trials, rng):
            return E
    raise SearchExhausted(f"no prime-order curve for D={D} at {bitlen} bits")
