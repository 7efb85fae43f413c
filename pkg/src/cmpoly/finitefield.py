"""Prime field and cubic extension arithmetic, root finding mod p, root transforms."""
import random

from .errors import NoCubicFactor, NotInPrimeField, UnsupportedFamily, ZeroRoot

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71)
# the first 13 primes as bases make Miller-Rabin exact below 3.3e24
_DETERMINISTIC_BASES = _SMALL_PRIMES[:13]
_DETERMINISTIC_LIMIT = 3317044064679887385961981


def is_prime(n, rounds=32):
    """Miller-Rabin; exact below 3.3e24, otherwise error below 4^-rounds."""
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if n < _DETERMINISTIC_LIMIT:
        bases = _DETERMINISTIC_BASES
    else:
        rng = random.Random(n)
        bases = _DETERMINISTIC_BASES + tuple(rng.randrange(2, n - 1) for _ in range(max(rounds, 32)))
    for a in bases:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def legendre(a, p):
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def sqrt_mod_p(a, p):
    """Smaller square root of a mod p (Tonelli-Shanks), or None for a non-residue."""
    a %= p
    if a == 0:
        return 0
    if p == 2:
        return a
    if legendre(a, p) != 1:
        return None
    if p % 4 == 3:
        r = pow(a, (p + 1) // 4, p)
    else:
        q, s = p - 1, 0
        while q % 2 == 0:
            q //= 2
            s += 1
        z = 2
        while legendre(z, p) != -1:
            z += 1
        m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
        while t != 1:
            i, t2 = 0, t
            while t2 != 1:
                t2 = t2 * t2 % p
                i += 1
            b = pow(c, 1 << (m - i - 1), p)
            m, c = i, b * b % p
            t, r = t * c % p, r * b % p
    return min(r, p - r)


# Polynomials over F_p: lists of ints, constant term first, no trailing zeros.

def _norm(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def poly_reduce(f, p):
    return _norm([c % p for c in f])


def poly_sub(f, g, p):
    n = max(len(f), len(g))
    return _norm([((f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0)) % p for i in range(n)])


def poly_mul(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return _norm([c % p for c in out])


def poly_divmod(f, g, p):
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    f = list(f)
    inv = pow(g[-1], -1, p)
    dg = len(g) - 1
    q = [0] * max(len(f) - dg, 0)
    for i in range(len(f) - 1, dg - 1, -1):
        c = f[i] * inv % p
        if c:
            q[i - dg] = c
            for j in range(dg + 1):
                f[i - dg + j] = (f[i - dg + j] - c * g[j]) % p
    return _norm(q), _norm(f[:dg])


def poly_mod(f, g, p):
    return poly_divmod(f, g, p)[1]


def poly_monic(f, p):
    inv = pow(f[-1], -1, p)
    return [c * inv % p for c in f]


def poly_gcd(f, g, p):
    f, g = poly_reduce(f, p), poly_reduce(g, p)
    while g:
        f, g = g, poly_mod(f, g, p)
    return poly_monic(f, p) if f else []


def poly_powmod(base, e, mod, p):
    result = [1]
    base = poly_mod(base, mod, p)
    while e:
        if e & 1:
            result = poly_mod(poly_mul(result, base, p), mod, p)
        base = poly_mod(poly_mul(base, base, p), mod, p)
        e >>= 1
    return result


def poly_eval(f, x, p):
    acc = 0
    for c in reversed(f):
        acc = (acc * x + c) % p
    return acc


def _coeffs(poly):
    return list(getattr(poly, "coeffs", poly))


def _split(g, p, d, rng):
    """Split a product of distinct degree-d irreducibles into its factors."""
    if len(g) - 1 == d:
        return [g]
    e = (p ** d - 1) // 2
    while True:
        a = [rng.randrange(p) for _ in range(len(g) - 1)]
        a = _norm(a)
        if len(a) < 2:
            continue
        h = poly_gcd(poly_sub(poly_powmod(a, e, g, p), [1], p), g, p)
        if 0 < len(h) - 1 < len(g) - 1:
            rest = poly_divmod(g, h, p)[0]
            return _split(h, p, d, rng) + _split(poly_monic(rest, p), p, d, rng)


def poly_roots_mod_p(poly, p, seed=0):
    """Distinct roots in F_p, ascending."""
    f = poly_reduce(_coeffs(poly), p)
    if not f:
        raise ValueError("zero polynomial mod p")
    if len(f) == 1:
        return []
    f = poly_monic(f, p)
    g = poly_gcd(poly_sub(poly_powmod([0, 1], p, f, p), [0, 1], p), f, p)
    if len(g) <= 1:
        return []
    roots = []
    if g[0] == 0:
        roots.append(0)
        g = poly_divmod(g, [0, 1], p)[0]
    if len(g) > 1:
        for fac in _split(g, p, 1, random.Random(seed)):
            roots.append(-fac[0] % p)
    return sorted(roots)


class Fp3:
    """The field F_p[x]/(modulus) for a monic irreducible cubic modulus."""

    def __init__(self, modulus, p, check=True):
        modulus = poly_monic(poly_reduce(list(modulus), p), p)
        if len(modulus) != 4:
            raise ValueError("modulus must be a cubic")
        if check and not _is_irreducible_cubic(modulus, p):
            raise ValueError("modulus is reducible")
        self.modulus = tuple(modulus)
        self.p = p

    def __call__(self, coords):
        return Fp3Element(self, coords)

    def gen(self):
        return Fp3Element(self, (0, 1, 0))

    def __eq__(self, other):
        return isinstance(other, Fp3) and (self.modulus, self.p) == (other.modulus, other.p)

    def __hash__(self):
        return hash((self.modulus, self.p))


def _is_irreducible_cubic(f, p):
    # a cubic is irreducible iff it has no root in F_p
    return len(poly_gcd(poly_sub(poly_powmod([0, 1], p, f, p), [0, 1], p), f, p)) == 1


class Fp3Element:
    __slots__ = ("field", "coords")

    def __init__(self, field, coords):
        self.field = field
        if isinstance(coords, int):
            coords = (coords,)
        c = poly_mod(list(coords), list(field.modulus), field.p)
        self.coords = tuple(c + [0] * (3 - len(c)))

    def _lift(self, other):
        if isinstance(other, Fp3Element):
            return other
        return Fp3Element(self.field, (other,))

    def __add__(self, other):
        other = self._lift(other)
        p = self.field.p
        return Fp3Element(self.field, [(a + b) % p for a, b in zip(self.coords, other.coords)])

    __radd__ = __add__

    def __neg__(self):
        return Fp3Element(self.field, [-a for a in self.coords])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        prod = poly_mul(list(self.coords), list(other.coords), self.field.p)
        return Fp3Element(self.field, prod)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** -e
        result = Fp3Element(self.field, (1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_zero(self):
        return not any(self.coords)

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in F_p^3")
        p = self.field.p
        return self ** (p ** 3 - 2)

    def __truediv__(self, other):
        return self * self._lift(other).inverse()

    def frobenius(self):
        return self ** self.field.p

    def in_prime_field(self):
        return self.coords[1] == 0 and self.coords[2] == 0

    def __eq__(self, other):
        if isinstance(other, int):
            other = Fp3Element(self.field, (other,))
        return isinstance(other, Fp3Element) and self.field == other.field \
            and self.coords == other.coords

    def __hash__(self):
        return hash((self.field, self.coords))

    def __repr__(self):
        return f"Fp3Element({list(self.coords)} mod {list(self.field.modulus)}, p={self.field.p})"


def cubic_factors(poly, p, seed=0):
    """Monic irreducible cubic factors of a squarefree polynomial mod p."""
    f = poly_monic(poly_reduce(_coeffs(poly), p), p)
    xp = poly_powmod([0, 1], p, f, p)
    lin = poly_gcd(poly_sub(xp, [0, 1], p), f, p)
    if len(lin) > 1:
        f = poly_monic(poly_divmod(f, lin, p)[0], p)
    if len(f) < 4:
        return []
    xp = poly_powmod([0, 1], p, f, p)
    xp3 = xp
    for _ in range(2):
        xp3 = poly_powmod(xp3, p, f, p)
    g = poly_gcd(poly_sub(xp3, [0, 1], p), f, p)
    if len(g) < 4:
        return []
    return sorted(_split(g, p, 3, random.Random(seed)))


def cubic_factor_root(poly, p, seed=0):
    """A root of a degree-3 irreducible factor, in F_p[x]/(that factor)."""
    facs = cubic_factors(poly, p, seed)
    if not facs:
        raise NoCubicFactor(f"no irreducible cubic factor mod {p}")
    return Fp3(facs[0], p, check=False).gen()


# Table of numerators N_l(x) with j = N_l(x) / x for the single eta quotients.
_PHI_SINGLE = {
    3: ((27, 1), (3, 1), 3),
    5: ((5, 10, 1), 3),
    7: ((49, 13, 1), (1, 5, 1), 3),
    13: ((13, 5, 1), (1, 19, 20, 7, 1), 3),
}


def _eval(coeffs, x):
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _single_numerator(l, x):
    spec = _PHI_SINGLE[l]
    if l == 5:
        base, e = spec
        return _eval(base, x) ** e
    lin, base, e = spec
    return _eval(lin, x) * _eval(base, x) ** e


def transform_root(family, x, p, D=None):
    """j-invariant mod p from a root x of the family's class polynomial.

    The Weber equation depends on D mod 3, so D is required for that family.
    """
    from .family import Family
    if isinstance(family, str):
        family = Family.parse(family)
    kind = family.kind
    if kind == "eta2":
        raise UnsupportedFamily("double eta roots have no degree-one modular equation in j")
    if kind == "weber":
        if D is None:
            raise ValueError("the Weber transform needs D")
        return transform_weber_root(x, p, D)
    if isinstance(x, Fp3Element):
        if x.is_zero():
            raise ZeroRoot("root is zero")
        if not x.in_prime_field():
            raise NotInPrimeField("root is not in F_p")
        x = x.coords[0]
    else:
        x %= p
        if x == 0:
            raise ZeroRoot("root is zero")
    if kind == "hilbert":
        return x
    if kind == "ramanujan":
        x6 = pow(x, 6, p)
        return pow(x6 * x6 - 6 * x6 - 27, 3, p) * pow(x, -18, p) % p
    if kind == "eta":
        l, = family.params
        return _single_numerator(l, x) * pow(x, -1, p) % p
    raise UnsupportedFamily(f"no transform for {family}")


def transform_weber_root(x, p, D):
    """j from a Weber root x, in F_p or F_p^3; the result must lie in F_p."""
    if isinstance(x, int):
        x %= p
        if x == 0:
            raise ZeroRoot("root is zero")
        y = pow(2, 12, p) * pow(x, -24, p) if D % 3 else 16 * pow(x, -8, p)
        return (y - 16) ** 3 * pow(y, -1, p) % p
    if x.is_zero():
        raise ZeroRoot("root is zero")
    y = x ** -24 * pow(2, 12, p) if D % 3 else x ** -8 * 16
    j = (y - 16) ** 3 / y
    if not j.in_prime_field():
        raise NotInPrimeField(f"Weber image {j} is not in F_p")
    return j.coords[0]
