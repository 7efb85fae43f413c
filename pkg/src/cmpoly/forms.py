"""Binary quadratic forms of negative discriminant."""
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from . import _accel
from .errors import InertPrime, InvalidDiscriminant, NoSystem


@dataclass(frozen=True, order=True)
class QuadraticForm:
    """The form a*x^2 + b*x*y + c*y^2."""
    a: int
    b: int
    c: int

    @property
    def D(self):
        return 4 * self.a * self.c - self.b * self.b

    def is_reduced(self):
        a, b, c = self.a, self.b, self.c
        if not (abs(b) <= a <= c):
            return False
        if (abs(b) == a or a == c) and b < 0:
            return False
        return gcd(gcd(a, b), c) == 1

    def point(self):
        """Root in the upper half plane, (-b + sqrt(-D)) / (2a)."""
        from .numerics import HalfPlanePoint
        return HalfPlanePoint(Fraction(-self.b, 2 * self.a), Fraction(1, 2 * self.a), self.D)

    def __iter__(self):
        return iter((self.a, self.b, self.c))


@dataclass(frozen=True)
class FormSystem:
    forms: tuple
    N: int
    B0: int


def check_discriminant(D):
    if not isinstance(D, int) or D <= 0 or D % 4 != 3:
        raise InvalidDiscriminant(f"D={D} must be a positive integer with D = 3 mod 4")


def is_squarefree(n):
    n = abs(n)
    if n % 4 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % (d * d) == 0:
            return False
        while n % d == 0:
            n //= d
        d += 2
    return True


def reduced_forms(D):
    """All primitive reduced forms of discriminant -D, principal form first."""
    check_discriminant(D)
    return [QuadraticForm(a, b, c) for a, b, c in _accel.reduced_forms(D)]


def class_number(D):
    return len(reduced_forms(D))


def principal_form(D):
    check_discriminant(D)
    return QuadraticForm(1, 1, (1 + D) // 4)


def weber_forms(D):
    """Forms (a, b, c) with b^2 - ac = -D used by the Weber invariant, sorted by (a, b)."""
    if not isinstance(D, int) or D <= 0:
        raise InvalidDiscriminant(f"D={D} must be a positive integer")
    return list(_accel.weber_forms(D))


def reduce_form(a, b, c):
    """Reduce a positive definite form to the unique reduced one in its class."""
    while True:
        if c < a:
            a, b, c = c, -b, a
            continue
        if not (-a < b <= a):
            # translate b into (-a, a]
            k = (a - b) // (2 * a)
            c = a * k * k + b * k + c
            b = b + 2 * a * k
            continue
        if a == c and b < 0:
            b = -b
        return QuadraticForm(a, b, c)


def kronecker(a, n):
    """Kronecker symbol (a / n)."""
    if n == 0:
        return 1 if abs(a) == 1 else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    v = (n & -n).bit_length() - 1
    n >>= v
    if v:
        if a % 2 == 0:
            return 0
        if v % 2 and a % 8 in (3, 5):
            result = -result
    # Jacobi symbol for odd n
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _egcd(a, b):
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def _small_pairs(bound):
    pairs = []
    for x in range(0, bound + 1):
        for y in range(-bound, bound + 1):
            if (x == 0 and y <= 0) or gcd(x, y) != 1:
                continue
            pairs.append((x, y))
    return pairs


_PAIRS = _small_pairs(12)


def n_system(D, N, search_bound=12):
    """Class representatives (A, B, C) with gcd(A, N) = 1 and B = B0 mod 2N.

    B0 is the smallest positive odd residue with B0^2 = -D mod 4N.  Each reduced
    form is moved by an SL2(Z) substitution to one properly representing an A
    prime to N (the smallest such A found), then translated so B lands on B0.
    """
    check_discriminant(D)
    for q in prime_factors(N):
        if kronecker(-D, q) == -1:
            raise InertPrime(f"kronecker(-{D}, {q}) = -1")
    B0 = next((b for b in range(1, 4 * N, 2) if (b * b + D) % (4 * N) == 0), None)
    if B0 is None:
        raise NoSystem(f"no odd B0 with B0^2 = -{D} mod {4 * N}")
    pairs = _PAIRS if search_bound == 12 else _small_pairs(search_bound)
    out = []
    for f in reduced_forms(D):
        a, b, c = f
        best = None
        for x, y in pairs:
            A = a * x * x + b * x * y + c * y * y
            if gcd(A, N) == 1 and (best is None or A < best[0]):
                best = (A, x, y)
        if best is None:
            raise NoSystem(f"no representative of {tuple(f)} with A prime to {N}")
        A, x, y = best
        g, s, r = _egcd(x, y)
        s, r = s * g, -r * g  # g = +-1; now x*s - r*y = 1
        B = 2 * a * x * r + b * (x * s + r * y) + 2 * c * y * s
        t = ((B0 - B) // 2 * pow(A, -1, N)) % N
        B += 2 * A * t
        C, rem = divmod(B * B + D, 4 * A)
        if rem or reduce_form(A, B, C) != f:
            raise NoSystem(f"adjustment of {tuple(f)} failed")
        out.append(QuadraticForm(A, B, C))
    return FormSystem(tuple(out), N, B0)
