"""Pure-Python form enumeration kernels (fallback for the compiled module)."""
from math import gcd, isqrt


def reduced_forms(D):
    """Primitive reduced forms (a, b, c) with b^2 - 4ac = -D, sorted by (a, b)."""
    out = []
    b = D & 1
    bmax = isqrt(D // 3)
    while b <= bmax:
        n = (b * b + D) // 4
        a = max(b, 1)
        while a * a <= n:
            if n % a == 0:
                c = n // a
                if gcd(gcd(a, b), c) == 1:
                    out.append((a, b, c))
                    if b and b != a and a != c:
                        out.append((a, -b, c))
            a += 1
        b += 2
    out.sort(key=lambda f: (f[0], f[1]))
    return out


def weber_forms(D):
    """Forms (a, b, c) with b^2 - ac = -D, |2b| <= a <= c and gcd(a, 2b, c) = 1."""
    out = []
    b = 0
    while 3 * (2 * b) ** 2 <= 4 * D:
        n = b * b + D
        a = max(2 * b, 1)
        while a * a <= n:
            if n % a == 0:
                c = n // a
                if gcd(gcd(a, 2 * b), c) == 1:
                    out.append((a, b, c))
                    if b and 2 * b != a and a != c:
                        out.append((a, -b, c))
            a += 1
        b += 1
    out.sort(key=lambda f: (f[0], f[1]))
    return out


def hilbert_sum(D):
    """Sum of 1/a over the primitive reduced forms of discriminant -D."""
    s = 0.0
    b = D & 1
    bmax = isqrt(D // 3)
    while b <= bmax:
        n = (b * b + D) // 4
        a = max(b, 1)
        while a * a <= n:
            if n % a == 0:
                c = n // a
                if gcd(gcd(a, b), c) == 1:
                    if b and b != a and a != c:
                        s += 2.0 / a
                    else:
                        s += 1.0 / a
            a += 1
        b += 2
    return s
