# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled form enumeration kernels; same contract as _kernels_py."""

cdef inline long long _gcd(long long x, long long y) nogil:
    cdef long long t
    if x < 0:
        x = -x
    if y < 0:
        y = -y
    while y:
        t = x % y
        x = y
        y = t
    return x


cdef long long _isqrt(long long n):
    cdef long long r = <long long>(n ** 0.5)
    while r * r > n:
        r -= 1
    while (r + 1) * (r + 1) <= n:
        r += 1
    return r


def reduced_forms(long long D):
    cdef long long b, a, n, c, bmax
    out = []
    b = D & 1
    bmax = _isqrt(D // 3)
    while b <= bmax:
        n = (b * b + D) // 4
        a = b if b > 1 else 1
        while a * a <= n:
            if n % a == 0:
                c = n // a
                if _gcd(_gcd(a, b), c) == 1:
                    out.append((a, b, c))
                    if b != 0 and b != a and a != c:
                        out.append((a, -b, c))
            a += 1
        b += 2
    out.sort()
    return out


def weber_forms(long long D):
    cdef long long b, a, n, c
    out = []
    b = 0
    while 3 * (2 * b) * (2 * b) <= 4 * D:
        n = b * b + D
        a = 2 * b if b > 0 else 1
        while a * a <= n:
            if n % a == 0:
                c = n // a
                if _gcd(_gcd(a, 2 * b), c) == 1:
                    out.append((a, b, c))
                    if b != 0 and 2 * b != a and a != c:
                        out.append((a, -b, c))
            a += 1
        b += 1
    out.sort()
    return out


def hilbert_sum(long long D):
    cdef long long b, a, n, c, bmax
    cdef double s = 0.0
    b = D & 1
    bmax = _isqrt(D // 3)
    while b <= bmax:
        n = (b * b + D) // 4
        a = b if b > 1 else 1
        while a * a <= n:
            if n % a == 0:
                c = n // a
                if _gcd(_gcd(a, b), c) == 1:
                    if b != 0 and b != a and a != c:
                        s += 2.0 / a
                    else:
                        s += 1.0 / a
            a += 1
        b += 2
    return s
