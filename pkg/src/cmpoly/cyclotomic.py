"""Exact arithmetic in Q(zeta_72) and 6x6 matrices over it.

Elements are stored on the power basis 1, z, ..., z^23 where z = zeta_72 and
z^24 = z^12 - 1 (the 72nd cyclotomic polynomial is x^24 - x^12 + 1).
"""
from fractions import Fraction
from functools import lru_cache
from math import gcd

import mpmath

ORDER = 72
DEGREE = 24


def _monomial_table():
    table = []
    for e in range(ORDER):
        sign = 1
        if e >= 36:
            e -= 36
            sign = -1
        if e < 24:
            table.append({e: sign})
        else:
            # z^e = z^(e-12) - z^(e-24), both exponents now below 24
            table.append({e - 12: sign, e - 24: -sign})
    return table


_MONO = _monomial_table()


class Cyclo:
    """An element of Q(zeta_72)."""
    __slots__ = ("c",)

    def __init__(self, coeffs=None):
        self.c = coeffs or {}

    @classmethod
    def zeta(cls, e, scale=1):
        return cls({k: Fraction(v * scale) for k, v in _MONO[e % ORDER].items()})

    @classmethod
    def rational(cls, r):
        r = Fraction(r)
        return cls({0: r} if r else {})

    def is_zero(self):
        return not self.c

    def __add__(self, other):
        out = dict(self.c)
        for e, v in other.c.items():
            s = out.get(e, 0) + v
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Cyclo(out)

    def __neg__(self):
        return Cyclo({e: -v for e, v in self.c.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclo({e: v * other for e, v in self.c.items()} if other else {})
        acc = {}
        for e1, v1 in self.c.items():
            for e2, v2 in other.c.items():
                v = v1 * v2
                for e, s in _MONO[e1 + e2].items():
                    acc[e] = acc.get(e, 0) + s * v
        return Cyclo({e: v for e, v in acc.items() if v})

    __rmul__ = __mul__

    def galois(self, a):
        """Image under zeta -> zeta^a, gcd(a, 72) = 1."""
        out = Cyclo()
        for e, v in self.c.items():
            out = out + Cyclo.zeta(a * e, v)
        return out

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta_72)")
        if len(self.c) == 1:
            # a single monomial v*z^e
            (e, v), = self.c.items()
            return Cyclo.zeta(-e, 1 / Fraction(v))
        prod = Cyclo.rational(1)
        for a in range(2, ORDER):
            if gcd(a, ORDER) == 1:
                prod = prod * self.galois(a)
        norm = prod * self
        if set(norm.c) - {0}:
            raise ArithmeticError("norm is not rational")
        return prod * (1 / norm.c[0])

    def __truediv__(self, other):
        return self * other.inverse()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyclo.rational(other)
        return isinstance(other, Cyclo) and self.c == other.c

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    def as_monomial(self):
        """(coefficient, exponent) when the element is c * zeta^e, else None."""
        for e in range(ORDER):
            ratio = self * Cyclo.zeta(-e)
            if set(ratio.c) <= {0}:
                return ratio.c.get(0, Fraction(0)), e
        return None

    def to_mpc(self):
        z = mpmath.expjpi(mpmath.mpf(1) / 36)
        s = mpmath.mpc(0)
        for e, v in self.c.items():
            s += mpmath.mpf(v.numerator) / v.denominator * z ** e
        return s

    def __repr__(self):
        if not self.c:
            return "0"
        return " + ".join(f"{v}*z^{e}" for e, v in sorted(self.c.items()))


ZERO = Cyclo()
ONE = Cyclo.rational(1)


class CycloMatrix6:
    """A 6x6 matrix with exact Q(zeta_72) entries."""
    __slots__ = ("rows",)
    n = 6

    def __init__(self, rows):
        self.rows = tuple(tuple(r) for r in rows)

    @classmethod
    def identity(cls):
        return cls([[ONE if i == j else ZERO for j in range(6)] for i in range(6)])

    @classmethod
    def sparse(cls, entries):
        """Build from {(i, j): Cyclo}."""
        return cls([[entries.get((i, j), ZERO) for j in range(6)] for i in range(6)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __mul__(self, other):
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            row = []
            for col in cols:
                acc = ZERO
                for x, y in zip(r, col):
                    if x.c and y.c:
                        acc = acc + x * y
                row.append(acc)
            out.append(row)
        return CycloMatrix6(out)

    def __pow__(self, e):
        base = self if e >= 0 else self.inverse()
        e = abs(e)
        result = CycloMatrix6.identity()
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self):
        n = 6
        a = [list(r) + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(self.rows)]
        for col in range(n):
            piv = next((r for r in range(col, n) if not a[r][col].is_zero()), None)
            if piv is None:
                raise ZeroDivisionError("singular matrix")
            a[col], a[piv] = a[piv], a[col]
            inv = a[col][col].inverse()
            a[col] = [x * inv for x in a[col]]
            for r in range(n):
                if r != col and not a[r][col].is_zero():
                    f = a[r][col]
                    a[r] = [x - f * y for x, y in zip(a[r], a[col])]
        return CycloMatrix6([row[n:] for row in a])

    def row_support(self, i):
        return [j for j in range(6) if not self.rows[i][j].is_zero()]

    def __eq__(self, other):
        return isinstance(other, CycloMatrix6) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def to_mpmath(self):
        return mpmath.matrix([[x.to_mpc() for x in r] for r in self.rows])

    def __repr__(self):
        return "CycloMatrix6(" + "; ".join(", ".join(map(repr, r)) for r in self.rows) + ")"


@lru_cache(maxsize=None)
def zeta(e):
    return Cyclo.zeta(e)
