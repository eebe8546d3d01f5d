"""
Exact arithmetic in cyclotomic fields Q(zeta_m).

An element is stored as integer numerators over a common positive
denominator, in the power basis 1, z, ..., z^(phi(m)-1) reduced modulo
the m-th cyclotomic polynomial.  Operands with different conductors are
promoted to the lcm conductor via z_m -> z_M^(M/m).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from numbers import Rational
import threading

from mpmath import iv

# the interval context keeps its precision globally
_IV_LOCK = threading.Lock()

__all__ = [
    "Scalar",
    "FieldError",
    "cyclotomic_polynomial",
    "totient",
    "make_scalar",
    "compare_real",
]


class FieldError(ArithmeticError):
    pass


def _divisors(m: int) -> list[int]:
    return [d for d in range(1, m + 1) if m % d == 0]


def _exact_div(num: list[int], den: tuple[int, ...]) -> list[int]:
    # division of integer polynomials by a monic one, low degree first
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        q = num[i]
        out[i - dd] = q
        if q:
            for j in range(dd + 1):
                num[i - dd + j] -= q * den[j]
    assert not any(num[:dd]), "inexact polynomial division"
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients of Phi_m, lowest degree first."""
    if m < 1:
        raise ValueError("conductor must be positive")
    poly = [-1] + [0] * (m - 1) + [1]
    for d in _divisors(m)[:-1]:
        poly = _exact_div(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def totient(m: int) -> int:
    return len(cyclotomic_polynomial(m)) - 1


@lru_cache(maxsize=None)
def _power_table(m: int, size: int) -> tuple[tuple[int, ...], ...]:
    """Reduced coordinates of z^e for 0 <= e < size."""
    phi = cyclotomic_polynomial(m)
    d = len(phi) - 1
    rows = []
    cur = [0] * d
    cur[0] = 1
    for _ in range(size):
        rows.append(tuple(cur))
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for j in range(d):
                cur[j] -= top * phi[j]
    return tuple(rows)


def _mobius(n: int) -> int:
    out, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            out = -out
        p += 1
    return -out if n > 1 else out


@lru_cache(maxsize=None)
def _trace_table(m: int) -> tuple[int, ...]:
    """Tr(z^k) from Q(zeta_m) to Q, for k < phi(m)."""
    out = []
    for k in range(totient(m)):
        q = m // gcd(m, k)
        out.append(_mobius(q) * totient(m) // totient(q))
    return tuple(out)


def power_coords(m: int, e: int) -> tuple[int, ...]:
    e %= m
    return _power_table(m, m)[e]


def _reduce(m: int, raw) -> list[int]:
    d = totient(m)
    if len(raw) <= d:
        return list(raw) + [0] * (d - len(raw))
    out = list(raw[:d])
    for e in range(d, len(raw)):
        c = raw[e]
        if c:
            pc = power_coords(m, e)
            for j in range(d):
                if pc[j]:
                    out[j] += c * pc[j]
    return out


def _normalize(num: list[int], den: int) -> tuple[tuple[int, ...], int]:
    if den == 0:
        raise FieldError("zero denominator")
    g = den
    for c in num:
        if c:
            g = gcd(g, c)
            if g == 1:
                break
    if den < 0:
        g = -g
    if g != 1:
        num = [c // g for c in num]
        den //= g
    return tuple(num), den


class Scalar:
    """Element of Q(zeta_m); immutable and hashable."""

    __slots__ = ("m", "num", "den", "_hash")

    def __init__(self, m: int, coords=(0,)):
        if isinstance(m, bool) or not isinstance(m, int) or m < 1:
            raise ValueError(f"conductor must be a positive integer, got {m!r}")
        fr = []
        for c in coords:
            if isinstance(c, bool) or not isinstance(c, Rational):
                raise TypeError(f"coordinate {c!r} is not rational")
            fr.append(Fraction(c))
        den = 1
        for c in fr:
            den = lcm(den, c.denominator)
        raw = [c.numerator * (den // c.denominator) for c in fr] or [0]
        self._set(m, _reduce(m, raw), den)

    def _set(self, m, num, den):
        self.m = m
        self.num, self.den = _normalize(num, den)
        self._hash = None

    @classmethod
    def _raw(cls, m: int, num, den: int = 1) -> "Scalar":
        s = object.__new__(cls)
        s._set(m, _reduce(m, num), den)
        return s

    # constructors

    @classmethod
    def rational(cls, q, m: int = 1) -> "Scalar":
        q = Fraction(q)
        return cls._raw(m, [q.numerator], q.denominator)

    @classmethod
    def zeta(cls, m: int, k: int = 1) -> "Scalar":
        return cls._raw(m, list(power_coords(m, k)))

    @classmethod
    def cos2pi(cls, k: int, m: int) -> "Scalar":
        """cos(2 pi k / m) in Q(zeta_m)."""
        return (cls.zeta(m, k) + cls.zeta(m, -k)) * Fraction(1, 2)

    @classmethod
    def sin2pi(cls, k: int, m: int) -> "Scalar":
        """sin(2 pi k / m) in Q(zeta_lcm(m, 4))."""
        big = lcm(m, 4)
        i = cls.zeta(big, big // 4)
        z = cls.zeta(big, (big // m) * k)
        zc = cls.zeta(big, -(big // m) * k)
        return (z - zc) * i * Fraction(-1, 2)

    @classmethod
    def sqrt5(cls) -> "Scalar":
        # quadratic Gauss sum for p = 5
        return cls.zeta(5, 1) + cls.zeta(5, 4) - cls.zeta(5, 2) - cls.zeta(5, 3)

    # coordinates

    @property
    def coords(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.num)

    @property
    def degree(self) -> int:
        return len(self.num)

    def promote(self, M: int) -> "Scalar":
        if M == self.m:
            return self
        if M % self.m:
            raise ValueError(f"cannot promote conductor {self.m} to {M}")
        step = M // self.m
        d = totient(M)
        out = [0] * d
        for k, c in enumerate(self.num):
            if c:
                pc = power_coords(M, k * step)
                for j in range(d):
                    if pc[j]:
                        out[j] += c * pc[j]
        s = object.__new__(Scalar)
        s._set(M, out, self.den)
        return s

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise FieldError("scalar is not rational")
        return Fraction(self.num[0], self.den)

    # arithmetic

    @staticmethod
    def _coerce(x) -> "Scalar":
        if isinstance(x, Scalar):
            return x
        if isinstance(x, Rational) and not isinstance(x, bool):
            return Scalar.rational(x)
        return NotImplemented

    @staticmethod
    def _common(a: "Scalar", b: "Scalar"):
        if a.m == b.m:
            return a, b
        M = lcm(a.m, b.m)
        return a.promote(M), b.promote(M)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._common(self, other)
        if a.den == b.den:
            num = [x + y for x, y in zip(a.num, b.num)]
            return Scalar._raw(a.m, num, a.den)
        num = [x * b.den + y * a.den for x, y in zip(a.num, b.num)]
        return Scalar._raw(a.m, num, a.den * b.den)

    __radd__ = __add__

    def __neg__(self):
        return Scalar._raw(self.m, [-c for c in self.num], self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._common(self, other)
        if b.is_rational():
            return Scalar._raw(a.m, [c * b.num[0] for c in a.num], a.den * b.den)
        if a.is_rational():
            return Scalar._raw(a.m, [c * a.num[0] for c in b.num], a.den * b.den)
        d = len(a.num)
        raw = [0] * (2 * d - 1)
        for i, x in enumerate(a.num):
            if x:
                for j, y in enumerate(b.num):
                    if y:
                        raw[i + j] += x * y
        return Scalar._raw(a.m, raw, a.den * b.den)

    __rmul__ = __mul__

    def galois(self, j: int) -> "Scalar":
        """Image under the automorphism z -> z^j (gcd(j, m) = 1)."""
        if gcd(j, self.m) != 1:
            raise ValueError("exponent must be a unit mod the conductor")
        d = totient(self.m)
        out = [0] * d
        for k, c in enumerate(self.num):
            if c:
                pc = power_coords(self.m, j * k)
                for t in range(d):
                    if pc[t]:
                        out[t] += c * pc[t]
        s = object.__new__(Scalar)
        s._set(self.m, out, self.den)
        return s

    def conjugate(self) -> "Scalar":
        return self.galois(-1)

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in cyclotomic field")
        if self.is_rational():
            return Scalar._raw(self.m, [self.den], self.num[0])
        # product of the other Galois conjugates divided by the norm
        rest = Scalar.rational(1, self.m)
        for j in range(2, self.m):
            if gcd(j, self.m) == 1:
                rest = rest * self.galois(j)
        norm = (self * rest).to_fraction()
        return rest * (1 / norm)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = Scalar.rational(1, self.m)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    # comparison

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        a, b = self._common(self, other)
        return a.den == b.den and a.num == b.num

    def __hash__(self):
        # trace / degree does not depend on the conductor, so equal values
        # at different conductors hash alike
        if self._hash is None:
            tr = _trace_table(self.m)
            t = sum(c * tr[k] for k, c in enumerate(self.num))
            self._hash = hash(Fraction(t, self.den * totient(self.m)))
        return self._hash

    def is_real(self) -> bool:
        return self == self.conjugate()

    def interval(self, prec: int = 64):
        """Rigorous real interval containing the (real) value."""
        with _IV_LOCK:
            saved = iv.prec
            iv.prec = prec
            try:
                acc = iv.mpf(0)
                for k, c in enumerate(self.num):
                    if c:
                        acc += iv.mpf(c) * iv.cos(2 * iv.pi * k / self.m)
                return acc / self.den
            finally:
                iv.prec = saved

    def __float__(self):
        # display only; never used for decisions
        return float(self.interval(64).mid)

    def __repr__(self):
        if self.is_rational():
            return f"Scalar({Fraction(self.num[0], self.den)})"
        terms = []
        for k, c in enumerate(self.num):
            if c:
                q = Fraction(c, self.den)
                terms.append(f"{q}*z{self.m}^{k}" if k else f"{q}")
        return "Scalar(" + " + ".join(terms) + ")"


def make_scalar(m: int, coords) -> Scalar:
    return Scalar(m, coords)


def compare_real(a, b, start_prec: int = 64) -> int:
    """Sign of a - b for real scalars: -1, 0 or 1."""
    a = Scalar._coerce(a)
    b = Scalar._coerce(b)
    if not (a.is_real() and b.is_real()):
        raise FieldError("compare_real needs real scalars")
    diff = a - b
    if diff.is_zero():
        return 0
    # diff != 0 is algebraic, so refinement terminates
    prec = start_prec
    while True:
        x = diff.interval(prec)
        if x.a > 0:
            return 1
        if x.b < 0:
            return -1
        prec *= 2
