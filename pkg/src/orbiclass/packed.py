"""
Packed integer form of matrices over Q(zeta_m), used by the group engine.

A matrix is an integer array ``num`` of shape (rows, cols, phi(m)) over a
positive integer denominator.  Products go through the rational regular
representation of the right factor, so each product is one integer matmul.
Arithmetic is exact: int64 is used while a bound check proves no overflow,
Python integers (object arrays) otherwise.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd, lcm

import numpy as np

from .cyclotomic import Scalar, power_coords, totient
from .linalg import Matrix

_SAFE = 2 ** 62


@lru_cache(maxsize=None)
def mult_tensor(m: int) -> np.ndarray:
    """T[s, t, u] = coordinate u of z^s * z^t."""
    d = totient(m)
    T = np.zeros((d, d, d), dtype=np.int64)
    for s in range(d):
        for t in range(d):
            T[s, t, :] = power_coords(m, s + t)
    return T


def _absmax(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    return int(max(abs(int(a.max())), abs(int(a.min()))))


def _shrink(a: np.ndarray) -> np.ndarray:
    if a.dtype == object and _absmax(a) < _SAFE:
        return a.astype(np.int64)
    return a


class Packed:
    __slots__ = ("num", "den", "m", "_key", "_reg")

    def __init__(self, num: np.ndarray, den: int, m: int, normalize: bool = True):
        if normalize:
            g = den
            if num.size:
                if num.dtype == object:
                    for x in num.flat:
                        g = gcd(g, int(x))
                else:
                    g = gcd(g, int(np.gcd.reduce(num.ravel())))
            if g not in (0, 1):
                num = num // g
                den //= g
        self.num = _shrink(num)
        self.den = int(den)
        self.m = m
        self._key = None
        self._reg = None

    @property
    def shape(self) -> tuple[int, int]:
        return self.num.shape[0], self.num.shape[1]

    def key(self):
        if self._key is None:
            if self.num.dtype == object:
                self._key = (self.den, tuple(int(x) for x in self.num.flat))
            else:
                self._key = (self.den, self.num.tobytes())
        return self._key

    def __eq__(self, other):
        return isinstance(other, Packed) and self.shape == other.shape and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def regular(self) -> np.ndarray:
        """Integer matrix R with coords(x @ self) = coords(x) @ R (times den)."""
        if self._reg is None:
            k, c, d = self.num.shape
            T = mult_tensor(self.m)
            if self.num.dtype == object or _absmax(self.num) * _absmax(T) * d >= _SAFE:
                R = np.einsum("kjt,stu->ksju", self.num.astype(object), T.astype(object))
            else:
                R = np.einsum("kjt,stu->ksju", self.num, T)
            self._reg = _shrink(R.reshape(k * d, c * d))
        return self._reg

    def __matmul__(self, other: "Packed") -> "Packed":
        r, k, d = self.num.shape
        k2, c, _ = other.num.shape
        if k != k2:
            raise ValueError("shape mismatch")
        R = other.regular()
        A = self.num.reshape(r, k * d)
        if A.dtype == object or R.dtype == object or _absmax(A) * _absmax(R) * max(k * d, 1) >= _SAFE:
            out = A.astype(object) @ R.astype(object)
        else:
            out = A @ R
        return Packed(_shrink(out.reshape(r, c, d)), self.den * other.den, self.m)

    def transpose(self) -> "Packed":
        return Packed(np.ascontiguousarray(self.num.transpose(1, 0, 2)), self.den, self.m, normalize=False)

    def __sub__(self, other: "Packed") -> "Packed":
        L = lcm(self.den, other.den)
        a = self.num.astype(object) * (L // self.den)
        b = other.num.astype(object) * (L // other.den)
        return Packed(_shrink(a - b), L, self.m)

    def is_zero(self) -> bool:
        return not self.num.any()

    def trace(self) -> Scalar:
        n = min(self.shape)
        tot = [0] * self.num.shape[2]
        for i in range(n):
            for u in range(len(tot)):
                tot[u] += int(self.num[i, i, u])
        return Scalar._raw(self.m, tot, self.den)

    def to_matrix(self) -> Matrix:
        r, c, d = self.num.shape
        ents = []
        for i in range(r):
            for j in range(c):
                ents.append(Scalar._raw(self.m, [int(x) for x in self.num[i, j]], self.den))
        return Matrix(r, c, ents)


def pack(A: Matrix, m: int | None = None) -> Packed:
    m = A.conductor if m is None else m
    if m % A.conductor:
        raise ValueError("conductor does not divide target")
    A = A.promote(m)
    d = totient(m)
    den = 1
    for e in A.entries:
        den = lcm(den, e.den)
    num = np.zeros((A.rows, A.cols, d), dtype=object)
    for idx, e in enumerate(A.entries):
        i, j = divmod(idx, A.cols)
        f = den // e.den
        for u, c in enumerate(e.num):
            num[i, j, u] = c * f
    return Packed(_shrink(num), den, m)


def packed_identity(n: int, m: int) -> Packed:
    d = totient(m)
    num = np.zeros((n, n, d), dtype=np.int64)
    for i in range(n):
        num[i, i, 0] = 1
    return Packed(num, 1, m, normalize=False)
