"""
Exact matrices and subspaces over cyclotomic fields.

Bases are never normalized (the field has no square roots in general);
subspace equality is decided by rank.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .cyclotomic import Scalar

__all__ = [
    "Matrix",
    "Subspace",
    "DimensionError",
    "NotInvariantError",
    "rank",
    "kernel_basis",
    "orthogonal_complement",
    "restrict",
    "column_space",
]


class DimensionError(ValueError):
    pass


class NotInvariantError(ValueError):
    """A subspace failed an invariance check; ``witness`` is a basis vector
    whose image leaves the subspace."""

    def __init__(self, msg, witness=None, element=None):
        super().__init__(msg)
        self.witness = witness
        self.element = element


def _scalar(x, m=1) -> Scalar:
    if isinstance(x, Scalar):
        return x
    return Scalar.rational(Fraction(x), m)


class Matrix:
    """Dense row-major matrix of Scalars at one common conductor."""

    __slots__ = ("rows", "cols", "entries", "conductor", "_key")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        entries = [_scalar(x) for x in entries]
        if len(entries) != rows * cols:
            raise DimensionError(f"expected {rows * cols} entries, got {len(entries)}")
        m = 1
        for e in entries:
            m = lcm(m, e.m)
        self.rows = rows
        self.cols = cols
        self.conductor = m
        self.entries = tuple(e.promote(m) for e in entries)
        self._key = None

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Matrix":
        r = len(rows)
        c = len(rows[0]) if r else 0
        if any(len(row) != c for row in rows):
            raise DimensionError("ragged rows")
        return cls(r, c, [x for row in rows for x in row])

    @classmethod
    def identity(cls, n: int, m: int = 1) -> "Matrix":
        one, zero = Scalar.rational(1, m), Scalar.rational(0, m)
        return cls(n, n, [one if i == j else zero for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, r: int, c: int, m: int = 1) -> "Matrix":
        return cls(r, c, [Scalar.rational(0, m)] * (r * c))

    @classmethod
    def diag(cls, values: Sequence) -> "Matrix":
        n = len(values)
        vals = [_scalar(v) for v in values]
        zero = Scalar.rational(0)
        return cls(n, n, [vals[i] if i == j else zero for i in range(n) for j in range(n)])

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence[Scalar]], n: int) -> "Matrix":
        c = len(cols)
        return cls(n, c, [cols[j][i] for i in range(n) for j in range(c)])

    @classmethod
    def block_diag(cls, blocks: Sequence["Matrix"]) -> "Matrix":
        n = sum(b.rows for b in blocks)
        zero = Scalar.rational(0)
        out = [[zero] * n for _ in range(n)]
        off = 0
        for b in blocks:
            for i in range(b.rows):
                for j in range(b.cols):
                    out[off + i][off + j] = b[i, j]
            off += b.rows
        return cls.from_rows(out)

    def __getitem__(self, ij) -> Scalar:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Scalar, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple[Scalar, ...]:
        return self.entries[j::self.cols]

    def columns(self) -> list[tuple[Scalar, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def to_rows(self) -> list[list[Scalar]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def key(self) -> tuple:
        """Canonical form: row-major coordinate vectors as Fractions."""
        if self._key is None:
            self._key = tuple(c for e in self.entries for c in e.coords)
        return self._key

    def promote(self, m: int) -> "Matrix":
        if m == self.conductor:
            return self
        return Matrix(self.rows, self.cols, [e.promote(m) for e in self.entries])

    # algebra

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise DimensionError("shape mismatch in addition")
        return Matrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise DimensionError("shape mismatch in subtraction")
        return Matrix(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, [-a for a in self.entries])

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return self.matmul(other)
        s = _scalar(other)
        return Matrix(self.rows, self.cols, [a * s for a in self.entries])

    def matmul(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        out = []
        ocols = other.columns()
        for i in range(self.rows):
            r = self.row(i)
            for col in ocols:
                acc = None
                for a, b in zip(r, col):
                    if a.is_zero() or b.is_zero():
                        continue
                    t = a * b
                    acc = t if acc is None else acc + t
                out.append(acc if acc is not None else Scalar.rational(0))
        return Matrix(self.rows, other.cols, out)

    __matmul__ = matmul

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows,
                      [self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)])

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def det(self) -> Scalar:
        """Determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise DimensionError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return Scalar.rational(1)
        a = self.to_rows()
        sign = 1
        prev = Scalar.rational(1)
        for k in range(n - 1):
            if a[k][k].is_zero():
                for i in range(k + 1, n):
                    if not a[i][k].is_zero():
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return Scalar.rational(0)
            inv_prev = prev.inverse()
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) * inv_prev
            prev = a[k][k]
        d = a[n - 1][n - 1]
        return d if sign == 1 else -d

    def is_real(self) -> bool:
        return all(e.is_real() for e in self.entries)

    def is_orthogonal(self) -> bool:
        if self.rows != self.cols:
            return False
        return self.T.matmul(self) == Matrix.identity(self.rows)

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and all(a == b for a, b in zip(self.entries, other.entries))

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols}, {[list(map(float, self.row(i))) for i in range(self.rows)]})"


def _echelon(rows: list[list[Scalar]]):
    """Reduced row echelon form in place; returns pivot columns."""
    pivots = []
    r = 0
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        p = None
        for i in range(r, nrows):
            if not rows[i][c].is_zero():
                p = i
                break
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(nrows):
            if i != r and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def rank(A: Matrix) -> int:
    if A.rows == 0 or A.cols == 0:
        return 0
    rows = A.to_rows() if A.rows <= A.cols else A.T.to_rows()
    return len(_echelon(rows))


class Subspace:
    """Span of linearly independent column vectors in an ambient space."""

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim: int, basis: Sequence[Sequence] = ()):
        self.ambient_dim = ambient_dim
        vecs = [tuple(_scalar(x) for x in v) for v in basis]
        for v in vecs:
            if len(v) != ambient_dim:
                raise DimensionError("basis vector has wrong length")
        if vecs and rank(Matrix.from_columns(vecs, ambient_dim)) != len(vecs):
            raise DimensionError("basis vectors are linearly dependent")
        self.basis = tuple(vecs)

    @classmethod
    def _trusted(cls, n: int, vecs) -> "Subspace":
        s = object.__new__(cls)
        s.ambient_dim = n
        s.basis = tuple(tuple(v) for v in vecs)
        return s

    @classmethod
    def span(cls, n: int, vectors: Iterable[Sequence]) -> "Subspace":
        """Subspace spanned by arbitrary (possibly dependent) vectors."""
        vecs = [tuple(_scalar(x) for x in v) for v in vectors]
        if not vecs:
            return cls._trusted(n, [])
        rows = [list(v) for v in vecs]
        piv = _echelon(rows)
        return cls._trusted(n, rows[:len(piv)])

    @classmethod
    def whole(cls, n: int) -> "Subspace":
        return cls._trusted(n, Matrix.identity(n).columns())

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls._trusted(n, [])

    @classmethod
    def coordinate(cls, n: int, idx: Iterable[int]) -> "Subspace":
        cols = Matrix.identity(n).columns()
        return cls._trusted(n, [cols[i] for i in idx])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def matrix(self) -> Matrix:
        if not self.basis:
            return Matrix(self.ambient_dim, 0, [])
        return Matrix.from_columns(self.basis, self.ambient_dim)

    def contains_vector(self, v: Sequence[Scalar]) -> bool:
        if not any(not _scalar(x).is_zero() for x in v):
            return True
        if not self.basis:
            return False
        return rank(Matrix.from_columns(list(self.basis) + [tuple(v)], self.ambient_dim)) == self.dim

    def contains(self, other: "Subspace") -> bool:
        if other.dim == 0:
            return True
        if other.dim > self.dim:
            return False
        both = list(self.basis) + list(other.basis)
        return rank(Matrix.from_columns(both, self.ambient_dim)) == self.dim

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.ambient_dim == other.ambient_dim and self.dim == other.dim
                and self.contains(other))

    def __hash__(self):
        return hash((self.ambient_dim, self.dim))

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace.span(self.ambient_dim, list(self.basis) + list(other.basis))

    def is_orthogonal_to(self, other: "Subspace") -> bool:
        for u in self.basis:
            for v in other.basis:
                if not _dot(u, v).is_zero():
                    return False
        return True

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"


def _dot(u, v) -> Scalar:
    acc = Scalar.rational(0)
    for a, b in zip(u, v):
        if not (a.is_zero() or b.is_zero()):
            acc = acc + a * b
    return acc


def kernel_basis(A: Matrix) -> Subspace:
    """Null space {x : A x = 0}."""
    n = A.cols
    if A.rows == 0:
        return Subspace.whole(n)
    rows = A.to_rows()
    piv = _echelon(rows)
    free = [c for c in range(n) if c not in piv]
    zero, one = Scalar.rational(0), Scalar.rational(1)
    basis = []
    for f in free:
        v = [zero] * n
        v[f] = one
        for r, p in enumerate(piv):
            v[p] = -rows[r][f]
        basis.append(v)
    return Subspace._trusted(n, basis)


def column_space(A: Matrix) -> Subspace:
    return Subspace.span(A.rows, A.columns())


def orthogonal_complement(S: Subspace) -> Subspace:
    n = S.ambient_dim
    if S.dim == 0:
        return Subspace.whole(n)
    # rows of B^T span S, so the complement is the kernel of B^T
    return kernel_basis(Matrix(S.dim, n, [x for v in S.basis for x in v]))


def restrict(g: Matrix, S: Subspace) -> Matrix:
    """Matrix of g on an invariant subspace in the given basis:
    (B^T B)^{-1} B^T g B."""
    if S.dim == 0:
        return Matrix(0, 0, [])
    B = S.matrix()
    gB = g.matmul(B)
    for j, col in enumerate(gB.columns()):
        if not S.contains_vector(col):
            raise NotInvariantError("subspace is not invariant", witness=S.basis[j])
    Bt = B.T
    gram = Bt.matmul(B)
    return _solve(gram, Bt.matmul(gB))


def _solve(A: Matrix, B: Matrix) -> Matrix:
    """A X = B for invertible square A."""
    n = A.rows
    rows = [list(A.row(i)) + list(B.row(i)) for i in range(n)]
    piv = _echelon(rows)
    if piv[:n] != list(range(n)):
        raise ZeroDivisionError("singular system")
    return Matrix.from_rows([r[n:] for r in rows])
