"""
Finite matrix groups materialized by closure.

Elements are held in packed integer form (see ``packed``) and hashed by
their canonical coordinates; ``Matrix`` views are produced on demand.
Element 0 of every group is the identity.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import gcd, lcm
from typing import Iterable, Sequence

from .cyclotomic import Scalar
from .linalg import Matrix, NotInvariantError, Subspace, rank
from .packed import Packed, pack, packed_identity

DEFAULT_CAP = 100_000

__all__ = [
    "CapExceeded",
    "NonOrthogonalGenerator",
    "ElementClass",
    "MatrixGroup",
    "closure",
    "classify_element",
    "generated_subgroup",
    "derived_subgroup",
    "restriction_kernel",
    "support_span",
    "element_support",
    "is_fixed_point_free",
    "orientation_subgroup",
]


class CapExceeded(RuntimeError):
    def __init__(self, cap: int):
        super().__init__(f"group has more than {cap} elements (or is infinite)")
        self.cap = cap


class NonOrthogonalGenerator(ValueError):
    def __init__(self, index: int, reason: str):
        super().__init__(f"generator {index}: {reason}")
        self.index = index
        self.reason = reason


@dataclass(frozen=True)
class ElementClass:
    tag: str
    fixed_codim: int

    @classmethod
    def from_codim(cls, codim: int) -> "ElementClass":
        tag = {0: "identity", 1: "reflection", 2: "rotation"}.get(codim, "other")
        return cls(tag, codim)


def classify_element(g: Matrix) -> ElementClass:
    return ElementClass.from_codim(rank(g - Matrix.identity(g.rows)))


class MatrixGroup:
    """A finite group of n x n orthogonal matrices over Q(zeta_m)."""

    def __init__(self, n: int, conductor: int, elements: Sequence[Packed],
                 generators: Sequence[int] | None = None):
        self.n = n
        self.conductor = conductor
        self.elements = list(elements)
        self.index = {p.key(): i for i, p in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise ValueError("duplicate elements")
        if self.elements and self.index.get(packed_identity(n, conductor).key()) != 0:
            raise ValueError("element 0 must be the identity")
        self._generators = list(generators) if generators is not None else None
        self._matrices: dict[int, Matrix] = {}
        self._codims: list[int] | None = None
        self._dets: dict[int, Scalar] = {}

    def __len__(self):
        return len(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __repr__(self):
        return f"MatrixGroup(n={self.n}, order={self.order}, conductor={self.conductor})"

    @property
    def generators(self) -> list[int]:
        if self._generators is None:
            self._generators = _greedy_generators(self)
        return self._generators

    def matrix(self, i: int) -> Matrix:
        M = self._matrices.get(i)
        if M is None:
            M = self._matrices[i] = self.elements[i].to_matrix()
        return M

    def matrices(self) -> list[Matrix]:
        return [self.matrix(i) for i in range(self.order)]

    def find(self, p: Packed) -> int | None:
        return self.index.get(p.key())

    def lookup(self, g: Matrix) -> int | None:
        return self.find(pack(g, self.conductor))

    def mul(self, i: int, j: int) -> int:
        k = self.find(self.elements[i] @ self.elements[j])
        if k is None:
            raise ValueError("product left the group")
        return k

    def inv(self, i: int) -> int:
        return self.index[self.elements[i].transpose().key()]

    def det(self, i: int) -> Scalar:
        d = self._dets.get(i)
        if d is None:
            d = self._dets[i] = self.matrix(i).det()
        return d

    # fixed-space codimensions

    def codims(self, workers: int = 1) -> list[int]:
        """codim Fix(g) for every element, from the character average
        dim Fix(g) = (1/|<g>|) sum_j tr(g^j)."""
        if self._codims is None:
            idx = list(range(self.order))
            if workers > 1 and self.order > 64:
                chunks = [idx[w::workers] for w in range(workers)]
                with ThreadPoolExecutor(workers) as ex:
                    parts = list(ex.map(self._codim_chunk, chunks))
                out = [0] * self.order
                for chunk, vals in zip(chunks, parts):
                    for i, v in zip(chunk, vals):
                        out[i] = v
            else:
                out = self._codim_chunk(idx)
            self._codims = out
        return self._codims

    def _codim_chunk(self, idx: Iterable[int]) -> list[int]:
        known: dict[int, int] = {}
        out = []
        for i in idx:
            if i in known:
                out.append(known[i])
                continue
            g = self.elements[i]
            powers = [0]
            tot = Scalar.rational(self.n, self.conductor)
            cur = g
            while True:
                j = self.find(cur)
                if j is None:
                    raise ValueError("power left the group")
                if j == 0:
                    break
                powers.append(j)
                tot = tot + cur.trace()
                cur = cur @ g
            if i not in self._generators_or_empty():
                g._reg = None
            r = len(powers)
            dim_fix = tot.to_fraction() / r
            if dim_fix.denominator != 1:
                raise ArithmeticError("non-integral character average")
            codim = self.n - int(dim_fix)
            # generators of the same cyclic subgroup share the fixed space
            for e in range(1, r):
                if gcd(e, r) == 1:
                    known[powers[e]] = codim
            out.append(codim)
        return out

    def _generators_or_empty(self):
        return self._generators or ()

    def element_class(self, i: int) -> ElementClass:
        return ElementClass.from_codim(self.codims()[i])

    def indices_with_codim(self, *codims: int) -> list[int]:
        want = set(codims)
        return [i for i, c in enumerate(self.codims()) if c in want]

    def sorted_indices(self) -> list[int]:
        """Deterministic order: lexicographic by canonical coordinates."""
        return sorted(range(self.order), key=lambda i: self.matrix(i).key())

    def subgroup(self, idx: Iterable[int]) -> "MatrixGroup":
        """Subgroup given by element indices already known to form a group."""
        idx = sorted(set(idx))
        if 0 not in idx:
            raise ValueError("subgroup must contain the identity")
        sub = MatrixGroup(self.n, self.conductor, [self.elements[i] for i in idx])
        for new, old in enumerate(idx):
            if old in self._matrices:
                sub._matrices[new] = self._matrices[old]
        return sub

    def contains_group(self, other: "MatrixGroup") -> bool:
        return all(self.find(p) is not None for p in other.elements)

    def same_elements(self, other: "MatrixGroup") -> bool:
        return self.order == other.order and self.contains_group(other)


def _close(seeds: Sequence[Packed], n: int, m: int, cap: int,
           start: Sequence[Packed] = ()) -> list[Packed]:
    ident = packed_identity(n, m)
    elements = [ident] + [p for p in start if p.key() != ident.key()]
    seen = {p.key() for p in elements}
    gens = []
    gkeys = set()
    for s in seeds:
        if s.key() not in gkeys and s.key() != ident.key():
            gkeys.add(s.key())
            gens.append(s)
    frontier = list(elements)
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = x @ s
                k = y.key()
                if k not in seen:
                    seen.add(k)
                    elements.append(y)
                    nxt.append(y)
                    if len(elements) > cap:
                        raise CapExceeded(cap)
        frontier = nxt
    return elements


def _greedy_generators(G: MatrixGroup) -> list[int]:
    """A small generating set: add elements not yet generated."""
    gens: list[int] = []
    have = {G.elements[0].key()}
    for i in G.sorted_indices() if G.order <= 2048 else range(G.order):
        if G.elements[i].key() in have:
            continue
        gens.append(i)
        have = {p.key() for p in _close([G.elements[j] for j in gens], G.n, G.conductor, G.order)}
        if len(have) == G.order:
            break
    return gens


def closure(generators: Sequence[Matrix], cap: int = DEFAULT_CAP,
            conductor: int | None = None) -> MatrixGroup:
    """Breadth-first product closure of orthogonal generators."""
    if cap < 1:
        raise ValueError("cap must be positive")
    gens = list(generators)
    if not gens:
        raise ValueError("closure needs at least one generator (use the identity)")
    n = gens[0].rows
    m = conductor or 1
    for i, g in enumerate(gens):
        if g.rows != g.cols:
            raise NonOrthogonalGenerator(i, "not square")
        if g.rows != n:
            raise NonOrthogonalGenerator(i, "size differs from generator 0")
        if not g.is_real():
            raise NonOrthogonalGenerator(i, "entries are not real")
        if not g.is_orthogonal():
            raise NonOrthogonalGenerator(i, "g^T g != I")
        m = lcm(m, g.conductor)
    packs = [pack(g, m) for g in gens]
    elements = _close(packs, n, m, cap)
    G = MatrixGroup(n, m, elements)
    G._generators = sorted({G.find(p) for p in packs} - {0}) or []
    return G


def generated_subgroup(G: MatrixGroup, subset: Iterable[int], cap: int = DEFAULT_CAP) -> MatrixGroup:
    subset = sorted(set(subset))
    elements = _close([G.elements[i] for i in subset], G.n, G.conductor, cap)
    H = MatrixGroup(G.n, G.conductor, elements)
    H._generators = sorted({H.find(G.elements[i]) for i in subset} - {0})
    return H


def derived_subgroup(G: MatrixGroup) -> MatrixGroup:
    """Subgroup generated by all commutators g h g^-1 h^-1."""
    invs = [G.elements[G.inv(i)] for i in range(G.order)]
    comms = set()
    for a in range(1, G.order):
        ga = G.elements[a]
        for b in range(a + 1, G.order):
            c = ga @ G.elements[b] @ invs[a] @ invs[b]
            k = G.find(c)
            if k is None:
                raise ValueError("commutator left the group")
            comms.add(k)
    comms.discard(0)
    return generated_subgroup(G, comms)


def _check_invariant(G: MatrixGroup, S: Subspace) -> None:
    if S.dim in (0, G.n):
        return
    for i in G.generators:
        g = G.matrix(i)
        for v in S.basis:
            w = g.matmul(Matrix.from_columns([v], G.n)).column(0)
            if not S.contains_vector(w):
                raise NotInvariantError("subspace not invariant under the group",
                                        witness=v, element=i)


def restriction_kernel(G: MatrixGroup, S: Subspace) -> MatrixGroup:
    """Elements fixing S pointwise."""
    _check_invariant(G, S)
    if S.dim == 0:
        return G
    B = pack(S.matrix(), G.conductor)
    keep = [i for i in range(G.order) if G.elements[i] @ B == B]
    return G.subgroup(keep)


def element_support(g: Matrix) -> Subspace:
    """(Fix g)^perp, which for orthogonal g is the column space of g - I."""
    return Subspace.span(g.rows, (g - Matrix.identity(g.rows)).columns())


def support_span(elements: Sequence[Matrix], n: int) -> Subspace:
    cur = Subspace.zero(n)
    for g in elements:
        if cur.dim == n:
            break
        D = g - Matrix.identity(n)
        new = [c for c in D.columns() if not cur.contains_vector(c)]
        if new:
            cur = Subspace.span(n, list(cur.basis) + new)
    return cur


def is_fixed_point_free(G: MatrixGroup, S: Subspace) -> bool:
    """True iff Fix(g) meets S only in 0 for every g != 1."""
    _check_invariant(G, S)
    if S.dim == 0:
        return True
    if S.dim == G.n:
        return all(c == G.n for c in G.codims()[1:])
    B = S.matrix()
    for i in range(1, G.order):
        D = G.matrix(i) - Matrix.identity(G.n)
        if rank(D.matmul(B)) != S.dim:
            return False
    return True


def orientation_subgroup(G: MatrixGroup) -> MatrixGroup:
    one = Scalar.rational(1)
    return G.subgroup(i for i in range(G.order) if G.det(i) == one)
