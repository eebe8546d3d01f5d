"""
Finite abstract simplicial complexes given by their facets.

Vertices are integers ``0 .. n_vertices - 1``; faces are sorted tuples.
An optional ``labels`` list records where each vertex came from (the
constructions below fill it in).
"""

from __future__ import annotations

from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

__all__ = [
    "SimplicialComplex",
    "ComplexError",
    "build_complex",
]


class ComplexError(ValueError):
    pass


def _maximal(facets: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    facets = sorted(set(facets), key=lambda f: (-len(f), f))
    if len({len(f) for f in facets}) <= 1:
        return sorted(facets)
    by_vertex: dict[int, list[frozenset]] = {}
    kept = []
    for f in facets:
        fs = frozenset(f)
        cands = by_vertex.get(f[0], []) if f else []
        if f and any(fs <= c for c in cands):
            continue
        kept.append(f)
        for v in f:
            by_vertex.setdefault(v, []).append(fs)
    return sorted(kept)


class SimplicialComplex:
    def __init__(self, facets: Iterable[Iterable[int]], n_vertices: int | None = None,
                 labels: Sequence | None = None, assume_maximal: bool = False):
        fl = [tuple(sorted(set(f))) for f in facets]
        if any(len(f) == 0 for f in fl):
            raise ComplexError("empty facet")
        self.facets: tuple[tuple[int, ...], ...] = tuple(sorted(set(fl)) if assume_maximal else _maximal(fl))
        top = max((v for f in self.facets for v in f), default=-1)
        if n_vertices is None:
            n_vertices = top + 1
        if top >= n_vertices:
            raise ComplexError("vertex index out of range")
        self.n_vertices = n_vertices
        self.labels = list(labels) if labels is not None else None

    # basic data

    @property
    def dim(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    def is_empty(self) -> bool:
        return not self.facets

    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1

    @cached_property
    def faces_by_dim(self) -> list[list[tuple[int, ...]]]:
        d = self.dim
        sets: list[set] = [set() for _ in range(d + 1)]
        for f in self.facets:
            for k in range(1, len(f) + 1):
                sets[k - 1].update(combinations(f, k))
        return [sorted(s) for s in sets]

    def faces(self, k: int | None = None) -> list[tuple[int, ...]]:
        if k is None:
            return [f for fs in self.faces_by_dim for f in fs]
        if k < 0 or k > self.dim:
            return []
        return self.faces_by_dim[k]

    @cached_property
    def face_set(self) -> frozenset:
        return frozenset(self.faces())

    def has_face(self, face: Iterable[int]) -> bool:
        return tuple(sorted(face)) in self.face_set

    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(fs) for fs in self.faces_by_dim)

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * n for k, n in enumerate(self.f_vector()))

    @cached_property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted({v for f in self.facets for v in f}))

    @cached_property
    def _vertex_facets(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for i, f in enumerate(self.facets):
            for v in f:
                out.setdefault(v, []).append(i)
        return out

    def facets_containing(self, face: Sequence[int]) -> list[tuple[int, ...]]:
        if not face:
            return list(self.facets)
        vf = self._vertex_facets
        cand = min((vf.get(v, []) for v in face), key=len)
        fs = set(face)
        return [self.facets[i] for i in cand if fs <= set(self.facets[i])]

    def link(self, face: Sequence[int]) -> "SimplicialComplex":
        face = tuple(sorted(face))
        if face and not self.has_face(face):
            raise ComplexError(f"{face} is not a face")
        fs = set(face)
        parts = [tuple(v for v in F if v not in fs) for F in self.facets_containing(face)]
        parts = [p for p in parts if p]
        return SimplicialComplex(parts, self.n_vertices, self.labels, assume_maximal=True)

    def star_facets(self, vertex: int) -> list[tuple[int, ...]]:
        return self.facets_containing((vertex,))

    def is_subcomplex(self, L: "SimplicialComplex") -> bool:
        return all(self.has_face(f) for f in L.facets)

    def is_full_subcomplex(self, L: "SimplicialComplex") -> bool:
        verts = set(L.vertices)
        for f in self.faces():
            if set(f) <= verts and not L.has_face(f):
                return False
        return True

    def induced(self, vertices: Iterable[int]) -> "SimplicialComplex":
        vs = set(vertices)
        return SimplicialComplex([f for f in self.faces() if set(f) <= vs], self.n_vertices, self.labels)

    def components(self) -> list[set[int]]:
        parent = {v: v for v in self.vertices}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for f in self.facets:
            r = find(f[0])
            for v in f[1:]:
                s = find(v)
                if s != r:
                    parent[s] = r
        comps: dict[int, set[int]] = {}
        for v in self.vertices:
            comps.setdefault(find(v), set()).add(v)
        return sorted(comps.values(), key=min)

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def relabel(self) -> "SimplicialComplex":
        """Compact vertex indices to 0..v-1, keeping labels."""
        vs = self.vertices
        pos = {v: i for i, v in enumerate(vs)}
        labels = [self.labels[v] for v in vs] if self.labels is not None else None
        return SimplicialComplex([[pos[v] for v in f] for f in self.facets], len(vs), labels,
                                 assume_maximal=True)

    def __eq__(self, other):
        return isinstance(other, SimplicialComplex) and self.facets == other.facets

    def __hash__(self):
        return hash(self.facets)

    def __repr__(self):
        return f"SimplicialComplex(dim={self.dim}, f={self.f_vector()})"


def build_complex(facets: Iterable[Iterable[int]], n_vertices: int | None = None) -> SimplicialComplex:
    facets = [list(f) for f in facets]
    if not facets:
        raise ComplexError("empty facet list")
    for f in facets:
        for v in f:
            if isinstance(v, bool) or not isinstance(v, int) or v < 0:
                raise ComplexError(f"bad vertex index {v!r}")
    return SimplicialComplex(facets, n_vertices)
