"""
Standard constructions on simplicial complexes.

Every result carries vertex labels saying where each vertex came from:
``("apex",)``, ``("pole", i)``, ``(side, v)``, ``("copy", c, v)``,
``("pair", a, b)`` or, for subdivisions, the face of the old complex.
"""

from __future__ import annotations

from itertools import permutations
from typing import Sequence

from .complex import ComplexError, SimplicialComplex

__all__ = [
    "cone",
    "suspension",
    "join",
    "product",
    "barycentric_subdivision",
    "double_along",
    "double_with_map",
    "subdivide_pair",
    "disjoint_union",
    "swap_copies",
    "apply_vertex_map",
]


def _compact(K: SimplicialComplex) -> SimplicialComplex:
    return K if K.vertices == tuple(range(K.n_vertices)) else K.relabel()


def _label(K: SimplicialComplex, v: int):
    return K.labels[v] if K.labels is not None else v


def cone(K: SimplicialComplex) -> SimplicialComplex:
    """Cone with apex as the last vertex."""
    K = _compact(K)
    a = K.n_vertices
    labels = [("base", _label(K, v)) for v in range(a)] + [("apex",)]
    if K.is_empty():
        return SimplicialComplex([(a,)], a + 1, labels)
    return SimplicialComplex([f + (a,) for f in K.facets], a + 1, labels, assume_maximal=True)


def join(K: SimplicialComplex, L: SimplicialComplex) -> SimplicialComplex:
    K, L = _compact(K), _compact(L)
    off = K.n_vertices
    labels = [("left", _label(K, v)) for v in range(off)] + \
             [("right", _label(L, v)) for v in range(L.n_vertices)]
    if K.is_empty():
        facets = [tuple(v + off for v in g) for g in L.facets]
    elif L.is_empty():
        facets = list(K.facets)
    else:
        facets = [f + tuple(v + off for v in g) for f in K.facets for g in L.facets]
    return SimplicialComplex(facets, off + L.n_vertices, labels, assume_maximal=True)


def suspension(K: SimplicialComplex) -> SimplicialComplex:
    S0 = SimplicialComplex([(0,), (1,)], 2, [("pole", 0), ("pole", 1)])
    return join(K, S0)


def disjoint_union(K: SimplicialComplex, L: SimplicialComplex) -> SimplicialComplex:
    K, L = _compact(K), _compact(L)
    off = K.n_vertices
    labels = [(0, _label(K, v)) for v in range(off)] + [(1, _label(L, v)) for v in range(L.n_vertices)]
    facets = list(K.facets) + [tuple(v + off for v in g) for g in L.facets]
    return SimplicialComplex(facets, off + L.n_vertices, labels, assume_maximal=True)


def _staircases(p: int, q: int):
    """Monotone lattice paths from (0, 0) to (p, q)."""
    if p == 0 and q == 0:
        yield [(0, 0)]
        return
    if p > 0:
        for path in _staircases(p - 1, q):
            yield path + [(p, q)]
    if q > 0:
        for path in _staircases(p, q - 1):
            yield path + [(p, q)]


def product(K: SimplicialComplex, L: SimplicialComplex) -> SimplicialComplex:
    """Staircase triangulation of |K| x |L| using the vertex orders."""
    K, L = _compact(K), _compact(L)
    nl = L.n_vertices
    labels = [("pair", _label(K, a), _label(L, b)) for a in range(K.n_vertices) for b in range(nl)]
    facets = []
    for f in K.facets:
        for g in L.facets:
            for path in _staircases(len(f) - 1, len(g) - 1):
                facets.append(tuple(f[i] * nl + g[j] for i, j in path))
    return SimplicialComplex(facets, K.n_vertices * nl, labels, assume_maximal=True)


def barycentric_subdivision(K: SimplicialComplex) -> tuple[SimplicialComplex, list[tuple[int, ...]]]:
    """Returns the subdivision and its vertex list (vertex i is the barycenter
    of the i-th face of K in ``K.faces()`` order)."""
    faces = K.faces()
    pos = {f: i for i, f in enumerate(faces)}
    facets = []
    for F in K.facets:
        for perm in permutations(F):
            chain = []
            for k in range(1, len(perm) + 1):
                chain.append(pos[tuple(sorted(perm[:k]))])
            facets.append(tuple(sorted(chain)))
    labels = [tuple(_label(K, v) for v in f) for f in faces]
    return SimplicialComplex(facets, len(faces), labels, assume_maximal=True), faces


def double_with_map(K: SimplicialComplex, L: SimplicialComplex) -> tuple[SimplicialComplex, dict]:
    """Two copies of K glued along L, which must be full in K.  Also
    returns the map (copy, vertex of K) -> vertex of the double."""
    glued = set(L.vertices)
    n = K.n_vertices
    index = {}
    labels = []
    for c in (0, 1):
        for v in range(n):
            if v in glued and c == 1:
                index[(c, v)] = index[(0, v)]
                continue
            index[(c, v)] = len(labels)
            labels.append(("glued", _label(K, v)) if v in glued else ("copy", c, _label(K, v)))
    facets = [tuple(index[(c, v)] for v in F) for c in (0, 1) for F in K.facets]
    return SimplicialComplex(facets, len(labels), labels), index


def subdivide_pair(K: SimplicialComplex, L: SimplicialComplex):
    """Barycentric subdivision of K with the induced (full) subdivision of
    L; also returns the face list indexing the new vertices."""
    K2, faces = barycentric_subdivision(K)
    lf = L.face_set
    keep = {i for i, f in enumerate(faces) if f in lf}
    L2 = SimplicialComplex([f for f in K2.faces() if set(f) <= keep], K2.n_vertices)
    return K2, L2, faces


def double_along(K: SimplicialComplex, L: SimplicialComplex) -> SimplicialComplex:
    """Two copies of K glued along the subcomplex L.

    Gluing identifies vertices, which is only faithful when L is a full
    subcomplex; otherwise both are subdivided once first (the subdivision
    of a subcomplex is always full).
    """
    if not K.is_subcomplex(L):
        raise ComplexError("not a subcomplex")
    if L.is_empty():
        return disjoint_union(K, K)
    if not K.is_full_subcomplex(L):
        K, L, _ = subdivide_pair(K, L)
    return double_with_map(K, L)[0]


def swap_copies(D: SimplicialComplex) -> list[int]:
    """The involution of a double exchanging the two copies, as a vertex map."""
    pos = {lab: i for i, lab in enumerate(D.labels)}
    out = []
    for lab in D.labels:
        if lab[0] == "copy":
            out.append(pos[("copy", 1 - lab[1], lab[2])])
        else:
            out.append(pos[lab])
    return out


def apply_vertex_map(K: SimplicialComplex, vmap: Sequence[int]) -> SimplicialComplex:
    return SimplicialComplex([[vmap[v] for v in f] for f in K.facets], K.n_vertices, K.labels)
