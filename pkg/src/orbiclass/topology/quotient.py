"""
Quotients of simplicial complexes by simplicial group actions.

The complex is subdivided twice before taking orbits; after that the
orbit complex is a simplicial complex and the projection is simplicial.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .complex import ComplexError, SimplicialComplex
from .constructions import barycentric_subdivision

__all__ = ["SimplicialAction", "InvalidAction", "quotient", "lift_action", "orbit_complex"]


class InvalidAction(ComplexError):
    pass


@dataclass
class SimplicialAction:
    """A group acting on vertices, given by generator permutations
    (image lists)."""

    n_vertices: int
    generators: list[tuple[int, ...]]
    labels: list[str] | None = None

    def __post_init__(self):
        self.generators = [tuple(p) for p in self.generators]
        for i, p in enumerate(self.generators):
            if sorted(p) != list(range(self.n_vertices)):
                raise InvalidAction(f"generator {i} is not a permutation of {self.n_vertices} vertices")

    def validate(self, K: SimplicialComplex) -> None:
        if K.n_vertices != self.n_vertices:
            raise InvalidAction("action and complex disagree on the vertex count")
        fs = set(K.facets)
        for i, p in enumerate(self.generators):
            for F in K.facets:
                img = tuple(sorted(p[v] for v in F))
                if img not in fs:
                    raise InvalidAction(f"generator {i} maps facet {F} to the non-facet {img}")

    def orbits(self) -> list[int]:
        """Representative (smallest vertex) of each vertex's orbit."""
        parent = list(range(self.n_vertices))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for p in self.generators:
            for v, w in enumerate(p):
                a, b = find(v), find(w)
                if a != b:
                    if a < b:
                        parent[b] = a
                    else:
                        parent[a] = b
        return [find(v) for v in range(self.n_vertices)]

    def group_elements(self, limit: int = 1_000_000) -> list[tuple[int, ...]]:
        ident = tuple(range(self.n_vertices))
        seen = {ident}
        out = [ident]
        frontier = [ident]
        while frontier:
            nxt = []
            for x in frontier:
                for p in self.generators:
                    y = tuple(p[v] for v in x)
                    if y not in seen:
                        seen.add(y)
                        out.append(y)
                        nxt.append(y)
                        if len(out) > limit:
                            raise InvalidAction("action group too large")
            frontier = nxt
        return out


def lift_action(action: SimplicialAction, faces: Sequence[tuple[int, ...]]) -> SimplicialAction:
    """Induced action on the barycentric subdivision (vertices = faces)."""
    pos = {f: i for i, f in enumerate(faces)}
    gens = []
    for p in action.generators:
        gens.append(tuple(pos[tuple(sorted(p[v] for v in f))] for f in faces))
    return SimplicialAction(len(faces), gens, action.labels)


def orbit_complex(K: SimplicialComplex, action: SimplicialAction) -> tuple[SimplicialComplex, list[int]]:
    """Image of K under the orbit map, without subdividing."""
    reps = action.orbits()
    ids: dict[int, int] = {}
    for r in reps:
        if r not in ids:
            ids[r] = len(ids)
    proj = [ids[r] for r in reps]
    facets = set()
    for F in K.facets:
        img = tuple(sorted({proj[v] for v in F}))
        if len(img) != len(F):
            raise InvalidAction(f"facet {F} collapses under the orbit map; subdivide first")
        facets.add(img)
    labels = None
    if K.labels is not None:
        labels = [None] * len(ids)
        for v, q in enumerate(proj):
            if labels[q] is None:
                labels[q] = K.labels[v]
    return SimplicialComplex(facets, len(ids), labels), proj


def quotient(K: SimplicialComplex, action: SimplicialAction,
             subdivisions: int = 2) -> tuple[SimplicialComplex, list[int], SimplicialComplex]:
    """Orbit complex of the ``subdivisions``-fold barycentric subdivision.

    Returns (quotient complex, projection on vertices of the subdivided
    complex, subdivided complex).
    """
    action.validate(K)
    L, act = K, action
    for _ in range(subdivisions):
        L, faces = barycentric_subdivision(L)
        act = lift_action(act, faces)
    Q, proj = orbit_complex(L, act)
    return Q, proj, L
