"""
Homology manifold tests on simplicial complexes.

Local homology is constant on open simplices, and at an interior point of
a d-face s it equals the reduced homology of link(s) shifted up by d + 1.
So checking every face's link is the same as checking every point.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .complex import SimplicialComplex
from .constructions import double_with_map, subdivide_pair
from .homology import homology

__all__ = [
    "ManifoldResult",
    "face_type",
    "is_homology_manifold",
    "is_homology_manifold_with_boundary",
    "open_star_is_homology_manifold",
    "open_star_with_boundary",
]


@dataclass
class ManifoldResult:
    ok: bool
    witness: tuple[int, ...] | None = None
    reason: str = ""
    boundary: SimplicialComplex | None = None

    def __bool__(self):
        return self.ok

    def to_json(self) -> dict:
        out = {"manifold": self.ok}
        if self.witness is not None:
            out["witness"] = list(self.witness)
        if self.reason:
            out["reason"] = self.reason
        if self.boundary is not None:
            out["boundary_facets"] = [list(f) for f in self.boundary.facets]
        return out


def face_type(K: SimplicialComplex, face, n: int) -> str:
    """'interior' if the link has the homology of S^(n-d-1), 'boundary' if
    it is acyclic, else 'singular'."""
    face = tuple(sorted(face))
    h = homology(K.link(face), reduced=True)
    if h.is_sphere(n - len(face)):
        return "interior"
    if h.is_acyclic():
        return "boundary"
    return "singular"


def _faces_to_check(K: SimplicialComplex, region: Iterable[int] | None):
    if region is None:
        return K.faces()
    reg = set(region)
    return [f for f in K.faces() if reg & set(f)]


def is_homology_manifold(K: SimplicialComplex, n: int, region: Iterable[int] | None = None) -> ManifoldResult:
    """Every face link has the reduced homology of a sphere of dimension
    n - dim(face) - 1.  With ``region``, only faces touching those vertices
    are checked, i.e. the open star of the region."""
    if K.is_empty():
        return ManifoldResult(False, None, "empty complex")
    if not K.is_pure() or K.dim != n:
        return ManifoldResult(False, None, f"not pure of dimension {n}")
    for f in _faces_to_check(K, region):
        if not homology(K.link(f), reduced=True).is_sphere(n - len(f)):
            return ManifoldResult(False, f, "link is not a homology sphere")
    return ManifoldResult(True)


def open_star_is_homology_manifold(K: SimplicialComplex, vertex: int, n: int) -> ManifoldResult:
    """Homology manifold test for the open star of one vertex (for a cone
    with that apex: the open cone)."""
    return is_homology_manifold(K, n, region=[vertex])


def is_homology_manifold_with_boundary(K: SimplicialComplex, n: int,
                                       region: Iterable[int] | None = None) -> ManifoldResult:
    """Faces split into interior (sphere links) and boundary (acyclic
    links); the boundary must be a homology (n-1)-manifold and the double
    along it a homology n-manifold.  ``region`` restricts every check to
    the open star of those vertices."""
    if K.is_empty():
        return ManifoldResult(False, None, "empty complex")
    if not K.is_pure() or K.dim != n:
        return ManifoldResult(False, None, f"not pure of dimension {n}")
    checked = _faces_to_check(K, region)
    if not checked:
        return ManifoldResult(False, None, "region is empty")
    bfaces = []
    interior = 0
    for f in checked:
        t = face_type(K, f, n)
        if t == "singular":
            return ManifoldResult(False, f, "link is neither a homology sphere nor acyclic")
        if t == "boundary":
            bfaces.append(f)
        else:
            interior += 1
    if not interior:
        return ManifoldResult(False, None, "no interior points")
    if not bfaces:
        return ManifoldResult(True, boundary=SimplicialComplex([], K.n_vertices))
    bset = set(bfaces)
    reg = set(region) if region is not None else None
    for f in bfaces:
        for k in range(len(f)):
            sub = f[:k] + f[k + 1:]
            if sub and sub not in bset and (reg is None or reg & set(sub)):
                return ManifoldResult(False, f, "boundary faces do not form a subcomplex")
    dB = SimplicialComplex(bfaces, K.n_vertices)
    if n > 0:
        r = is_homology_manifold(dB, n - 1, region)
        if not r:
            return ManifoldResult(False, r.witness, "boundary is not a homology manifold: " + r.reason)
    D, dreg = _double_and_region(K, dB, region)
    r = is_homology_manifold(D, n, dreg)
    if not r:
        return ManifoldResult(False, None, "double along the boundary is not a homology manifold")
    return ManifoldResult(True, boundary=dB)


def _double_and_region(K, L, region):
    if not K.is_full_subcomplex(L):
        K, L, faces = subdivide_pair(K, L)
        if region is not None:
            # open star of v in K = union of open simplices of sd K whose top face contains v
            reg = set(region)
            region = [i for i, f in enumerate(faces) if reg & set(f)]
    D, index = double_with_map(K, L)
    if region is not None:
        region = sorted({index[(c, v)] for v in region for c in (0, 1)})
    return D, region


def open_star_with_boundary(K: SimplicialComplex, vertex: int, n: int) -> ManifoldResult:
    """With-boundary test on the open star of one vertex (the open cone
    when K is a cone with that apex)."""
    return is_homology_manifold_with_boundary(K, n, region=[vertex])
