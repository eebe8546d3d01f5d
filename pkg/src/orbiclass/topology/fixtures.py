"""
Named complexes and actions used by checks and the CLI.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, product as iproduct

from ..catalog import icosian_generators, unit_icosians
from ..cyclotomic import Scalar, compare_real
from .complex import ComplexError, SimplicialComplex
from .quotient import SimplicialAction

__all__ = [
    "simplex",
    "simplex_boundary",
    "cross_polytope_boundary",
    "signed_permutation_action",
    "antipodal_action",
    "polygon",
    "polygon_rotation",
    "rp2_six_vertex",
    "cell600",
    "cell600_action",
    "FIXTURES",
    "get_fixture",
]


def simplex(d: int) -> SimplicialComplex:
    return SimplicialComplex([tuple(range(d + 1))])


def simplex_boundary(d: int) -> SimplicialComplex:
    """Boundary of the d-simplex, a triangulated S^(d-1)."""
    verts = range(d + 1)
    return SimplicialComplex(list(combinations(verts, d)), d + 1)


def cross_polytope_boundary(n: int) -> SimplicialComplex:
    """Boundary of the n-dimensional cross-polytope (an S^(n-1)).  Vertex
    2i is +e_i and 2i+1 is -e_i."""
    if n < 1:
        raise ComplexError("n must be positive")
    facets = [tuple(2 * i + s for i, s in enumerate(signs)) for signs in iproduct((0, 1), repeat=n)]
    labels = [("+" if v % 2 == 0 else "-") + f"e{v // 2}" for v in range(2 * n)]
    return SimplicialComplex(facets, 2 * n, labels)


def signed_permutation_action(n: int) -> SimplicialAction:
    gens = []
    for i in range(n - 1):
        p = list(range(2 * n))
        p[2 * i], p[2 * i + 2] = p[2 * i + 2], p[2 * i]
        p[2 * i + 1], p[2 * i + 3] = p[2 * i + 3], p[2 * i + 1]
        gens.append(tuple(p))
    p = list(range(2 * n))
    p[2 * n - 2], p[2 * n - 1] = p[2 * n - 1], p[2 * n - 2]
    gens.append(tuple(p))
    return SimplicialAction(2 * n, gens)


def antipodal_action(n: int) -> SimplicialAction:
    """x -> -x on the cross-polytope boundary."""
    return SimplicialAction(2 * n, [tuple(v ^ 1 for v in range(2 * n))])


def polygon(m: int) -> SimplicialComplex:
    if m < 3:
        raise ComplexError("a polygon needs at least 3 vertices")
    return SimplicialComplex([(i, (i + 1) % m) for i in range(m)], m)


def polygon_rotation(m: int, step: int = 1) -> SimplicialAction:
    return SimplicialAction(m, [tuple((v + step) % m for v in range(m))])


def rp2_six_vertex() -> SimplicialComplex:
    """The 6-vertex real projective plane (half icosahedron)."""
    return SimplicialComplex([
        (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 1, 5),
        (1, 2, 4), (2, 3, 5), (1, 3, 4), (2, 4, 5), (1, 3, 5),
    ], 6)


def _qmul(p, q):
    a1, b1, c1, d1 = p
    a2, b2, c2, d2 = q
    return (
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


def _qkey(q):
    return tuple(x.promote(5).coords for x in q)


@lru_cache(maxsize=1)
def _cell600_data():
    verts = unit_icosians()
    pos = {_qkey(q): i for i, q in enumerate(verts)}
    one = Scalar.rational(1)
    ident = pos[_qkey((one, Scalar.rational(0), Scalar.rational(0), Scalar.rational(0)))]
    # inner product with 1 is the real part; nearest neighbours maximize it
    reals = [(verts[i][0], i) for i in range(len(verts)) if i != ident]
    best = reals[0][0]
    for x, _ in reals[1:]:
        if compare_real(x, best) > 0:
            best = x
    nbrs = [i for x, i in reals if x == best]

    def inner(p, q):
        return p[0] * q[0] + p[1] * q[1] + p[2] * q[2] + p[3] * q[3]

    adj = {i: {j for j in nbrs if j > i and inner(verts[i], verts[j]) == best} for i in nbrs}
    star = []
    for a in nbrs:
        for b in adj[a]:
            for c in adj[a] & adj[b]:
                star.append((ident, a, b, c))
    facets = set()
    for g in verts:
        for T in star:
            facets.add(tuple(sorted(pos[_qkey(_qmul(g, verts[v]))] for v in T)))
    gens = []
    for s in icosian_generators():
        gens.append(tuple(pos[_qkey(_qmul(s, q))] for q in verts))
    return verts, sorted(facets), gens


def cell600() -> SimplicialComplex:
    """Boundary complex of the 600-cell on the 120 unit icosians."""
    verts, facets, _ = _cell600_data()
    K = SimplicialComplex(facets, len(verts), assume_maximal=True)
    if K.f_vector() != (120, 720, 1200, 600):
        raise ComplexError(f"600-cell construction failed: f-vector {K.f_vector()}")
    return K


def cell600_action() -> SimplicialAction:
    """Left multiplication by the binary icosahedral group."""
    verts, _, gens = _cell600_data()
    return SimplicialAction(len(verts), list(gens))


FIXTURES = {
    "point": (lambda: simplex(0), None),
    "interval": (lambda: simplex(1), None),
    "triangle": (lambda: simplex(2), None),
    "tetrahedron": (lambda: simplex(3), None),
    "tetrahedron_boundary": (lambda: simplex_boundary(3), None),
    "octahedron": (lambda: cross_polytope_boundary(3), lambda: antipodal_action(3)),
    "cross_polytope_4": (lambda: cross_polytope_boundary(4), lambda: antipodal_action(4)),
    "rp2": (rp2_six_vertex, None),
    "circle3": (lambda: polygon(3), None),
    "hexagon": (lambda: polygon(6), lambda: polygon_rotation(6)),
    "cell600": (cell600, cell600_action),
}


def get_fixture(name: str):
    """(complex, action or None) for a fixture name; polygons as 'polygon:m',
    cross-polytopes as 'cross_polytope:n'."""
    if name.startswith("polygon:"):
        m = int(name.split(":", 1)[1])
        return polygon(m), polygon_rotation(m)
    if name.startswith("cross_polytope:"):
        n = int(name.split(":", 1)[1])
        return cross_polytope_boundary(n), antipodal_action(n)
    try:
        mk, act = FIXTURES[name]
    except KeyError:
        raise ComplexError(f"unknown fixture {name!r}") from None
    return mk(), (act() if act else None)
