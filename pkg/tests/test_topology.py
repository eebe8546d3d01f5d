import pytest
import sympy
from hypothesis import given, settings, strategies as st
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from orbiclass.topology import (
    ComplexError,
    SimplicialComplex,
    barycentric_subdivision,
    build_complex,
    cone,
    double_along,
    homology,
    join,
    product,
    smith_normal_form,
    suspension,
)
from orbiclass.topology.constructions import apply_vertex_map, swap_copies
from orbiclass.topology.fixtures import (
    cross_polytope_boundary,
    polygon,
    rp2_six_vertex,
    simplex,
    simplex_boundary,
)
from orbiclass.topology.homology import boundary_columns, elementary_divisors

from complex_corpus import corpus


def sympy_invariants(rows, ncols):
    if not rows or not ncols:
        return []
    M = sympy.Matrix(rows)
    D = sympy_snf(M, domain=sympy.ZZ)
    return sorted(abs(int(D[i, i])) for i in range(min(D.shape)) if D[i, i] != 0)


def oracle_homology(K):
    """Betti numbers and torsion from sympy's Smith form of dense boundary matrices."""
    d = K.dim
    fv = K.f_vector()
    ranks, tors = [0] * (d + 2), [[] for _ in range(d + 2)]
    for k in range(1, d + 1):
        cols = boundary_columns(K, k)
        rows = [[cols[j].get(i, 0) for j in range(len(cols))] for i in range(fv[k - 1])]
        inv = sympy_invariants(rows, len(cols))
        ranks[k] = len(inv)
        tors[k - 1] = [x for x in inv if x > 1]
    betti = [fv[k] - ranks[k] - ranks[k + 1] for k in range(d + 1)]
    return betti, [tuple(t) for t in tors[: d + 1]]


# complexes and faces

def test_build_complex_examples():
    assert build_complex([(0, 1, 2)]).f_vector() == (3, 3, 1)
    assert build_complex(simplex_boundary(3).facets).f_vector() == (4, 6, 4)
    O = cross_polytope_boundary(3)
    assert (O.n_vertices, len(O.facets)) == (6, 8)


def test_build_complex_absorbs_non_maximal():
    K = build_complex([(0, 1, 2), (0, 1), (2,), (2, 3)])
    assert K.facets == ((0, 1, 2), (2, 3))


@pytest.mark.parametrize("bad", [[], [(0, -1)], [()], [(0, 1.5)]])
def test_build_complex_rejects(bad):
    with pytest.raises(ComplexError):
        build_complex(bad)


def test_link_examples():
    O = cross_polytope_boundary(3)
    L = O.link((0,))
    assert L.f_vector() == (4, 4) and homology(L).betti == (1, 1)
    T = simplex_boundary(3)
    assert T.link((0, 1)).facets == ((2,), (3,))
    assert T.link((0, 1, 2)).is_empty()
    with pytest.raises(ComplexError):
        T.link((0, 1, 2, 3))


def test_subcomplex_queries():
    T = simplex(2)
    B = polygon(3)
    assert T.is_subcomplex(B) and T.is_full_subcomplex(SimplicialComplex([(0, 1)]))
    assert not T.is_full_subcomplex(B)


# homology

def test_homology_examples():
    assert homology(cross_polytope_boundary(3)).describe() == ["Z", "0", "Z"]
    assert homology(simplex(0)).describe() == ["Z"]
    assert homology(rp2_six_vertex()).describe() == ["Z", "Z/2", "0"]
    assert homology(product(polygon(3), polygon(3))).describe() == ["Z", "Z^2", "Z"]


def test_reduced_homology():
    h = homology(simplex_boundary(3), reduced=True)
    assert h.betti == (0, 0, 1) and h.is_sphere(2)
    assert homology(simplex(3), reduced=True).is_acyclic()
    e = homology(SimplicialComplex([]), reduced=True)
    assert e.is_sphere(-1) and not e.is_acyclic()


@pytest.mark.parametrize("name", sorted(corpus()))
def test_homology_matches_sympy_oracle(name):
    K = corpus()[name][0]
    h = homology(K)
    betti, tors = oracle_homology(K)
    assert list(h.betti) == betti
    assert [tuple(t) for t in h.torsion] == tors
    # Euler characteristic two ways
    assert sum((-1) ** i * b for i, b in enumerate(h.betti)) == K.euler_characteristic()


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 5), st.integers(1, 5), st.lists(st.integers(-6, 6), min_size=25, max_size=25))
def test_smith_normal_form_against_sympy(r, c, vals):
    rows = [vals[i * c:(i + 1) * c] for i in range(r)]
    mine = smith_normal_form(rows)
    assert mine == sympy_invariants(rows, c)
    for a, b in zip(mine, mine[1:]):
        assert b % a == 0
    cols = [{i: rows[i][j] for i in range(r) if rows[i][j]} for j in range(c)]
    assert sorted(elementary_divisors(cols)) == mine


# constructions

def test_cone_of_s0_is_interval():
    S0 = SimplicialComplex([(0,), (1,)])
    assert cone(S0).facets == ((0, 2), (1, 2))


def test_double_of_triangle_is_sphere():
    T = simplex(2)
    D = double_along(T, polygon(3))
    assert homology(D).describe() == ["Z", "0", "Z"]


def test_double_along_non_full_subcomplex_subdivides():
    # the boundary of an edge's star is not full in a single triangle
    T = simplex(2)
    L = SimplicialComplex([(0, 1), (1, 2)])
    D = double_along(T, L)
    assert homology(D).describe() == ["Z", "0", "0"]
    with pytest.raises(ComplexError):
        double_along(T, SimplicialComplex([(0, 5)]))


def test_double_swap_symmetry():
    A = product(polygon(3), simplex(1))
    B = SimplicialComplex([f for f in A.faces(1) if all(v % 2 == 0 for v in f)], A.n_vertices)
    D = double_along(A, B)
    sigma = swap_copies(D)
    assert sorted(sigma) == list(range(D.n_vertices))
    assert all(sigma[sigma[v]] == v for v in range(D.n_vertices))
    S = apply_vertex_map(D, sigma)
    assert S.face_set == D.face_set
    assert homology(S) == homology(D)


def test_suspension_of_octahedron_is_s3():
    assert homology(suspension(cross_polytope_boundary(3))).describe() == ["Z", "0", "0", "Z"]


def test_join_of_circles_is_s3():
    J = join(polygon(3), polygon(4))
    assert J.dim == 3 and homology(J).describe() == ["Z", "0", "0", "Z"]


def test_product_of_intervals_is_square():
    P = product(simplex(1), simplex(1))
    assert P.facets == ((0, 1, 3), (0, 2, 3))


def test_barycentric_subdivision_counts():
    sd, faces = barycentric_subdivision(simplex(2))
    assert sd.f_vector() == (7, 12, 6)
    assert len(faces) == 7
    sd2, _ = barycentric_subdivision(simplex_boundary(3))
    assert homology(sd2) == homology(simplex_boundary(3))


def test_barycentric_subdivision_facet_count_formula():
    # each d-simplex splits into (d+1)! pieces
    for d in range(1, 5):
        sd, _ = barycentric_subdivision(simplex(d))
        n = 1
        for k in range(2, d + 2):
            n *= k
        assert len(sd.facets) == n
