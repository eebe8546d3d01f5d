import pytest

from orbiclass.topology import (
    SimplicialComplex,
    cone,
    homology,
    is_homology_manifold,
    is_homology_manifold_with_boundary,
    open_star_is_homology_manifold,
    quotient,
)
from orbiclass.topology.fixtures import antipodal_action, cross_polytope_boundary, polygon, simplex

from complex_corpus import (
    corpus,
    cone_boundary_checks,
    cone_checks,
    double_checks,
    product_boundary_checks,
    product_checks,
)


def rp2_quotient():
    return quotient(cross_polytope_boundary(3), antipodal_action(3))[0]


def test_octahedron_is_manifold():
    assert is_homology_manifold(cross_polytope_boundary(3), 2)


def test_triangle_is_not_closed_manifold():
    r = is_homology_manifold(simplex(2), 2)
    assert not r and r.witness == (0,)


def test_impure_answers_no():
    K = SimplicialComplex([(0, 1, 2), (2, 3)])
    assert not is_homology_manifold(K, 2)
    assert not is_homology_manifold_with_boundary(K, 2)


def test_cone_over_rp2_fails_at_apex():
    C = cone(rp2_quotient())
    apex = C.n_vertices - 1
    r = open_star_is_homology_manifold(C, apex, 3)
    assert not r and r.witness == (apex,)
    assert homology(C.link((apex,)), reduced=True).torsion[1] == (2,)


def test_triangle_with_boundary():
    r = is_homology_manifold_with_boundary(simplex(2), 2)
    assert r and r.boundary.facets == polygon(3).facets


def test_octahedron_with_empty_boundary():
    r = is_homology_manifold_with_boundary(cross_polytope_boundary(3), 2)
    assert r and r.boundary.is_empty()


def test_closed_cone_over_rp2_fails_with_boundary():
    r = is_homology_manifold_with_boundary(cone(rp2_quotient()), 3)
    assert not r and "neither" in r.reason


def test_all_boundary_refused():
    # two triangles glued at a vertex: the shared vertex has a disconnected link
    K = SimplicialComplex([(0, 1, 2), (0, 3, 4)])
    r = is_homology_manifold_with_boundary(K, 2)
    assert not r and r.witness == (0,)


@pytest.mark.parametrize("name", sorted(corpus()))
def test_corpus_labels(name):
    K, n, closed, with_boundary = corpus()[name]
    assert bool(is_homology_manifold(K, n)) == closed
    assert bool(is_homology_manifold_with_boundary(K, n)) == with_boundary


@pytest.mark.parametrize("checks", [product_checks, product_boundary_checks, cone_checks, cone_boundary_checks,
                                    double_checks])
def test_product_cone_double_equivalences(checks):
    results = checks(corpus())
    assert results
    assert [name for name, ok in results if not ok] == []


def test_cone_check_exercises_both_directions():
    items = corpus()
    spheres = [n for n, (K, d, *_) in items.items() if homology(K).is_sphere(d) and is_homology_manifold(K, d)]
    others = [n for n in items if n not in spheres]
    assert len(spheres) >= 4 and len(others) >= 4
