"""Simplicial complexes, homology, quotients and fundamental groups."""

from .complex import ComplexError, SimplicialComplex, build_complex
from .constructions import (
    barycentric_subdivision,
    cone,
    disjoint_union,
    double_along,
    join,
    product,
    suspension,
)
from .homology import HomologyResult, homology, smith_normal_form
from .manifold import (
    ManifoldResult,
    is_homology_manifold,
    is_homology_manifold_with_boundary,
    open_star_is_homology_manifold,
    open_star_with_boundary,
)
from .presentation import (
    EnumerationResult,
    Presentation,
    coset_enumeration,
    pi1_presentation,
    simplify,
)
from .quotient import InvalidAction, SimplicialAction, quotient

__all__ = [
    "ComplexError",
    "SimplicialComplex",
    "build_complex",
    "barycentric_subdivision",
    "cone",
    "disjoint_union",
    "double_along",
    "join",
    "product",
    "suspension",
    "HomologyResult",
    "homology",
    "smith_normal_form",
    "ManifoldResult",
    "is_homology_manifold",
    "is_homology_manifold_with_boundary",
    "open_star_is_homology_manifold",
    "open_star_with_boundary",
    "EnumerationResult",
    "Presentation",
    "coset_enumeration",
    "pi1_presentation",
    "simplify",
    "InvalidAction",
    "SimplicialAction",
    "quotient",
]
