import pytest

from orbiclass.catalog import (
    FamilySpec,
    UnknownFamily,
    family_order,
    make_family,
    parse_family,
    unit_icosians,
)
from orbiclass.classifier import recognize_poincare
from orbiclass.groups import closure, orientation_subgroup
from orbiclass.linalg import Subspace

SPECS = [
    "trivial(3)",
    "cyclic_rotation(1)",
    "cyclic_rotation(5)",
    "cyclic_rotation(12)",
    "dihedral(1)",
    "dihedral(2)",
    "dihedral(7)",
    "signed_permutation_reflections(1)",
    "signed_permutation_reflections(4)",
    "permutation_reflections(1)",
    "permutation_reflections(4)",
    "negative_identity(4)",
    "binary_icosahedral()",
    "rotation_subgroup(dihedral(6))",
    "rotation_subgroup(signed_permutation_reflections(3))",
    "rotation_subgroup(permutation_reflections(4))",
    "direct_sum(dihedral(3), cyclic_rotation(4))",
    "direct_sum(signed_permutation_reflections(2), binary_icosahedral())",
]


@pytest.mark.parametrize("spec", SPECS)
def test_generators_orthogonal_and_order_matches_closed_form(spec):
    gens = make_family(spec)
    for g in gens:
        assert g.is_real() and g.is_orthogonal()
    assert closure(gens).order == family_order(spec)


def test_cyclic_rotation_is_order_five():
    (g,) = make_family("cyclic_rotation(5)")
    assert g.shape == (2, 2)
    p = g
    for _ in range(4):
        assert not p.is_zero() and p != p.identity(2)
        p = p @ g
    assert p == p.identity(2)


def test_conductors_are_minimal():
    # cos and sin of 2 pi / 5 together need Q(zeta_20); quarter turns stay rational
    assert parse_family("cyclic_rotation(5)").conductor == 20
    assert parse_family("cyclic_rotation(4)").conductor == 1
    assert parse_family("dihedral(3)").conductor == 12
    assert parse_family("binary_icosahedral()").conductor == 5
    assert parse_family("signed_permutation_reflections(3)").conductor == 1


def test_binary_icosahedral_is_poincare():
    G = closure(make_family("binary_icosahedral()"))
    assert G.order == 120
    assert recognize_poincare(G, Subspace.whole(4))


def test_unit_icosians_are_unit_quaternions():
    qs = unit_icosians()
    assert len(qs) == 120 and len(set(tuple(x.coords for x in q) for q in qs)) == 120
    for q in qs:
        assert sum((x * x for x in q[1:]), q[0] * q[0]) == 1


@pytest.mark.parametrize("m", [2, 3, 5, 8])
def test_rotation_subgroup_of_dihedral_is_cyclic(m):
    R = closure(make_family(f"rotation_subgroup(dihedral({m}))"))
    C = closure(make_family(f"cyclic_rotation({m})"))
    assert R.same_elements(C)
    assert orientation_subgroup(closure(make_family(f"dihedral({m})"))).same_elements(C)


def test_direct_sum_blocks():
    gens = make_family("direct_sum(signed_permutation_reflections(2), binary_icosahedral())")
    assert all(g.shape == (6, 6) for g in gens)
    assert closure(gens).order == 8 * 120


def test_spec_round_trip():
    for s in SPECS:
        assert str(parse_family(str(parse_family(s)))) == str(parse_family(s))
    assert parse_family("dihedral( 4 )") == FamilySpec("dihedral", (4,))


@pytest.mark.parametrize("bad", ["nope(3)", "dihedral(0)", "dihedral(-2)", "dihedral(2, 3)", "dihedral(x)",
                                 "dihedral(1.5)", "direct_sum()", "dihedral(", "binary_icosahedral(2)"])
def test_invalid_specs(bad):
    with pytest.raises(ValueError):
        make_family(bad)


def test_unknown_family_type():
    with pytest.raises(UnknownFamily):
        parse_family("e8()")
