"""
Generator matrices for the group families used in checks and examples.

Families are addressed by call-like strings such as ``"dihedral(4)"`` or
``"direct_sum(binary_icosahedral(), signed_permutation_reflections(1))"``.
"""

from __future__ import annotations

import ast
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from .cyclotomic import Scalar
from .groups import DEFAULT_CAP, closure, orientation_subgroup
from .linalg import Matrix

__all__ = [
    "FamilySpec",
    "UnknownFamily",
    "parse_family",
    "make_family",
    "family_order",
    "quaternion_left",
    "icosian_generators",
    "unit_icosians",
    "FAMILIES",
]


class UnknownFamily(ValueError):
    pass


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: tuple[int, ...] = ()
    factors: tuple["FamilySpec", ...] = field(default=())

    def __str__(self):
        if self.factors:
            return f"{self.name}({', '.join(str(f) for f in self.factors)})"
        return f"{self.name}({', '.join(map(str, self.params))})"

    @property
    def dimension(self) -> int:
        return make_family(self)[0].rows

    @property
    def conductor(self) -> int:
        m = 1
        for g in make_family(self):
            m = lcm(m, g.conductor)
        return m


def _simplify(x: Scalar) -> Scalar:
    return Scalar.rational(x.to_fraction()) if x.is_rational() else x


def _mat(rows) -> Matrix:
    return Matrix.from_rows([[_simplify(Scalar._coerce(x)) for x in r] for r in rows])


def _rotation(k: int, m: int) -> Matrix:
    c, s = Scalar.cos2pi(k, m), Scalar.sin2pi(k, m)
    return _mat([[c, -s], [s, c]])


def _perm_matrix(n: int, perm) -> Matrix:
    return _mat([[1 if perm[j] == i else 0 for j in range(n)] for i in range(n)])


def _transposition(n: int, i: int) -> Matrix:
    p = list(range(n))
    p[i], p[i + 1] = p[i + 1], p[i]
    return _perm_matrix(n, p)


def quaternion_left(q) -> Matrix:
    """Matrix of p -> q p on coordinates (1, i, j, k)."""
    a, b, c, d = q
    return _mat([
        [a, -b, -c, -d],
        [b, a, -d, c],
        [c, d, a, -b],
        [d, -c, b, a],
    ])


def golden() -> Scalar:
    return (Scalar.sqrt5() + 1) * Fraction(1, 2)


def icosian_generators() -> list[tuple[Scalar, ...]]:
    """Two unit icosians of orders 6 and 10 generating the binary
    icosahedral group."""
    half = Fraction(1, 2)
    phi = golden()
    one = Scalar.rational(1)
    zero = Scalar.rational(0)
    s = (one * half, one * half, one * half, one * half)
    t = (phi * half, (phi - 1) * half, one * half, zero)
    return [s, t]


def unit_icosians() -> list[tuple[Scalar, ...]]:
    """The 120 unit icosians as quaternion coordinate tuples, in the
    deterministic order of the closed matrix group's first columns."""
    G = closure([quaternion_left(q) for q in icosian_generators()])
    # the first column of L(q) is q itself
    return [tuple(G.matrix(i).column(0)) for i in G.sorted_indices()]


def _check_positive(name, *vals):
    for v in vals:
        if not isinstance(v, int) or isinstance(v, bool) or v < 1:
            raise ValueError(f"{name}: parameter must be a positive integer, got {v!r}")


def _cyclic_rotation(m: int) -> list[Matrix]:
    _check_positive("cyclic_rotation", m)
    return [_rotation(1, m)]


def _dihedral(m: int) -> list[Matrix]:
    _check_positive("dihedral", m)
    refl = _mat([[1, 0], [0, -1]])
    if m == 1:
        return [refl]
    return [_rotation(1, m), refl]


def _signed_perm(n: int) -> list[Matrix]:
    _check_positive("signed_permutation_reflections", n)
    gens = [_transposition(n, i) for i in range(n - 1)]
    gens.append(_mat([[-1 if (i == j == n - 1) else int(i == j) for j in range(n)] for i in range(n)]))
    return gens


def _perm_refl(n: int) -> list[Matrix]:
    _check_positive("permutation_reflections", n)
    if n == 1:
        return [Matrix.identity(1)]
    return [_transposition(n, i) for i in range(n - 1)]


def _neg_identity(n: int) -> list[Matrix]:
    _check_positive("negative_identity", n)
    return [Matrix.identity(n) * -1]


def _trivial(n: int) -> list[Matrix]:
    _check_positive("trivial", n)
    return [Matrix.identity(n)]


def _binary_icosahedral() -> list[Matrix]:
    return [quaternion_left(q) for q in icosian_generators()]


FAMILIES = {
    "trivial": (_trivial, 1),
    "cyclic_rotation": (_cyclic_rotation, 1),
    "dihedral": (_dihedral, 1),
    "signed_permutation_reflections": (_signed_perm, 1),
    "permutation_reflections": (_perm_refl, 1),
    "negative_identity": (_neg_identity, 1),
    "binary_icosahedral": (_binary_icosahedral, 0),
}
COMPOSITE = ("direct_sum", "rotation_subgroup")


def make_family(spec: FamilySpec | str) -> list[Matrix]:
    if isinstance(spec, str):
        spec = parse_family(spec)
    if spec.name == "direct_sum":
        if not spec.factors:
            raise ValueError("direct_sum needs at least one factor")
        parts = [make_family(f) for f in spec.factors]
        dims = [p[0].rows for p in parts]
        out = []
        for k, gens in enumerate(parts):
            for g in gens:
                blocks = [Matrix.identity(d) for d in dims]
                blocks[k] = g
                out.append(Matrix.block_diag(blocks))
        return out
    if spec.name == "rotation_subgroup":
        if len(spec.factors) != 1:
            raise ValueError("rotation_subgroup takes one family")
        G = orientation_subgroup(closure(make_family(spec.factors[0]), DEFAULT_CAP))
        gens = [G.matrix(i) for i in G.generators]
        return gens or [Matrix.identity(G.n)]
    try:
        fn, arity = FAMILIES[spec.name]
    except KeyError:
        raise UnknownFamily(f"unknown family {spec.name!r}") from None
    if len(spec.params) != arity or spec.factors:
        raise ValueError(f"{spec.name} takes {arity} integer parameter(s)")
    return fn(*spec.params)


def family_order(spec: FamilySpec | str) -> int:
    """Closed-form group order, independent of closure."""
    if isinstance(spec, str):
        spec = parse_family(spec)
    name, p = spec.name, spec.params
    if name == "trivial":
        return 1
    if name == "cyclic_rotation":
        return p[0]
    if name == "dihedral":
        return 2 * p[0]
    if name == "signed_permutation_reflections":
        out = 2 ** p[0]
        for k in range(2, p[0] + 1):
            out *= k
        return out
    if name == "permutation_reflections":
        out = 1
        for k in range(2, p[0] + 1):
            out *= k
        return out
    if name == "negative_identity":
        return 2
    if name == "binary_icosahedral":
        return 120
    if name == "direct_sum":
        out = 1
        for f in spec.factors:
            out *= family_order(f)
        return out
    if name == "rotation_subgroup":
        inner = spec.factors[0]
        if inner.name in ("cyclic_rotation", "binary_icosahedral", "trivial"):
            return family_order(inner)
        if inner.name == "permutation_reflections" and inner.params[0] == 1:
            return 1
        return family_order(inner) // 2
    raise UnknownFamily(f"unknown family {name!r}")


def _from_node(node: ast.AST) -> FamilySpec:
    if isinstance(node, ast.Name):
        return FamilySpec(node.id)
    if not isinstance(node, ast.Call) or not isinstance(node.func, ast.Name) or node.keywords:
        raise ValueError("family spec must look like name(args)")
    name = node.func.id
    if name in COMPOSITE:
        return FamilySpec(name, (), tuple(_from_node(a) for a in node.args))
    params = []
    for a in node.args:
        if not (isinstance(a, ast.Constant) and isinstance(a.value, int) and not isinstance(a.value, bool)):
            raise ValueError(f"{name}: parameters must be integer literals")
        params.append(a.value)
    if name not in FAMILIES:
        raise UnknownFamily(f"unknown family {name!r}")
    return FamilySpec(name, tuple(params))


def parse_family(text: str) -> FamilySpec:
    try:
        tree = ast.parse(text.strip(), mode="eval")
    except SyntaxError as e:
        raise ValueError(f"cannot parse family spec {text!r}: {e.msg}") from None
    return _from_node(tree.body)
