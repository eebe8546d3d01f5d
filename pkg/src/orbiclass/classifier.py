"""
Manifold verdicts for quotients R^n / G of finite orthogonal groups.

``decompose`` splits G into a reflection-rotation part and Poincare
factors (binary icosahedral groups acting freely on 4-dimensional
subspaces), all on pairwise orthogonal supports, or refuses with a
witness.  ``verdicts`` turns that into the homology / topological / PL /
Lipschitz table.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cyclotomic import Scalar
from .groups import (
    MatrixGroup,
    derived_subgroup,
    element_support,
    generated_subgroup,
    is_fixed_point_free,
    restriction_kernel,
    support_span,
)
from .linalg import Matrix, Subspace, orthogonal_complement, restrict
from .packed import pack

__all__ = [
    "Refusal",
    "Decomposition",
    "Verdict",
    "VerdictReport",
    "recognize_poincare",
    "poincare_check",
    "decompose",
    "verdicts",
]

POINCARE_ORDER = 120


@dataclass
class Refusal:
    step: int
    reason: str
    witness: int | None = None          # element index in G
    witness_matrix: Matrix | None = None
    fixed_codim: int | None = None


@dataclass
class Decomposition:
    group: MatrixGroup
    rr_part: MatrixGroup | None = None
    rr_support: Subspace | None = None
    has_reflection: bool = False
    poincare_factors: list[tuple[MatrixGroup, Subspace]] = field(default_factory=list)
    refusal: Refusal | None = None

    @property
    def ok(self) -> bool:
        return self.refusal is None

    @property
    def k(self) -> int:
        return len(self.poincare_factors)


@dataclass(frozen=True)
class Verdict:
    manifold: bool
    boundary_nonempty: bool | None


@dataclass
class VerdictReport:
    dimension: int
    order: int
    homology: Verdict
    topological: Verdict
    pl: Verdict
    lipschitz: Verdict
    model: str
    decomposition: Decomposition


def poincare_check(K: MatrixGroup, S: Subspace) -> str | None:
    """None when K is a Poincare group on S, else a reason code."""
    if S.dim != 4:
        return "support_dimension"
    if K.order != POINCARE_ORDER:
        return "order"
    one = Scalar.rational(1)
    for i in K.generators:
        if K.det(i) != one:
            return "determinant"
        if restrict(K.matrix(i), S).det() != one:
            return "restricted_determinant"
    # generators suffice for determinants: det is a homomorphism
    comp = orthogonal_complement(S)
    if comp.dim:
        C = pack(comp.matrix(), K.conductor)
        for p in K.elements:
            if not (p @ C == C):
                return "nontrivial_on_complement"
    if not is_fixed_point_free(K, S):
        return "not_free"
    if derived_subgroup(K).order != K.order:
        return "not_perfect"
    return None


def recognize_poincare(K: MatrixGroup, S: Subspace) -> bool:
    return poincare_check(K, S) is None


def _acts_trivially_on(G: MatrixGroup, idx, S: Subspace) -> int | None:
    """First index in idx that moves some vector of S, else None."""
    if S.dim == 0:
        return None
    B = pack(S.matrix(), G.conductor)
    for i in idx:
        if not (G.elements[i] @ B == B):
            return i
    return None


def decompose(G: MatrixGroup, workers: int = 1) -> Decomposition:
    n = G.n
    codims = G.codims(workers)
    dec = Decomposition(group=G)
    dec.has_reflection = any(c == 1 for c in codims)

    def refuse(step, reason, witness=None):
        mat = G.matrix(witness) if witness is not None else None
        cod = codims[witness] if witness is not None else None
        dec.refusal = Refusal(step, reason, witness, mat, cod)
        return dec

    # (1) reflection-rotation subgroup and its support
    rr = [i for i, c in enumerate(codims) if c in (1, 2)]
    H = generated_subgroup(G, rr)
    U = support_span([G.matrix(i) for i in rr], n)
    dec.rr_part, dec.rr_support = H, U

    # (2) pointwise stabilizer of U
    K = restriction_kernel(G, U)

    # (3) internal direct product G = H x K
    if H.order * K.order != G.order:
        w = next((i for i in range(1, G.order)
                  if H.find(G.elements[i]) is None and K.find(G.elements[i]) is None), None)
        return refuse(3, "H*K does not exhaust G", w)
    for p in K.elements[1:]:
        if H.find(p) is not None:
            return refuse(3, "H and K intersect", G.find(p))
    Uc = orthogonal_complement(U)
    bad = _acts_trivially_on(G, rr, Uc)
    if bad is not None:
        return refuse(3, "reflection-rotation part moves the complement of its support", bad)

    if K.order == 1:
        return dec

    # (4) minimal supports of K
    kcod = K.codims(workers)
    dmin = min(kcod[1:])
    minimal = [i for i in range(1, K.order) if kcod[i] == dmin]
    if dmin != 4:
        return refuse(4, f"minimal support of the complement part has dimension {dmin}",
                      G.find(K.elements[minimal[0]]))
    supports: list[Subspace] = []
    for i in minimal:
        S = element_support(K.matrix(i))
        if not any(S == T for T in supports):
            supports.append(S)
    for a in range(len(supports)):
        for b in range(a + 1, len(supports)):
            if not supports[a].is_orthogonal_to(supports[b]):
                return refuse(4, "minimal supports are not pairwise orthogonal")
    total = Subspace.span(n, [v for S in supports for v in S.basis])
    # K's total support must be the sum of the minimal ones
    bad = _acts_trivially_on(K, range(K.order), orthogonal_complement(total))
    if bad is not None:
        return refuse(4, "complement part moves vectors outside its minimal supports",
                      G.find(K.elements[bad]))

    # (5) Poincare factors
    factors = []
    prod = 1
    for S in supports:
        Ki = restriction_kernel(K, orthogonal_complement(S))
        reason = poincare_check(Ki, S)
        if reason is not None:
            w = Ki.elements[1] if Ki.order > 1 else None
            return refuse(5, f"factor on a 4-dimensional support is not a Poincare group ({reason})",
                          G.find(w) if w is not None else None)
        factors.append((Ki, S))
        prod *= Ki.order
    if prod != K.order:
        return refuse(5, "factor orders do not multiply to |K|")
    gens = [K.find(Ki.elements[j]) for Ki, _ in factors for j in Ki.generators]
    if generated_subgroup(K, gens).order != K.order:
        return refuse(5, "factors do not generate K")
    dec.poincare_factors = factors
    return dec


def verdicts(G: MatrixGroup, workers: int = 1) -> VerdictReport:
    dec = decompose(G, workers)
    n = G.n
    refl = dec.has_reflection
    homology = dec.ok
    pl = dec.ok and dec.k == 0
    if not dec.ok:
        top = False
    elif dec.k != 1:
        top = True
    else:
        top = n > 5 if refl else n > 4

    def v(flag):
        return Verdict(flag, refl if flag else None)

    if top:
        model = "half_space" if refl else "full_space"
    else:
        model = "none"
    return VerdictReport(
        dimension=n,
        order=G.order,
        homology=v(homology),
        topological=v(top),
        pl=v(pl),
        lipschitz=v(pl),
        model=model,
        decomposition=dec,
    )
