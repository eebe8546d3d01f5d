"""
JSON-ready reports for group classification and complex verification.

Field names here are the stable CLI output schema.  Every report starts
with ``"schema": "orbiclass/1"``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .classifier import VerdictReport
from .formats import matrix_to_json
from .topology.complex import SimplicialComplex
from .topology.homology import homology
from .topology.manifold import (
    is_homology_manifold,
    is_homology_manifold_with_boundary,
)
from .topology.presentation import DEFAULT_COSET_BOUND, coset_enumeration, pi1_presentation, simplify
from .topology.quotient import SimplicialAction, quotient

__all__ = [
    "SCHEMA",
    "classification_report",
    "complex_summary",
    "verification_report",
    "render_text",
    "VerificationOutcome",
]

SCHEMA = "orbiclass/1"


def _verdict(v) -> dict:
    return {"manifold": v.manifold, "boundary_nonempty": v.boundary_nonempty}


def classification_report(rep: VerdictReport, source: dict | None = None) -> dict:
    dec = rep.decomposition
    G = dec.group
    out: dict = {"schema": SCHEMA, "command": "classify"}
    if source:
        out["source"] = source
    out.update({
        "dimension": rep.dimension,
        "conductor": G.conductor,
        "order": rep.order,
        "verdicts": {
            "homology": _verdict(rep.homology),
            "topological": _verdict(rep.topological),
            "pl": _verdict(rep.pl),
            "lipschitz": _verdict(rep.lipschitz),
        },
        "model": rep.model,
    })
    d: dict = {"status": "ok" if dec.ok else "refused", "has_reflection": dec.has_reflection}
    if dec.ok:
        d["rr_order"] = dec.rr_part.order
        d["rr_support_dim"] = dec.rr_support.dim
        d["k"] = dec.k
        d["poincare_factors"] = [{"order": K.order, "support_dim": S.dim} for K, S in dec.poincare_factors]
    else:
        r = dec.refusal
        d["step"] = r.step
        d["reason"] = r.reason
        if r.witness_matrix is not None:
            d["witness"] = {"fixed_codim": r.fixed_codim, "matrix": matrix_to_json(r.witness_matrix)}
    out["decomposition"] = d
    return out


def _pi1(K: SimplicialComplex, bound: int) -> dict:
    P = pi1_presentation(K)
    S = simplify(P)
    enum = coset_enumeration(S, bound)
    return {
        "presentation": {"generators": P.ngens, "relators": len(P.relators)},
        "simplified": S.to_json(),
        "abelian_invariants": S.abelian_invariants(),
        "enumeration": enum.to_json(),
    }


def complex_summary(K: SimplicialComplex, n: int | None, bound: int) -> tuple[dict, bool]:
    """Homology, manifold tests and pi_1 for one complex.  The flag says
    whether coset enumeration ran out of rows."""
    n = K.dim if n is None else n
    out: dict = {
        "vertices": K.n_vertices,
        "dimension": K.dim,
        "f_vector": list(K.f_vector()),
        "euler_characteristic": K.euler_characteristic(),
        "homology": homology(K).to_json(),
        "homology_manifold": is_homology_manifold(K, n).to_json(),
        "homology_manifold_with_boundary": is_homology_manifold_with_boundary(K, n).to_json(),
    }
    exceeded = False
    if K.is_connected():
        out["pi1"] = _pi1(K, bound)
        exceeded = out["pi1"]["enumeration"]["status"] != "order"
    return out, exceeded


@dataclass
class VerificationOutcome:
    report: dict
    bound_exceeded: bool = False
    quotient: SimplicialComplex | None = field(default=None, repr=False)


def verification_report(K: SimplicialComplex, action: SimplicialAction | None = None,
                        n: int | None = None, coset_bound: int = DEFAULT_COSET_BOUND,
                        source: dict | None = None) -> VerificationOutcome:
    out: dict = {"schema": SCHEMA, "command": "verify-complex"}
    if source:
        out["source"] = source
    summary, exceeded = complex_summary(K, n, coset_bound)
    out["complex"] = summary
    Q = None
    if action is not None:
        Q, _, L = quotient(K, action)
        qs, qx = complex_summary(Q, n, coset_bound)
        qs["subdivided_f_vector"] = list(L.f_vector())
        out["quotient"] = qs
        exceeded = exceeded or qx
    return VerificationOutcome(out, exceeded, Q)


def _flatten(obj, prefix=""):
    if isinstance(obj, dict):
        for k, v in obj.items():
            yield from _flatten(v, f"{prefix}.{k}" if prefix else str(k))
    elif isinstance(obj, list) and obj and all(isinstance(x, (dict, list)) for x in obj):
        for i, v in enumerate(obj):
            yield from _flatten(v, f"{prefix}[{i}]")
    else:
        yield prefix, obj


def render_text(report: dict) -> str:
    """One ``key: value`` line per leaf; matrices are left out."""
    lines = []
    for key, val in _flatten(report):
        if ".matrix." in key or key.endswith(".matrix"):
            continue
        if isinstance(val, bool):
            val = "yes" if val else "no"
        elif val is None:
            val = "-"
        lines.append(f"{key}: {val}")
    return "\n".join(lines) + "\n"
