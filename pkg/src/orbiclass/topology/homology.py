"""
Integral simplicial homology.

Boundary matrices are reduced over Z: first a sparse pass that eliminates
unit pivots (shortest row/column first to limit fill-in), then a dense
Smith normal form on whatever is left, with pivots of minimal absolute
value.  Everything is exact Python integer arithmetic.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from math import gcd

from .complex import SimplicialComplex

__all__ = [
    "HomologyResult",
    "homology",
    "smith_normal_form",
    "elementary_divisors",
    "boundary_columns",
    "is_sphere_like",
    "is_acyclic",
]


def _invariant_chain(diag: list[int]) -> list[int]:
    """Turn a diagonal into invariant factors d1 | d2 | ..."""
    d = sorted(abs(x) for x in diag if x)
    for i in range(len(d)):
        for j in range(i + 1, len(d)):
            g = gcd(d[i], d[j])
            if g != d[i]:
                d[i], d[j] = g, d[i] * d[j] // g
    return d


def smith_normal_form(A: list[list[int]]) -> list[int]:
    """Nonzero invariant factors of a dense integer matrix."""
    A = [list(r) for r in A if any(r)]
    diag = []
    while A and A[0]:
        nz = [(abs(v), i, j) for i, r in enumerate(A) for j, v in enumerate(r) if v]
        if not nz:
            break
        _, p, q = min(nz)
        A[0], A[p] = A[p], A[0]
        for r in A:
            r[0], r[q] = r[q], r[0]
        while True:
            piv = A[0][0]
            done = True
            for i in range(1, len(A)):
                if A[i][0]:
                    f = A[i][0] // piv
                    if f:
                        A[i] = [a - f * b for a, b in zip(A[i], A[0])]
                    if A[i][0]:
                        done = False
            for j in range(1, len(A[0])):
                if A[0][j]:
                    f = A[0][j] // piv
                    if f:
                        for r in A:
                            r[j] -= f * r[0]
                    if A[0][j]:
                        done = False
            if done:
                break
            # a smaller remainder appeared in row 0 or column 0
            cands = [(abs(A[i][0]), i, 0) for i in range(len(A)) if A[i][0]]
            cands += [(abs(A[0][j]), 0, j) for j in range(len(A[0])) if A[0][j]]
            _, p, q = min(cands)
            A[0], A[p] = A[p], A[0]
            for r in A:
                r[0], r[q] = r[q], r[0]
        diag.append(A[0][0])
        A = [r[1:] for r in A[1:]]
        A = [r for r in A if any(r)]
    return _invariant_chain(diag)


def elementary_divisors(cols: list[dict[int, int]]) -> list[int]:
    """Nonzero invariant factors of a sparse integer matrix given by columns."""
    active: dict[int, dict[int, int]] = {c: dict(col) for c, col in enumerate(cols) if col}
    rows: dict[int, dict[int, int]] = {}
    for c, col in active.items():
        for r, v in col.items():
            rows.setdefault(r, {})[c] = v
    units = 0
    heap = [(len(col), c) for c, col in active.items()]
    heapq.heapify(heap)
    stalled: set[int] = set()
    while True:
        progress = False
        while heap:
            l, c = heapq.heappop(heap)
            col = active.get(c)
            if col is None:
                continue
            if len(col) != l:
                heapq.heappush(heap, (len(col), c))
                continue
            if not col:
                del active[c]
                continue
            best = None
            for r, v in col.items():
                if v == 1 or v == -1:
                    if best is None or len(rows[r]) < len(rows[best]):
                        best = r
            if best is None:
                stalled.add(c)
                continue
            stalled.discard(c)
            progress = True
            r = best
            pv = col[r]
            prow = rows.pop(r)
            for r2, v2 in list(col.items()):
                if r2 == r:
                    continue
                f = v2 * pv
                row2 = rows[r2]
                for c3, v3 in prow.items():
                    nv = row2.get(c3, 0) - f * v3
                    if nv:
                        row2[c3] = nv
                        active[c3][r2] = nv
                    else:
                        row2.pop(c3, None)
                        active[c3].pop(r2, None)
            # clearing row r by column operations touches nothing else
            for c3 in prow:
                if c3 != c:
                    active[c3].pop(r, None)
                    heapq.heappush(heap, (len(active[c3]), c3))
            del active[c]
            units += 1
        if not progress or not stalled:
            break
        heap = [(len(active[c]), c) for c in stalled if c in active]
        heapq.heapify(heap)
    rest = {c: col for c, col in active.items() if col}
    if not rest:
        return [1] * units
    rlist = sorted({r for col in rest.values() for r in col})
    rpos = {r: i for i, r in enumerate(rlist)}
    dense = [[0] * len(rest) for _ in rlist]
    for j, c in enumerate(sorted(rest)):
        for r, v in rest[c].items():
            dense[rpos[r]][j] = v
    return [1] * units + smith_normal_form(dense)


def boundary_columns(K: SimplicialComplex, k: int) -> list[dict[int, int]]:
    """Columns of the boundary map C_k -> C_{k-1} in sorted face order."""
    lower = {f: i for i, f in enumerate(K.faces(k - 1))}
    out = []
    for f in K.faces(k):
        col = {}
        for j in range(len(f)):
            col[lower[f[:j] + f[j + 1:]]] = -1 if j % 2 else 1
        out.append(col)
    return out


@dataclass(frozen=True)
class HomologyResult:
    betti: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]
    reduced: bool = False
    empty: bool = False

    def degree(self, i: int) -> tuple[int, tuple[int, ...]]:
        if 0 <= i < len(self.betti):
            return self.betti[i], self.torsion[i]
        return 0, ()

    def is_acyclic(self) -> bool:
        """All reduced groups vanish (the empty complex is not acyclic)."""
        return (not self.empty and not any(self.betti[1:]) and not any(self.torsion)
                and self.betti[0] == (0 if self.reduced else 1))

    def is_sphere(self, d: int) -> bool:
        """Homology of S^d (d = -1 means the empty complex)."""
        if d == -1:
            return self.empty
        if self.empty:
            return False
        if any(self.torsion):
            return False
        want = [0] * max(len(self.betti), d + 1)
        want[d] += 1
        if not self.reduced:
            want[0] += 1
        got = list(self.betti) + [0] * (len(want) - len(self.betti))
        return got == want

    def describe(self) -> list[str]:
        out = []
        for b, t in zip(self.betti, self.torsion):
            parts = (["Z^%d" % b if b > 1 else "Z"] if b else []) + [f"Z/{x}" for x in t]
            out.append(" + ".join(parts) if parts else "0")
        return out

    def to_json(self) -> dict:
        return {
            "reduced": self.reduced,
            "betti": list(self.betti),
            "torsion": [list(t) for t in self.torsion],
            "groups": self.describe(),
        }


def homology(K: SimplicialComplex, reduced: bool = False) -> HomologyResult:
    if K.is_empty():
        return HomologyResult((), (), reduced, True)
    d = K.dim
    ranks = [0] * (d + 2)
    tors: list[tuple[int, ...]] = [()] * (d + 2)
    for k in range(1, d + 1):
        divs = elementary_divisors(boundary_columns(K, k))
        ranks[k] = len(divs)
        tors[k - 1] = tuple(x for x in divs if x > 1)
    if reduced:
        ranks[0] = 1
    fv = K.f_vector()
    betti = tuple(fv[k] - ranks[k] - ranks[k + 1] for k in range(d + 1))
    return HomologyResult(betti, tuple(tors[: d + 1]), reduced, False)


def is_sphere_like(K: SimplicialComplex, d: int) -> bool:
    return homology(K, reduced=True).is_sphere(d)


def is_acyclic(K: SimplicialComplex) -> bool:
    return homology(K, reduced=True).is_acyclic()
