"""
Edge-path presentations of fundamental groups and coset enumeration.

Words are tuples of nonzero ints: ``i + 1`` is generator i and
``-(i + 1)`` its inverse.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass, field

from .complex import ComplexError, SimplicialComplex

__all__ = [
    "Presentation",
    "EnumerationResult",
    "pi1_presentation",
    "simplify",
    "coset_enumeration",
    "free_reduce",
    "DEFAULT_COSET_BOUND",
]

DEFAULT_COSET_BOUND = 50_000

Word = tuple[int, ...]


def free_reduce(w) -> Word:
    out: list[int] = []
    for x in w:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def cyclic_reduce(w) -> Word:
    w = list(free_reduce(w))
    i, j = 0, len(w) - 1
    while i < j and w[i] == -w[j]:
        i += 1
        j -= 1
    return tuple(w[i:j + 1])


def inverse(w) -> Word:
    return tuple(-x for x in reversed(w))


def _canonical(w: Word) -> Word:
    """Least rotation of w or its inverse: relators up to cyclic
    permutation and inversion."""
    if not w:
        return w
    best = None
    for v in (w, inverse(w)):
        for k in range(len(v)):
            r = v[k:] + v[:k]
            if best is None or r < best:
                best = r
    return best


@dataclass
class Presentation:
    ngens: int
    relators: list[Word] = field(default_factory=list)
    names: list[str] | None = None

    def __post_init__(self):
        self.relators = [tuple(r) for r in self.relators]
        for r in self.relators:
            for x in r:
                if x == 0 or abs(x) > self.ngens:
                    raise ValueError(f"letter {x} out of range")

    @property
    def total_length(self) -> int:
        return sum(len(r) for r in self.relators)

    def abelian_invariants(self) -> list[int]:
        """Invariants of the abelianization (0 for a free Z summand)."""
        from .homology import smith_normal_form
        rows = []
        for r in self.relators:
            v = [0] * self.ngens
            for x in r:
                v[abs(x) - 1] += 1 if x > 0 else -1
            rows.append(v)
        divs = smith_normal_form(rows) if rows and self.ngens else []
        free = self.ngens - len(divs)
        return sorted([d for d in divs if d > 1]) + [0] * free

    def to_json(self) -> dict:
        return {"generators": self.ngens, "relators": [list(r) for r in self.relators]}


def pi1_presentation(K: SimplicialComplex) -> Presentation:
    """Generators: edges outside a BFS spanning tree; relators: triangles."""
    if K.is_empty() or not K.is_connected():
        raise ComplexError("fundamental group needs a connected complex")
    edges = K.faces(1)
    adj: dict[int, list[int]] = {}
    for a, b in edges:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    root = K.vertices[0]
    seen = {root}
    tree = set()
    dq = deque([root])
    while dq:
        v = dq.popleft()
        for w in sorted(adj.get(v, [])):
            if w not in seen:
                seen.add(w)
                tree.add((min(v, w), max(v, w)))
                dq.append(w)
    gen = {}
    names = []
    for e in edges:
        if e not in tree:
            gen[e] = len(gen) + 1
            names.append(f"e{e[0]}_{e[1]}")

    def letter(a, b):
        # edge traversed from a to b
        if a < b:
            return gen.get((a, b), 0)
        g = gen.get((b, a), 0)
        return -g

    rels = []
    for a, b, c in K.faces(2):
        w = [x for x in (letter(a, b), letter(b, c), letter(c, a)) if x]
        rels.append(free_reduce(w))
    return Presentation(len(gen), rels, names)


def simplify(P: Presentation, max_length: int = 200) -> Presentation:
    """Tietze eliminations: a generator occurring exactly once in some
    relator is solved for and substituted away.  Shortest relators first;
    an elimination whose substitution word exceeds ``max_length`` is
    skipped."""
    rels: dict[int, Word] = {}
    seen_keys: set[Word] = set()
    occ: dict[int, set[int]] = {g: set() for g in range(1, P.ngens + 1)}
    heap: list[tuple[int, int]] = []
    counter = 0

    def add(w):
        nonlocal counter
        w = cyclic_reduce(w)
        if not w:
            return
        k = _canonical(w)
        if k in seen_keys:
            return
        seen_keys.add(k)
        rid = counter
        counter += 1
        rels[rid] = w
        for x in w:
            occ[abs(x)].add(rid)
        heapq.heappush(heap, (len(w), rid))

    def remove(rid):
        w = rels.pop(rid)
        seen_keys.discard(_canonical(w))
        for x in w:
            occ[abs(x)].discard(rid)

    for r in P.relators:
        add(r)
    alive = set(range(1, P.ngens + 1))

    while heap:
        l, rid = heapq.heappop(heap)
        w = rels.get(rid)
        if w is None or len(w) != l:
            continue
        counts: dict[int, int] = {}
        for x in w:
            counts[abs(x)] = counts.get(abs(x), 0) + 1
        singles = [g for g, c in counts.items() if c == 1]
        if not singles or len(w) - 1 > max_length:
            continue
        g = min(singles, key=lambda h: (len(occ[h]), h))
        k = next(i for i, x in enumerate(w) if abs(x) == g)
        rot = w[k:] + w[:k]
        rest = rot[1:]
        # rot = x rest = 1, so x = rest^-1
        sub = inverse(rest) if rot[0] > 0 else rest
        sub_inv = inverse(sub)
        remove(rid)
        alive.discard(g)
        for other in sorted(occ[g]):
            ow = rels[other]
            remove(other)
            new = []
            for x in ow:
                if x == g:
                    new.extend(sub)
                elif x == -g:
                    new.extend(sub_inv)
                else:
                    new.append(x)
            add(new)
        del occ[g]

    order = sorted(alive)
    pos = {g: i + 1 for i, g in enumerate(order)}
    out = []
    for rid in sorted(rels):
        w = rels[rid]
        out.append(tuple(pos[x] if x > 0 else -pos[-x] for x in w))
    names = [P.names[g - 1] for g in order] if P.names else None
    return Presentation(len(order), sorted(out, key=lambda r: (len(r), r)), names)


@dataclass
class EnumerationResult:
    closed: bool
    order: int | None
    cosets_defined: int

    def to_json(self) -> dict:
        if self.closed:
            return {"status": "order", "order": self.order, "cosets_defined": self.cosets_defined}
        return {"status": "exceeds_bound", "cosets_defined": self.cosets_defined}


class _Overflow(Exception):
    pass


def coset_enumeration(P: Presentation, bound: int = DEFAULT_COSET_BOUND) -> EnumerationResult:
    """HLT Todd-Coxeter enumeration of the cosets of the trivial subgroup."""
    if bound < 1:
        raise ValueError("bound must be positive")
    ncols = 2 * P.ngens
    if ncols == 0:
        return EnumerationResult(True, 1, 1)

    def col(x):
        return 2 * (x - 1) if x > 0 else 2 * (-x - 1) + 1

    rels = [[col(x) for x in cyclic_reduce(r)] for r in P.relators]
    rels = [r for r in rels if r]
    table: list[list[int | None]] = [[None] * ncols]
    parent = [0]

    def define(c, x):
        if len(table) >= bound:
            raise _Overflow
        n = len(table)
        table.append([None] * ncols)
        parent.append(n)
        table[c][x] = n
        table[n][x ^ 1] = c

    def rep(c):
        r = c
        while parent[r] != r:
            r = parent[r]
        while parent[c] != r:
            parent[c], c = r, parent[c]
        return r

    def merge(k, l, q):
        k, l = rep(k), rep(l)
        if k != l:
            if k > l:
                k, l = l, k
            parent[l] = k
            q.append(l)

    def coincidence(a, b):
        q: list[int] = []
        merge(a, b, q)
        i = 0
        while i < len(q):
            e = q[i]
            i += 1
            for x in range(ncols):
                f = table[e][x]
                if f is None:
                    continue
                if table[f][x ^ 1] == e:
                    table[f][x ^ 1] = None
                e1, f1 = rep(e), rep(f)
                t = table[e1][x]
                if t is not None:
                    merge(f1, t, q)
                else:
                    u = table[f1][x ^ 1]
                    if u is not None:
                        merge(e1, u, q)
                    else:
                        table[e1][x] = f1
                        table[f1][x ^ 1] = e1

    def scan_and_fill(c, w):
        f = b = c
        i, j = 0, len(w) - 1
        while True:
            while i <= j and table[f][w[i]] is not None:
                f = table[f][w[i]]
                i += 1
            if i > j:
                if f != b:
                    coincidence(f, b)
                return
            while j >= i and table[b][w[j] ^ 1] is not None:
                b = table[b][w[j] ^ 1]
                j -= 1
            if j < i:
                coincidence(f, b)
                return
            if i == j:
                table[f][w[i]] = b
                table[b][w[i] ^ 1] = f
                return
            define(f, w[i])

    try:
        a = 0
        while a < len(table):
            if parent[a] == a:
                for w in rels:
                    scan_and_fill(a, w)
                    if parent[a] != a:
                        break
                if parent[a] == a:
                    for x in range(ncols):
                        if table[a][x] is None:
                            define(a, x)
            a += 1
    except _Overflow:
        return EnumerationResult(False, None, len(table))
    alive = sum(1 for i in range(len(table)) if parent[i] == i)
    return EnumerationResult(True, alive, len(table))
