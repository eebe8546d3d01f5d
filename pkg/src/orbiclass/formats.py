"""
Reading and writing scalars, matrices, groups, complexes and actions.

JSON is the canonical interchange format.  Scalars carry their coordinate
rationals as decimal strings so nothing is lost to float parsing.  The
line-oriented complex and action formats exist for hand-written inputs.
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import lcm
from typing import Any

from .cyclotomic import Scalar, totient
from .linalg import Matrix
from .topology.complex import ComplexError, SimplicialComplex
from .topology.quotient import InvalidAction, SimplicialAction

__all__ = [
    "ParseError",
    "dumps",
    "scalar_to_json",
    "scalar_from_json",
    "matrix_to_json",
    "matrix_from_json",
    "GroupInput",
    "group_to_json",
    "group_from_json",
    "parse_group",
    "complex_to_json",
    "complex_from_json",
    "complex_to_text",
    "parse_complex",
    "action_to_text",
    "parse_action",
]


class ParseError(ValueError):
    """Malformed input; ``location`` is a JSON path or 'line N'."""

    def __init__(self, message: str, location: str = ""):
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, f"line {e.lineno} column {e.colno}") from None


def _int(x, where: str) -> int:
    if isinstance(x, bool):
        raise ParseError("expected an integer", where)
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        try:
            return int(x.strip())
        except ValueError:
            pass
    raise ParseError(f"expected an integer, got {x!r}", where)


# scalars and matrices

def scalar_to_json(s: Scalar) -> dict:
    return {"m": s.m, "c": [[str(n), str(s.den)] for n in s.num]}


def scalar_from_json(obj, where: str = "$") -> Scalar:
    if not isinstance(obj, dict) or set(obj) != {"m", "c"}:
        raise ParseError('scalar must be an object with keys "m" and "c"', where)
    m = _int(obj["m"], where + ".m")
    if m < 1:
        raise ParseError("conductor must be positive", where + ".m")
    c = obj["c"]
    if not isinstance(c, list) or len(c) > max(totient(m), 1):
        raise ParseError(f"expected at most {totient(m)} coordinates", where + ".c")
    coords = []
    for k, pair in enumerate(c):
        w = f"{where}.c[{k}]"
        if not isinstance(pair, list) or len(pair) != 2:
            raise ParseError("coordinate must be [numerator, denominator]", w)
        num, den = _int(pair[0], w + "[0]"), _int(pair[1], w + "[1]")
        if den == 0:
            raise ParseError("zero denominator", w + "[1]")
        coords.append(Fraction(num, den))
    return Scalar(m, coords)


def matrix_to_json(A: Matrix) -> dict:
    return {
        "rows": A.rows,
        "cols": A.cols,
        "entries": [scalar_to_json(A[i, j]) for i in range(A.rows) for j in range(A.cols)],
    }


def matrix_from_json(obj, where: str = "$") -> Matrix:
    if not isinstance(obj, dict):
        raise ParseError("matrix must be an object", where)
    for key in ("rows", "cols", "entries"):
        if key not in obj:
            raise ParseError(f'missing "{key}"', where)
    r, c = _int(obj["rows"], where + ".rows"), _int(obj["cols"], where + ".cols")
    ents = obj["entries"]
    if r < 1 or c < 1:
        raise ParseError("matrix dimensions must be positive", where)
    if not isinstance(ents, list) or len(ents) != r * c:
        raise ParseError(f"expected {r * c} entries", where + ".entries")
    vals = [scalar_from_json(e, f"{where}.entries[{k}]") for k, e in enumerate(ents)]
    return Matrix(r, c, vals)


# groups

class GroupInput:
    """Parsed group file: generators at a fixed conductor plus an optional cap."""

    def __init__(self, dimension: int, conductor: int, generators: list[Matrix], cap: int | None = None):
        self.dimension = dimension
        self.conductor = conductor
        self.generators = generators
        self.cap = cap


def group_to_json(g: GroupInput) -> dict:
    out = {
        "dimension": g.dimension,
        "conductor": g.conductor,
        "generators": [matrix_to_json(A) for A in g.generators],
    }
    if g.cap is not None:
        out["cap"] = g.cap
    return out


def group_from_json(obj) -> GroupInput:
    if not isinstance(obj, dict):
        raise ParseError("group input must be an object", "$")
    extra = set(obj) - {"dimension", "conductor", "generators", "cap"}
    if extra:
        raise ParseError(f"unknown keys {sorted(extra)}", "$")
    for key in ("dimension", "generators"):
        if key not in obj:
            raise ParseError(f'missing "{key}"', "$")
    n = _int(obj["dimension"], "$.dimension")
    if n < 1:
        raise ParseError("dimension must be positive", "$.dimension")
    gl = obj["generators"]
    if not isinstance(gl, list) or not gl:
        raise ParseError("need a nonempty list of generators", "$.generators")
    gens = []
    for k, gj in enumerate(gl):
        A = matrix_from_json(gj, f"$.generators[{k}]")
        if A.shape != (n, n):
            raise ParseError(f"generator is {A.rows}x{A.cols}, expected {n}x{n}", f"$.generators[{k}]")
        gens.append(A)
    m = 1
    for A in gens:
        m = lcm(m, A.conductor)
    if "conductor" in obj:
        declared = _int(obj["conductor"], "$.conductor")
        if declared < 1 or declared % m:
            raise ParseError(f"declared conductor {declared} does not contain the entries (need a multiple of {m})",
                             "$.conductor")
        m = declared
    cap = None
    if obj.get("cap") is not None:
        cap = _int(obj["cap"], "$.cap")
        if cap < 1:
            raise ParseError("cap must be positive", "$.cap")
    return GroupInput(n, m, [A.promote(m) for A in gens], cap)


def parse_group(text: str) -> GroupInput:
    return group_from_json(_loads(text))


# complexes and actions

def complex_to_json(K: SimplicialComplex) -> dict:
    return {"vertices": K.n_vertices, "facets": [list(f) for f in K.facets]}


def complex_from_json(obj) -> SimplicialComplex:
    if not isinstance(obj, dict) or "facets" not in obj:
        raise ParseError('complex must be an object with "facets"', "$")
    fl = obj["facets"]
    if not isinstance(fl, list) or not fl:
        raise ParseError("need a nonempty facet list", "$.facets")
    facets = []
    for k, f in enumerate(fl):
        if not isinstance(f, list) or not f:
            raise ParseError("facet must be a nonempty list", f"$.facets[{k}]")
        facets.append([_int(v, f"$.facets[{k}]") for v in f])
    nv = _int(obj["vertices"], "$.vertices") if "vertices" in obj else None
    try:
        return SimplicialComplex(facets, nv)
    except ComplexError as e:
        raise ParseError(str(e), "$.facets") from None


def complex_to_text(K: SimplicialComplex) -> str:
    lines = [f"dim {K.dim} vertices {K.n_vertices}"]
    lines += [" ".join(map(str, f)) for f in K.facets]
    return "\n".join(lines) + "\n"


def _content_lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


def _complex_from_text(text: str) -> SimplicialComplex:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty complex file", "line 1")
    no, head = lines[0]
    parts = head.split()
    if len(parts) != 4 or parts[0] != "dim" or parts[2] != "vertices":
        raise ParseError('header must read "dim N vertices V"', f"line {no}")
    d, nv = _int(parts[1], f"line {no}"), _int(parts[3], f"line {no}")
    facets = []
    for no, line in lines[1:]:
        f = [_int(t, f"line {no}") for t in line.split()]
        if any(v < 0 or v >= nv for v in f):
            raise ParseError(f"vertex index out of range 0..{nv - 1}", f"line {no}")
        facets.append(f)
    if not facets:
        raise ParseError("no facets", f"line {no}")
    K = SimplicialComplex(facets, nv)
    if K.dim != d:
        raise ParseError(f"header says dimension {d}, facets have dimension {K.dim}", f"line {lines[0][0]}")
    return K


def parse_complex(text: str) -> SimplicialComplex:
    """Line format or JSON, told apart by the first character."""
    if text.lstrip().startswith("{"):
        return complex_from_json(_loads(text))
    return _complex_from_text(text)


def action_to_text(A: SimplicialAction) -> str:
    return "".join(" ".join(map(str, p)) + "\n" for p in A.generators)


def parse_action(text: str, n_vertices: int | None = None) -> SimplicialAction:
    """One generator per line in image-list form, or a JSON object
    {"generators": [[...], ...]}."""
    if text.lstrip().startswith("{"):
        obj = _loads(text)
        if not isinstance(obj, dict) or not isinstance(obj.get("generators"), list):
            raise ParseError('action must be an object with "generators"', "$")
        rows = [(f"$.generators[{k}]", p) for k, p in enumerate(obj["generators"])]
        gens = []
        for where, p in rows:
            if not isinstance(p, list):
                raise ParseError("permutation must be a list", where)
            gens.append([_int(v, where) for v in p])
    else:
        gens = [[_int(t, f"line {no}") for t in line.split()] for no, line in _content_lines(text)]
    if not gens:
        raise ParseError("no generators", "$")
    nv = n_vertices if n_vertices is not None else len(gens[0])
    try:
        return SimplicialAction(nv, gens)
    except InvalidAction as e:
        raise ParseError(str(e), "$") from None
