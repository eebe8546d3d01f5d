"""
Command-line entry point.

    orbiclass classify --family "dihedral(4)"
    orbiclass classify --input group.json --cap 20000
    orbiclass verify-complex --fixture cell600
    orbiclass quotient --input K.txt --action A.txt --format text
    orbiclass catalog [--family SPEC]

Exit codes: 0 success, 2 bad input, 3 closure cap or coset bound
exceeded, 4 internal error.
"""

from __future__ import annotations

import argparse
import os
import random
import sys
import tempfile
from math import lcm

from .catalog import FAMILIES, COMPOSITE, UnknownFamily, family_order, make_family, parse_family
from .classifier import verdicts
from .formats import (
    GroupInput,
    ParseError,
    complex_to_json,
    complex_to_text,
    dumps,
    group_to_json,
    parse_action,
    parse_complex,
    parse_group,
)
from .groups import DEFAULT_CAP, CapExceeded, NonOrthogonalGenerator, closure
from .linalg import Matrix
from .report import SCHEMA, classification_report, render_text, verification_report
from .topology.complex import ComplexError
from .topology.fixtures import FIXTURES, get_fixture
from .topology.homology import homology
from .topology.presentation import DEFAULT_COSET_BOUND
from .topology.quotient import quotient

__all__ = ["main", "build_parser", "EXIT_OK", "EXIT_PARSE", "EXIT_BOUND", "EXIT_INTERNAL"]

EXIT_OK, EXIT_PARSE, EXIT_BOUND, EXIT_INTERNAL = 0, 2, 3, 4


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise ParseError(f"cannot read file: {e.strerror}", path) from None


def _emit(payload: dict, args, text: str | None = None) -> None:
    """Write the whole output in one go; with --output, atomically."""
    if text is None:
        text = dumps(payload) if args.format == "json" else render_text(payload)
    if getattr(args, "output", None):
        d = os.path.dirname(os.path.abspath(args.output))
        fd, tmp = tempfile.mkstemp(dir=d, prefix=".orbiclass-")
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, args.output)
    else:
        sys.stdout.write(text)
        sys.stdout.flush()


# group inputs

def _signed_permutation(n: int, rng: random.Random) -> Matrix:
    perm = list(range(n))
    rng.shuffle(perm)
    signs = [rng.choice((1, -1)) for _ in range(n)]
    return Matrix.from_rows([[signs[i] if perm[i] == j else 0 for j in range(n)] for i in range(n)])


def _load_group(args) -> tuple[GroupInput, dict]:
    if args.family:
        try:
            spec = parse_family(args.family)
            gens = make_family(spec)
        except (UnknownFamily, ValueError) as e:
            raise ParseError(str(e), "--family") from None
        m = lcm(*(g.conductor for g in gens))
        return GroupInput(gens[0].rows, m, [g.promote(m) for g in gens]), {"family": str(spec)}
    g = parse_group(_read(args.input))
    return g, {"input": os.path.basename(args.input)}


def cmd_classify(args) -> int:
    g, source = _load_group(args)
    gens = g.generators
    if args.conjugate:
        Q = _signed_permutation(g.dimension, random.Random(args.seed))
        gens = [Q @ A @ Q.T for A in gens]
        source = dict(source, conjugated_with_seed=args.seed)
    cap = args.cap if args.cap is not None else (g.cap or DEFAULT_CAP)
    G = closure(gens, cap=cap, conductor=g.conductor)
    rep = verdicts(G, workers=args.threads)
    _emit(classification_report(rep, source), args)
    return EXIT_OK


# complex inputs

def _load_complex(args):
    if args.fixture:
        try:
            K, act = get_fixture(args.fixture)
        except (ComplexError, ValueError) as e:
            raise ParseError(str(e), "--fixture") from None
        source = {"fixture": args.fixture}
    else:
        try:
            K = parse_complex(_read(args.input))
        except ComplexError as e:
            raise ParseError(str(e), args.input) from None
        act = None
        source = {"input": os.path.basename(args.input)}
    if args.action:
        act = parse_action(_read(args.action), K.n_vertices)
        source["action"] = os.path.basename(args.action)
    elif args.no_action:
        act = None
    return K, act, source


def cmd_verify_complex(args) -> int:
    K, act, source = _load_complex(args)
    out = verification_report(K, act, args.dim, args.coset_bound, source)
    _emit(out.report, args)
    return EXIT_BOUND if out.bound_exceeded else EXIT_OK


def cmd_quotient(args) -> int:
    K, act, source = _load_complex(args)
    if act is None:
        raise ParseError("quotient needs an action (--action or a fixture that ships one)", "--action")
    Q, proj, L = quotient(K, act)
    if args.format == "text":
        _emit({}, args, complex_to_text(Q))
        return EXIT_OK
    payload = {
        "schema": SCHEMA,
        "command": "quotient",
        "source": source,
        "subdivided_f_vector": list(L.f_vector()),
        "f_vector": list(Q.f_vector()),
        "homology": homology(Q).to_json(),
        "projection": proj,
        "complex": complex_to_json(Q),
    }
    _emit(payload, args)
    return EXIT_OK


def cmd_catalog(args) -> int:
    if args.family:
        g, _ = _load_group(args)
        _emit(group_to_json(g), args, dumps(group_to_json(g)))
        return EXIT_OK
    fams = []
    for name, (_, arity) in FAMILIES.items():
        fams.append({"name": name, "parameters": arity})
    for name in COMPOSITE:
        fams.append({"name": name, "parameters": "families"})
    payload = {
        "schema": SCHEMA,
        "command": "catalog",
        "families": fams,
        "examples": {s: family_order(s) for s in (
            "dihedral(4)", "signed_permutation_reflections(3)", "binary_icosahedral()",
            "direct_sum(signed_permutation_reflections(2), binary_icosahedral())")},
        "fixtures": sorted(FIXTURES),
    }
    _emit(payload, args)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="orbiclass", description="Manifold verdicts for R^n/G and simplicial checks.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=("json", "text"), default="json")
        sp.add_argument("--output", metavar="PATH", help="write the report here instead of stdout")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--threads", type=_positive, default=1)
        sp.add_argument("-v", "--verbose", action="count", default=0)

    c = sub.add_parser("classify", help="classify R^n/G for a finite orthogonal group")
    src = c.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", metavar="PATH", help="group JSON")
    src.add_argument("--family", metavar="SPEC", help='catalog family such as "dihedral(4)"')
    c.add_argument("--cap", type=_positive, default=None, help=f"closure cap (default {DEFAULT_CAP})")
    c.add_argument("--conjugate", action="store_true",
                   help="conjugate by a random signed permutation drawn from --seed")
    common(c)
    c.set_defaults(func=cmd_classify)

    for name, fn, helptext in (
        ("verify-complex", cmd_verify_complex, "homology, manifold tests and pi_1 of a complex"),
        ("quotient", cmd_quotient, "quotient of a complex by a simplicial action"),
    ):
        v = sub.add_parser(name, help=helptext)
        src = v.add_mutually_exclusive_group(required=True)
        src.add_argument("--input", metavar="PATH", help="complex file (line format or JSON)")
        src.add_argument("--fixture", metavar="NAME", help="named complex, e.g. octahedron or cell600")
        v.add_argument("--action", metavar="PATH", help="one permutation per line")
        v.add_argument("--no-action", action="store_true", help="ignore the action a fixture ships with")
        v.add_argument("--dim", type=int, default=None, help="manifold dimension to test (default: complex dimension)")
        v.add_argument("--coset-bound", type=_positive, default=DEFAULT_COSET_BOUND)
        common(v)
        v.set_defaults(func=fn)

    k = sub.add_parser("catalog", help="list families, or emit group JSON for one")
    k.add_argument("--family", metavar="SPEC")
    k.add_argument("--input", help=argparse.SUPPRESS)
    common(k)
    k.set_defaults(func=cmd_catalog)
    return p


def _error(kind: str, message: str, location: str = "", **extra) -> dict:
    err = {"type": kind, "message": message}
    if location:
        err["location"] = location
    err.update(extra)
    return {"schema": SCHEMA, "error": err}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as e:
        payload, code = _error("ParseError", str(e), e.location), EXIT_PARSE
    except NonOrthogonalGenerator as e:
        payload, code = _error("NonOrthogonalGenerator", str(e), index=e.index), EXIT_PARSE
    except (ComplexError, ValueError) as e:
        payload, code = _error(type(e).__name__, str(e)), EXIT_PARSE
    except CapExceeded as e:
        payload, code = _error("CapExceeded", str(e), cap=e.cap), EXIT_BOUND
    except Exception as e:  # noqa: BLE001 - last-resort reporting
        payload, code = _error("InternalError", f"{type(e).__name__}: {e}"), EXIT_INTERNAL
    sys.stderr.write(payload["error"]["type"] + ": " + payload["error"]["message"] + "\n")
    sys.stdout.write(dumps(payload))
    return code


if __name__ == "__main__":
    sys.exit(main())
