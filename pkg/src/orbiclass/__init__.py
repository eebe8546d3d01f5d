"""Manifold recognition for quotients of Euclidean space by finite
orthogonal groups, with an exact simplicial-homology cross-check."""

from .catalog import make_family, parse_family
from .classifier import decompose, recognize_poincare, verdicts
from .cyclotomic import Scalar, compare_real, make_scalar
from .groups import CapExceeded, MatrixGroup, closure
from .linalg import Matrix, Subspace

__version__ = "0.1.0"

__all__ = [
    "CapExceeded",
    "Matrix",
    "MatrixGroup",
    "Scalar",
    "Subspace",
    "closure",
    "compare_real",
    "decompose",
    "make_family",
    "make_scalar",
    "parse_family",
    "recognize_poincare",
    "verdicts",
]
