"""Exact symbolic verification of quantum superconformal geometry.

Layers: exact scalars over Q(i)[q, q^-1]; a parity-graded rewriting
core with a compiled kernel and a pure-Python fallback; the quantum
matrix superalgebra, Grassmannian and chiral Minkowski superspace; the
classical (q = 1) geometry and real forms; and a verification CLI.
"""

from .kernel import backend_name
from .scalars import Scalar, ScalarFraction

__version__ = "0.1.0"

__all__ = ["Scalar", "ScalarFraction", "backend_name", "__version__"]
