"""Exact Clifford superalgebra engine verifying twisted duality C(W)' = C(W^⊥)."""

from .scalar import GaussianRational, gr
from .clifford import Multivector, bar, gamma, mul, star, trace, trace_inner, vector
from .subspace import Subspace, orthogonal_complement, span
from .duality import AlgebraSubspace, subalgebra_span, supercommutant, verify_twisted_duality

__version__ = "0.1.0"

__all__ = [
    "AlgebraSubspace",
    "GaussianRational",
    "Multivector",
    "Subspace",
    "bar",
    "gamma",
    "gr",
    "mul",
    "orthogonal_complement",
    "span",
    "star",
    "subalgebra_span",
    "supercommutant",
    "trace",
    "trace_inner",
    "vector",
    "verify_twisted_duality",
]
