"""Exact colored Alexander polynomials of knots for one-hook colors.

Braid closures are evaluated by quantum traces of sparse block operators over
the one-hook tensor-power graph, entirely in integer Laurent arithmetic.  The
headline capability is verifying the scaling identity
``A_color(q) == A_fundamental(q^size)`` exactly, knot by knot.
"""

from .braid import BraidWord, closure_is_knot, markov_variants, parse_braid
from .evaluator import AlexanderResult, ScalingReport, alexander, check_scaling
from .laurent import LaurentPoly, RationalFunc, qnum, qnum_bullet
from .oracle import burau_alexander
from .young import Hook, Partition, build_graph

__all__ = [
    "AlexanderResult",
    "BraidWord",
    "Hook",
    "LaurentPoly",
    "Partition",
    "RationalFunc",
    "ScalingReport",
    "alexander",
    "build_graph",
    "burau_alexander",
    "check_scaling",
    "closure_is_knot",
    "markov_variants",
    "parse_braid",
    "qnum",
    "qnum_bullet",
]
