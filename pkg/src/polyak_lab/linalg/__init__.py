from .elimination import EchelonBasis, in_span, orthogonal_complement, row_space
from .formal_sum import FormalSum
from .maps import average, bar_sum, i_chord, i_gpv, i_gpv_inverse, i_gpv_sum, xi_sum
from .system import Provenance, RelationSystem

__all__ = [
    "EchelonBasis",
    "FormalSum",
    "Provenance",
    "RelationSystem",
    "average",
    "bar_sum",
    "i_chord",
    "i_gpv",
    "i_gpv_inverse",
    "i_gpv_sum",
    "in_span",
    "orthogonal_complement",
    "row_space",
    "xi_sum",
]
