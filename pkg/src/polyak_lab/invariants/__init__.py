from .functional import (
    InvariantFunctional,
    constraint_system,
    descend_to_chord,
    evaluate,
    flip_constraints,
    invariant_space,
    pullback_chord_functional,
)
from .witness import find_witness

__all__ = [
    "InvariantFunctional",
    "constraint_system",
    "descend_to_chord",
    "evaluate",
    "flip_constraints",
    "invariant_space",
    "pullback_chord_functional",
    "find_witness",
]
