from .polyak import (
    MoveInstance,
    SignedRelation,
    generate_chord_relations,
    generate_polyak,
    homogeneous_part,
    polyak_instances,
    signed_relations,
)
from .transcribed import transcribed_chord_relations
from .two_term import caterpillar, two_term_classes, two_term_graph, two_term_path
from .unsigned import SixTermDecomposition, SixTermInstance, decompose_6T, generate_unsigned, six_term_instances

__all__ = [
    "MoveInstance",
    "SignedRelation",
    "SixTermDecomposition",
    "SixTermInstance",
    "caterpillar",
    "decompose_6T",
    "generate_chord_relations",
    "generate_polyak",
    "generate_unsigned",
    "homogeneous_part",
    "polyak_instances",
    "signed_relations",
    "six_term_instances",
    "transcribed_chord_relations",
    "two_term_classes",
    "two_term_graph",
    "two_term_path",
]
