from .core import (
    Arrow,
    CanonicalKey,
    Chord,
    ChordDiagram,
    Diagram,
    GaussDiagram,
    canonical,
    canonical_form,
    canonical_key,
    decode_key,
    empty_diagram,
    sort_key,
)
from .enumeration import enumerate_diagrams
from .moves import (
    R1Configuration,
    R1Delete,
    R1Insert,
    R2Configuration,
    R2Delete,
    R2Insert,
    R3,
    R3Configuration,
    apply_r_move,
)
from .operations import bar, dash, has_isolated, orientations, reverse_arrow, subdiagrams, undash, xi

__all__ = [
    "Arrow",
    "CanonicalKey",
    "Chord",
    "ChordDiagram",
    "Diagram",
    "GaussDiagram",
    "canonical",
    "canonical_form",
    "canonical_key",
    "decode_key",
    "empty_diagram",
    "sort_key",
    "enumerate_diagrams",
    "R1Configuration",
    "R1Delete",
    "R1Insert",
    "R2Configuration",
    "R2Delete",
    "R2Insert",
    "R3",
    "R3Configuration",
    "apply_r_move",
    "bar",
    "dash",
    "has_isolated",
    "orientations",
    "reverse_arrow",
    "subdiagrams",
    "undash",
    "xi",
]
