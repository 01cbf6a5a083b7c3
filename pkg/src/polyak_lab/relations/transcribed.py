"""
Reidemeister relations written directly on signed chord diagrams.

These are instantiated without passing through arrow diagrams and serve as an
independent cross-check of the bar images of the Polyak relations.
"""
from itertools import combinations
from typing import Dict, Hashable, List, Optional, Sequence, Tuple

from ..definitions.namespace import CountMode, Flavor, RelationKind, Skeleton
from ..diagrams.core import ChordDiagram
from ..diagrams.enumeration import enumerate_diagrams
from ..diagrams.moves import Placement, R3Configuration, insert_chord_blocks, placements
from ..diagrams.operations import restrict
from ..linalg.formal_sum import FormalSum
from ..linalg.system import Provenance, RelationSystem
from .polyak import check_ceiling


def _terms(
    context: ChordDiagram,
    blocks: Sequence[Tuple[Hashable, ...]],
    placement: Placement,
    signs: Dict[Hashable, int],
    sizes: Sequence[int],
) -> List[ChordDiagram]:
    """Subdiagrams keeping the whole context and ``size`` of the new chords, for each size."""
    diagram, firsts = insert_chord_blocks(context, blocks, placement, signs)
    starts = set(firsts.values())
    new = [k for k, c in enumerate(diagram.chords) if c.a in starts]
    old = [k for k in range(diagram.order) if k not in new]
    return [
        restrict(diagram, sorted(old + list(chosen)))  # type: ignore
        for size in sizes
        for chosen in combinations(new, size)
    ]


def transcribed_chord_relations(n: int, skeleton: Skeleton, ceiling: Optional[int] = None) -> RelationSystem:
    """
    Chord relations of order ``n``: an isolated chord; the three-term bigon
    (parallel and antiparallel strands); the 4 + 4 term triangle.
    """
    check_ceiling("transcribed chord relations", n, ceiling)
    pairs: List[Tuple[FormalSum, Provenance]] = []

    def emit(kind: RelationKind, terms: List[Tuple[ChordDiagram, int]], site: str) -> None:
        row = FormalSum.from_terms(Flavor.CHORD_SIGNED, skeleton, terms).truncate(n)
        pairs.append((row, Provenance(kind.value, site)))

    for order in range(n):
        for context in enumerate_diagrams(skeleton, Flavor.CHORD_SIGNED, order):
            site = f"ctx={context.encode()}"
            for placement in placements(context, 1):
                for sign in (1, -1):
                    terms = _terms(context, [("a", "a")], placement, {"a": sign}, (1,))  # type: ignore
                    emit(RelationKind.DELTA_RI, [(d, 1) for d in terms], f"{site} at={placement} {sign:+d}")
            for placement in placements(context, 2):
                for parallel in (True, False):
                    for sign in (1, -1):
                        blocks = [("a", "b"), ("a", "b") if parallel else ("b", "a")]
                        terms = _terms(context, blocks, placement, {"a": sign, "b": -sign}, (1, 2))  # type: ignore
                        emit(RelationKind.DELTA_RII, [(d, 1) for d in terms], f"{site} at={placement} {sign:+d}")
    for order in range(n - 1):
        for context in enumerate_diagrams(skeleton, Flavor.CHORD_SIGNED, order):
            for placement in placements(context, 3):
                for config in R3Configuration.all():
                    before = [tuple(label for label, _ in block) for block in config.blocks()]
                    after = [block[::-1] for block in before]
                    signed_terms = [
                        (d, coefficient)
                        for blocks, coefficient in ((before, 1), (after, -1))
                        for d in _terms(context, blocks, placement, config.signs(), (2, 3))  # type: ignore
                    ]
                    emit(RelationKind.DELTA_RIII, signed_terms, f"ctx={context.encode()} at={placement} cfg={config}")
    return RelationSystem(
        flavor=Flavor.CHORD_SIGNED,
        skeleton=skeleton,
        ambient=enumerate_diagrams(skeleton, Flavor.CHORD_SIGNED, n, CountMode.UP_TO),
        rows=[row for row, _ in pairs],
        provenance=[p for _, p in pairs],
        name=f"dR-transcribed[{n},{skeleton.value}]",
    )
