"""
Unsigned relations: 1T and 6T on arrow or chord diagrams, 4T and 2T on chord diagrams.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from ..definitions.constants import DEFAULT_CHORD_CEILING
from ..definitions.exceptions import ConventionMismatchException, FlavorMismatchException
from ..definitions.namespace import Flavor, RelationKind, Skeleton, Style
from ..diagrams.core import ChordDiagram
from ..diagrams.enumeration import enumerate_diagrams
from ..diagrams.moves import Placement, insert_chord_blocks, placements
from ..diagrams.operations import bar, has_isolated, xi
from ..linalg.formal_sum import FormalSum
from ..linalg.maps import bar_sum, xi_sum
from ..linalg.system import Provenance, RelationSystem
from .polyak import MoveInstance, check_ceiling, signed_relations
from .two_term import two_term_rows

_logger = logging.getLogger(__name__)

UNSIGNED_FLAVORS = (Flavor.ARROW_UNSIGNED, Flavor.CHORD_UNSIGNED)


def _unsigned_context(context) -> ChordDiagram:
    return xi(bar(context))[1]  # type: ignore


def four_term_at(context: ChordDiagram, placement: Placement) -> FormalSum:
    """
    The 4T combination at three skeleton segments.

    Segment 0 holds endpoint ``p`` of chord ``a``, segment 2 holds its other
    endpoint ``q`` and segment 1 the fixed end of chord ``b``. The free end ``w``
    of ``b`` slides past ``p`` and past ``q``::

        (w after p) - (w before p) + (w after q) - (w before q)
    """
    fixed = ("b",)
    terms = []
    for coefficient, first, last in (
        (1, ("a", "b"), ("a",)),
        (-1, ("b", "a"), ("a",)),
        (1, ("a",), ("a", "b")),
        (-1, ("a",), ("b", "a")),
    ):
        diagram, _ = insert_chord_blocks(context, [first, fixed, last], placement, {"a": 0, "b": 0})
        terms.append((diagram, coefficient))
    return FormalSum.from_terms(Flavor.CHORD_UNSIGNED, context.skeleton, terms)


def four_term_rows(n: int, skeleton: Skeleton) -> List[Tuple[FormalSum, Provenance]]:
    out = []
    if n < 2:
        return out
    for context in enumerate_diagrams(skeleton, Flavor.CHORD_UNSIGNED, n - 2):
        for placement in placements(context, 3):
            row = four_term_at(context, placement)  # type: ignore
            if row:
                out.append((row, Provenance("4T", f"ctx={context.encode()} at={placement}")))
    return out


@dataclass(frozen=True)
class SixTermInstance:
    """An unsigned chord 6T row with the R3 site it comes from and the 4T row at that site."""
    vector: FormalSum
    four_term: FormalSum
    source: MoveInstance


def six_term_instances(n: int, skeleton: Skeleton, ceiling: Optional[int] = None) -> List[SixTermInstance]:
    out = []
    seen = set()
    for relation in signed_relations(RelationKind.SIX_TERM_SIGNED, n, skeleton, ceiling):
        vector = xi_sum(relation.chord())
        if not vector:
            continue
        key = tuple(vector.items())
        if key in seen:
            continue
        seen.add(key)
        four_term = four_term_at(_unsigned_context(relation.source.context), relation.source.placement)
        out.append(SixTermInstance(vector, four_term, relation.source))
    return out


def generate_unsigned(
    kind: RelationKind,
    n: int,
    skeleton: Skeleton,
    flavor: Flavor = Flavor.CHORD_UNSIGNED,
    ceiling: Optional[int] = None,
) -> RelationSystem:
    """
    Unsigned relations over diagrams with exactly ``n`` arrows or chords.

    Args:
        kind (RelationKind): 1T, 6T, 4T or 2T.
        n (int): Order, at least 1.
        skeleton (Skeleton): Circle or line.
        flavor (Flavor): ``ARROW_UNSIGNED`` or ``CHORD_UNSIGNED``; 4T and 2T need chords.
        ceiling (int | None): Ceiling for the signed relations 6T is built from.

    Returns:
        RelationSystem: The rows over every unsigned diagram of order ``n``.

    Raises:
        FlavorMismatchException: For a signed flavor, or 4T/2T on arrows.
        ResourceLimitException: If ``n`` exceeds the ceiling.
    """
    if flavor not in UNSIGNED_FLAVORS:
        raise FlavorMismatchException(f"unsigned relations live on unsigned diagrams, got {flavor.value}")
    if kind in (RelationKind.FOUR_TERM, RelationKind.TWO_TERM) and flavor.is_arrow:
        raise FlavorMismatchException(f"{kind.value} relations are defined on chord diagrams only")
    if n < 1:
        raise ValueError(f"unsigned relations need n >= 1, got {n}")
    if kind is not RelationKind.SIX_TERM:
        check_ceiling(f"{kind.value} relations", n, DEFAULT_CHORD_CEILING if ceiling is None else ceiling)
    style = Style.DASHED if flavor.is_arrow else None
    ambient = enumerate_diagrams(skeleton, flavor, n, style=Style.DASHED)
    pairs: List[Tuple[FormalSum, Provenance]] = []
    if kind is RelationKind.ONE_TERM:
        pairs = [(FormalSum.single(d), Provenance("1T", d.encode())) for d in ambient if has_isolated(d)]
    elif kind is RelationKind.SIX_TERM:
        for relation in signed_relations(RelationKind.SIX_TERM_SIGNED, n, skeleton, ceiling):
            vector = xi_sum(relation.vector) if flavor.is_arrow else xi_sum(relation.chord())
            pairs.append((vector, Provenance("6T", relation.source.site)))
    elif kind is RelationKind.FOUR_TERM:
        pairs = four_term_rows(n, skeleton)
    elif kind is RelationKind.TWO_TERM:
        pairs = two_term_rows(n, skeleton)
    else:
        raise ValueError(f"{kind.value} is not an unsigned relation")
    system = RelationSystem(
        flavor=flavor,
        skeleton=skeleton,
        ambient=ambient,
        rows=[row for row, _ in pairs],
        provenance=[p for _, p in pairs],
        style=style,
        name=f"{kind.value}[{n},{skeleton.value},{'arrow' if flavor.is_arrow else 'chord'}]",
    )
    _logger.debug(f"{system.name}: {len(system.rows)} rows over {system.width} diagrams")
    return system


@dataclass(frozen=True)
class SixTermDecomposition:
    four_term: FormalSum
    two_term_rows: List[FormalSum]
    coefficients: List[Fraction]


def decompose_6T(instance: SixTermInstance, two_term: RelationSystem) -> SixTermDecomposition:
    """
    Split a 6T row into the 4T row at its site plus an exact combination of 2T rows.

    Raises:
        ConventionMismatchException: If no such combination exists.
    """
    remainder = instance.vector - instance.four_term
    coefficients = two_term.express(remainder)
    if coefficients is None:
        raise ConventionMismatchException(
            "6T row is not a 4T row plus 2T rows",
            f"{instance.source.site}: {instance.vector}",
        )
    used = [(row, c) for row, c in zip(two_term.rows, coefficients) if c]
    return SixTermDecomposition(
        four_term=instance.four_term,
        two_term_rows=[row for row, _ in used],
        coefficients=[c for _, c in used],
    )
