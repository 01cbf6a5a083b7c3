"""
Polyak relations on signed dashed arrow diagrams and their chord images.

Every relation is the difference ``I_GPV(L) - I_GPV(R)`` of two semivirtual
diagrams related by one Reidemeister move: the move's own arrows are solid, the
surrounding context is dashed.
"""
import logging
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from ..definitions.constants import DEFAULT_ARROW_CEILING
from ..definitions.exceptions import ResourceLimitException
from ..definitions.namespace import CountMode, Flavor, RelationKind, Skeleton, Style
from ..diagrams.core import GaussDiagram, sort_key
from ..diagrams.enumeration import enumerate_diagrams
from ..diagrams.moves import (
    Placement,
    R1Configuration,
    R1Insert,
    R2Configuration,
    R2Insert,
    R3,
    R3Configuration,
    apply_r_move,
    insert_triangle,
    placements,
)
from ..linalg.maps import bar_sum, i_gpv_terms
from ..linalg.formal_sum import FormalSum
from ..linalg.system import Provenance, RelationSystem

_logger = logging.getLogger(__name__)

MOVE_KINDS: Tuple[RelationKind, ...] = (RelationKind.DELTA_PI, RelationKind.DELTA_PII, RelationKind.DELTA_PIII)
CHORD_KIND: Dict[RelationKind, RelationKind] = {
    RelationKind.DELTA_PI: RelationKind.DELTA_RI,
    RelationKind.DELTA_PII: RelationKind.DELTA_RII,
    RelationKind.DELTA_PIII: RelationKind.DELTA_RIII,
}
# arrows a move adds on top of its context
MOVE_ARROWS: Dict[RelationKind, int] = {
    RelationKind.DELTA_PI: 1,
    RelationKind.DELTA_PII: 2,
    RelationKind.DELTA_PIII: 3,
}


@dataclass(frozen=True)
class MoveInstance:
    """One Reidemeister move site: the semivirtual diagrams before and after."""
    kind: RelationKind
    context: GaussDiagram
    left: GaussDiagram
    right: GaussDiagram
    site: str
    placement: Optional[Placement] = None

    def side_terms(self) -> Tuple[List[GaussDiagram], List[GaussDiagram]]:
        """Subdiagram terms of each side, with terms common to both sides removed."""
        left = i_gpv_terms(self.left)
        right = i_gpv_terms(self.right)
        remaining = list(right)
        kept = []
        for term in left:
            if term in remaining:
                remaining.remove(term)
            else:
                kept.append(term)
        return kept, remaining

    def vector(self, truncate: Optional[int] = None) -> FormalSum:
        left, right = self.side_terms()
        vector = FormalSum.from_terms(
            Flavor.ARROW_SIGNED,
            self.context.skeleton,
            [(d, 1) for d in left] + [(d, -1) for d in right],
            style=Style.DASHED,
        )
        return vector if truncate is None else vector.truncate(truncate)

    @property
    def provenance(self) -> Provenance:
        return Provenance(self.kind.value, self.site)


def check_ceiling(what: str, n: int, ceiling: Optional[int]) -> None:
    ceiling = DEFAULT_ARROW_CEILING if ceiling is None else ceiling
    if n < 0:
        raise ValueError(f"order must be non-negative, got {n}")
    if n > ceiling:
        raise ResourceLimitException(what, n, ceiling)


def contexts(skeleton: Skeleton, order: int) -> List[GaussDiagram]:
    return enumerate_diagrams(skeleton, Flavor.ARROW_SIGNED, order, style=Style.DASHED)  # type: ignore


def move_instances(context: GaussDiagram, kind: RelationKind) -> Iterator[MoveInstance]:
    """Every move of ``kind`` whose untouched arrows form ``context``."""
    prefix = f"ctx={context.encode()}"
    if kind is RelationKind.DELTA_PI:
        for placement in placements(context, 1):
            for config in R1Configuration.all():
                left = apply_r_move(context, R1Insert(placement.gaps[0], config))
                yield MoveInstance(kind, context, left, context, f"{prefix} at={placement} cfg={config}", placement)
    elif kind is RelationKind.DELTA_PII:
        for placement in placements(context, 2):
            for config in R2Configuration.all():
                left = apply_r_move(context, R2Insert(placement, config))
                yield MoveInstance(kind, context, left, context, f"{prefix} at={placement} cfg={config}", placement)
    elif kind is RelationKind.DELTA_PIII:
        for placement in placements(context, 3):
            for config in R3Configuration.all():
                left, triple = insert_triangle(context, placement, config)
                right = apply_r_move(left, R3(triple, config))
                yield MoveInstance(kind, context, left, right, f"{prefix} at={placement} cfg={config}", placement)
    else:
        raise ValueError(f"{kind.value} is not a move relation")


def polyak_instances(
    n: int,
    skeleton: Skeleton,
    kinds: Sequence[RelationKind] = MOVE_KINDS,
    context_orders: Optional[Iterable[int]] = None,
) -> Iterator[MoveInstance]:
    """
    Move instances whose relation has a term with at most ``n`` arrows.

    By default the context ranges over every order that still leaves such a term:
    up to ``n - 1`` arrows for R1 and R2, up to ``n - 2`` for R3.
    """
    for kind in kinds:
        smallest_term = 2 if kind is RelationKind.DELTA_PIII else 1
        orders = range(n - smallest_term + 1) if context_orders is None else context_orders
        for order in orders:
            if order < 0:
                continue
            for context in contexts(skeleton, order):
                yield from move_instances(context, kind)


def generate_polyak(
    n: int,
    skeleton: Skeleton,
    truncated: bool = True,
    ceiling: Optional[int] = None,
) -> RelationSystem:
    """
    Polyak relations of order ``n``.

    Args:
        n (int): Truncation order.
        skeleton (Skeleton): Circle or line.
        truncated (bool): Drop terms with more than ``n`` arrows.
        ceiling (int | None): Signed arrow ceiling, the package default when omitted.

    Returns:
        RelationSystem: Rows over dashed signed diagrams (all diagrams with at most
        ``n`` arrows when truncated, otherwise the union of the row supports).

    Raises:
        ResourceLimitException: If ``n`` exceeds the ceiling.
    """
    check_ceiling("polyak relations", n, ceiling)
    pairs = []
    counts: Dict[RelationKind, int] = {}
    for instance in polyak_instances(n, skeleton):
        pairs.append((instance.vector(n if truncated else None), instance.provenance))
        counts[instance.kind] = counts.get(instance.kind, 0) + 1
    for kind, count in counts.items():
        _logger.debug(f"{kind.value}: {count} move instances at order {n} on {skeleton.value}")
    if truncated:
        ambient = enumerate_diagrams(skeleton, Flavor.ARROW_SIGNED, n, CountMode.UP_TO, Style.DASHED)
    else:
        ambient = sorted({d for row, _ in pairs for d in row.terms}, key=sort_key)
    return RelationSystem(
        flavor=Flavor.ARROW_SIGNED,
        skeleton=skeleton,
        ambient=ambient,
        rows=[row for row, _ in pairs],
        provenance=[p for _, p in pairs],
        style=Style.DASHED,
        name=f"dP{'' if truncated else '-untruncated'}[{n},{skeleton.value}]",
    )


def generate_chord_relations(
    n: int,
    skeleton: Skeleton,
    truncated: bool = True,
    ceiling: Optional[int] = None,
) -> RelationSystem:
    """Bar images of the Polyak relations, over signed chord diagrams."""
    check_ceiling("chord relations", n, ceiling)
    pairs = []
    for instance in polyak_instances(n, skeleton):
        row = bar_sum(instance.vector(n if truncated else None))
        pairs.append((row, Provenance(CHORD_KIND[instance.kind].value, instance.site)))
    if truncated:
        ambient = enumerate_diagrams(skeleton, Flavor.CHORD_SIGNED, n, CountMode.UP_TO)
    else:
        ambient = sorted({d for row, _ in pairs for d in row.terms}, key=sort_key)
    return RelationSystem(
        flavor=Flavor.CHORD_SIGNED,
        skeleton=skeleton,
        ambient=ambient,
        rows=[row for row, _ in pairs],
        provenance=[p for _, p in pairs],
        name=f"dR{'' if truncated else '-untruncated'}[{n},{skeleton.value}]",
    )


def homogeneous_part(vector: FormalSum, degree: int) -> FormalSum:
    return vector.homogeneous_part(degree)


@dataclass(frozen=True)
class SignedRelation:
    """A degree-``n`` relation together with the move instance it was cut from."""
    kind: RelationKind
    vector: FormalSum
    source: MoveInstance

    def chord(self) -> FormalSum:
        return bar_sum(self.vector)

    @property
    def provenance(self) -> Provenance:
        return Provenance(self.kind.value, self.source.site)


SIGNED_SOURCES: Dict[RelationKind, Tuple[RelationKind, int]] = {
    RelationKind.ONE_TERM_SIGNED: (RelationKind.DELTA_PI, 1),
    RelationKind.NS: (RelationKind.DELTA_PII, 1),
    RelationKind.SIX_TERM_SIGNED: (RelationKind.DELTA_PIII, 2),
}


def signed_relations(
    kind: RelationKind,
    n: int,
    skeleton: Skeleton,
    ceiling: Optional[int] = None,
) -> List[SignedRelation]:
    """
    Degree-``n`` parts of move relations: 1T+- from R1, NS from R2, 6T+- from R3.

    The context has ``n - 1`` arrows (R1, R2) or ``n - 2`` arrows (R3).
    """
    if kind not in SIGNED_SOURCES:
        raise ValueError(f"{kind.value} is not a signed homogeneous relation")
    check_ceiling(f"{kind.value} relations", n, ceiling)
    source_kind, missing = SIGNED_SOURCES[kind]
    out: List[SignedRelation] = []
    seen = set()
    for instance in polyak_instances(n, skeleton, (source_kind,), context_orders=(n - missing,)):
        vector = homogeneous_part(instance.vector(), n)
        if not vector:
            continue
        key = tuple(vector.items())
        if key in seen:
            continue
        seen.add(key)
        out.append(SignedRelation(kind, vector, instance))
    _logger.debug(f"{kind.value}: {len(out)} distinct rows at order {n} on {skeleton.value}")
    return out
