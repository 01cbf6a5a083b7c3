"""
Elementary maps on diagrams: subdiagrams, reversal, bar, sign erasure and orientations.
"""
import itertools
from dataclasses import replace
from typing import Iterable, List, Sequence, Tuple

from ..definitions.exceptions import DiagramValidationException, FlavorMismatchException
from ..definitions.namespace import Skeleton, Style
from .core import Arrow, Chord, ChordDiagram, Diagram, GaussDiagram


def _compaction(points: Iterable[int]) -> dict:
    return {old: new for new, old in enumerate(sorted(points))}


def restrict(diagram: Diagram, keep: Sequence[int]) -> Diagram:
    """
    Keep only the arrows (or chords) with the given indices, recompacting endpoints.

    Args:
        diagram (Diagram): Source diagram.
        keep (Sequence[int]): Indices into ``diagram.arrows`` / ``diagram.chords``.

    Returns:
        Diagram: The induced subdiagram.
    """
    if isinstance(diagram, GaussDiagram):
        kept_arrows = [diagram.arrows[i] for i in keep]
        remap = _compaction(p for a in kept_arrows for p in (a.tail, a.head))
        return replace(diagram, arrows=tuple(replace(a, tail=remap[a.tail], head=remap[a.head]) for a in kept_arrows))
    kept_chords = [diagram.chords[i] for i in keep]
    remap = _compaction(p for c in kept_chords for p in (c.a, c.b))
    return replace(diagram, chords=tuple(Chord(remap[c.a], remap[c.b], c.sign) for c in kept_chords))


def subdiagrams(diagram: Diagram) -> List[Diagram]:
    """All ``2**n`` induced subdiagrams, ordered by the bitmask of kept arrows."""
    n = diagram.order
    return [
        restrict(diagram, [i for i in range(n) if mask >> i & 1])
        for mask in range(1 << n)
    ]


def reverse_arrow(diagram: GaussDiagram, k: int) -> GaussDiagram:
    if not 0 <= k < diagram.order:
        raise DiagramValidationException(f"arrow index {k} out of range for {diagram.order} arrows", k)
    arrows = list(diagram.arrows)
    arrows[k] = arrows[k].reversed()
    return replace(diagram, arrows=tuple(arrows))


def reverse_all(diagram: GaussDiagram) -> GaussDiagram:
    return replace(diagram, arrows=tuple(a.reversed() for a in diagram.arrows))


def bar(diagram: GaussDiagram) -> ChordDiagram:
    return ChordDiagram(
        skeleton=diagram.skeleton,
        chords=tuple(Chord(a.tail, a.head, a.sign) for a in diagram.arrows),
        signed=diagram.signed,
    )


def xi(diagram: Diagram) -> Tuple[int, Diagram]:
    """
    Erase the signs of a signed diagram.

    Returns:
        tuple[int, Diagram]: ``(-1) ** (number of negative signs)`` and the unsigned diagram.

    Raises:
        FlavorMismatchException: If the diagram is already unsigned.
    """
    if not diagram.signed:
        raise FlavorMismatchException(f"sign erasure needs a signed diagram, got {diagram.flavor.value}")
    coefficient = -1 if diagram.negative_count % 2 else 1
    if isinstance(diagram, GaussDiagram):
        return coefficient, replace(diagram, arrows=tuple(replace(a, sign=0) for a in diagram.arrows), signed=False)
    return coefficient, replace(diagram, chords=tuple(Chord(c.a, c.b, 0) for c in diagram.chords), signed=False)


def orientations(chords: ChordDiagram, style: Style = Style.DASHED) -> List[GaussDiagram]:
    """The ``2**n`` arrow diagrams whose bar is ``chords``, before any merging."""
    out = []
    for flips in itertools.product((False, True), repeat=chords.order):
        arrows = tuple(
            Arrow(tail=c.b, head=c.a, sign=c.sign, style=style) if flip
            else Arrow(tail=c.a, head=c.b, sign=c.sign, style=style)
            for c, flip in zip(chords.chords, flips)
        )
        out.append(GaussDiagram(skeleton=chords.skeleton, arrows=arrows, signed=chords.signed))
    return out


def dash(diagram: GaussDiagram) -> GaussDiagram:
    return diagram.with_style(Style.DASHED)


def undash(diagram: GaussDiagram) -> GaussDiagram:
    return diagram.with_style(Style.SOLID)


def is_isolated(diagram: Diagram, k: int) -> bool:
    """Whether element ``k`` has skeleton-adjacent endpoints (cyclically on the circle)."""
    if isinstance(diagram, GaussDiagram):
        a, b = diagram.arrows[k].tail, diagram.arrows[k].head
    else:
        a, b = diagram.chords[k].a, diagram.chords[k].b
    gap = abs(a - b)
    return gap == 1 or (diagram.skeleton is Skeleton.CIRCLE and gap == 2 * diagram.order - 1)


def has_isolated(diagram: Diagram) -> bool:
    return any(is_isolated(diagram, k) for k in range(diagram.order))
