"""
The subdiagram-sum maps between knot diagrams, arrow diagrams and chord diagrams.
"""
from fractions import Fraction
from typing import List

from ..definitions.exceptions import FlavorMismatchException
from ..definitions.namespace import Flavor, Style
from ..diagrams.core import ChordDiagram, Diagram, GaussDiagram
from ..diagrams.operations import bar, dash, orientations, restrict, undash, xi
from .formal_sum import FormalSum, Term


def i_gpv_terms(diagram: GaussDiagram) -> List[GaussDiagram]:
    """
    The ``2**(number of solid arrows)`` dashed subdiagrams summed by :func:`i_gpv`.

    Every dashed arrow of ``diagram`` survives in every term.
    """
    dashed = [k for k, a in enumerate(diagram.arrows) if a.style is Style.DASHED]
    solid = [k for k, a in enumerate(diagram.arrows) if a.style is Style.SOLID]
    out = []
    for mask in range(1 << len(solid)):
        keep = sorted(dashed + [k for bit, k in enumerate(solid) if mask >> bit & 1])
        out.append(dash(restrict(diagram, keep)))  # type: ignore
    return out


def i_gpv(diagram: GaussDiagram) -> FormalSum:
    return FormalSum.from_terms(
        diagram.flavor, diagram.skeleton, ((d, 1) for d in i_gpv_terms(diagram)), style=Style.DASHED
    )


def i_gpv_sum(vector: FormalSum) -> FormalSum:
    """Linear extension of :func:`i_gpv` to a sum of solid diagrams."""
    return vector.map(lambda d: [(t, 1) for t in i_gpv_terms(d)], vector.flavor, style=Style.DASHED)  # type: ignore


def _inverse_terms(diagram: Diagram) -> List[Term]:
    n = diagram.order
    out: List[Term] = []
    for mask in range(1 << n):
        keep = [k for k in range(n) if mask >> k & 1]
        sign = -1 if (n - len(keep)) % 2 else 1
        out.append((undash(restrict(diagram, keep)), sign))  # type: ignore
    return out


def i_gpv_inverse(vector: FormalSum) -> FormalSum:
    """
    Inverse of :func:`i_gpv` on the arrow space.

    Each dashed diagram ``A`` goes to ``sum over A' in A of (-1)**|A - A'| * solid(A')``.

    Raises:
        FlavorMismatchException: If ``vector`` is not a sum of dashed arrow diagrams.
    """
    if not vector.flavor.is_arrow or vector.style is not Style.DASHED:
        raise FlavorMismatchException("the inverse map takes a sum of dashed arrow diagrams")
    return vector.map(_inverse_terms, vector.flavor, style=Style.SOLID)


def bar_sum(vector: FormalSum) -> FormalSum:
    if not vector.flavor.is_arrow:
        raise FlavorMismatchException(f"bar takes arrow diagrams, got {vector.flavor.value}")
    target = Flavor.of(arrow=False, signed=vector.flavor.is_signed)
    return vector.map(lambda d: [(bar(d), 1)], target)  # type: ignore


def i_chord(diagram: GaussDiagram) -> FormalSum:
    return bar_sum(i_gpv(diagram))


def xi_sum(vector: FormalSum) -> FormalSum:
    if not vector.flavor.is_signed:
        raise FlavorMismatchException(f"sign erasure takes signed diagrams, got {vector.flavor.value}")
    target = Flavor.of(arrow=vector.flavor.is_arrow, signed=False)
    return vector.map(lambda d: [xi(d)[::-1]], target, style=vector.style)


def average(chords: ChordDiagram) -> FormalSum:
    """
    Sum of the ``2**n`` orientations of an unsigned chord diagram, as dashed arrow diagrams.

    Raises:
        FlavorMismatchException: If ``chords`` is signed or not a chord diagram.
    """
    if not isinstance(chords, ChordDiagram) or chords.signed:
        raise FlavorMismatchException("the average map takes an unsigned chord diagram")
    return FormalSum.from_terms(
        Flavor.ARROW_UNSIGNED, chords.skeleton, ((d, 1) for d in orientations(chords)), style=Style.DASHED
    )


def average_sum(vector: FormalSum) -> FormalSum:
    if vector.flavor is not Flavor.CHORD_UNSIGNED:
        raise FlavorMismatchException(f"the average map takes unsigned chord diagrams, got {vector.flavor.value}")
    return vector.map(
        lambda d: [(o, 1) for o in orientations(d)], Flavor.ARROW_UNSIGNED, style=Style.DASHED  # type: ignore
    )


def normalized_average_bar(chords: ChordDiagram) -> FormalSum:
    """``(1 / 2**n) * bar(average(C))``, which equals ``C``."""
    return bar_sum(average(chords)) * Fraction(1, 1 << chords.order)
