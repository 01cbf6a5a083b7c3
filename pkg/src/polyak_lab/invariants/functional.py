"""
Finite-type invariants as rational functionals on diagram spaces.

A functional of order ``n`` assigns a rational value to every canonical diagram
with at most ``n`` arrows (or chords) and is exactly orthogonal to the relation
rows of its constraint profile. A knot is evaluated by pairing the functional
with the subdiagram sum of its Gauss diagram.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterator, List, Optional, Tuple

from ..definitions.exceptions import ConventionMismatchException, FlavorMismatchException
from ..definitions.namespace import CountMode, Flavor, Profile, RelationKind, Skeleton, Style
from ..diagrams.core import Diagram, GaussDiagram, canonical
from ..diagrams.enumeration import enumerate_diagrams
from ..diagrams.operations import bar, dash, orientations, restrict, reverse_arrow
from ..linalg.formal_sum import FormalSum
from ..linalg.system import Provenance, RelationSystem
from ..relations.polyak import check_ceiling, generate_chord_relations, generate_polyak

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class InvariantFunctional:
    order: int
    skeleton: Skeleton
    entries: FormalSum
    profile: Profile = Profile.GPV

    def value(self, diagram: Diagram) -> Fraction:
        return self.entries.coefficient(diagram)

    @property
    def is_constant(self) -> bool:
        """Whether the functional is a multiple of the empty-diagram indicator."""
        return all(d.order == 0 for d in self.entries.terms)

    def __str__(self) -> str:
        return f"{self.profile.value}[{self.order},{self.skeleton.value}]: {self.entries}"


def profile_flavor(profile: Profile) -> Flavor:
    return Flavor.CHORD_SIGNED if profile is Profile.CHORD else Flavor.ARROW_SIGNED


def flip_constraints(n: int, skeleton: Skeleton, ceiling: Optional[int] = None) -> List[FormalSum]:
    """
    Differences ``D - D'`` where ``D'`` reverses one arrow of ``D``.

    ``D`` ranges over canonical dashed signed diagrams with ``1 .. n`` arrows.
    Vanishing differences are dropped and the rest deduplicated up to sign.

    Args:
        n (int): Highest arrow count.
        skeleton (Skeleton): Circle or line.
        ceiling (int | None): Signed arrow ceiling, the package default when omitted.

    Returns:
        list[FormalSum]: Sorted constraint vectors, each with leading coefficient 1.
    """
    check_ceiling("flip constraints", n, ceiling)
    found: Dict[Tuple, FormalSum] = {}
    for order in range(1, n + 1):
        for diagram in enumerate_diagrams(skeleton, Flavor.ARROW_SIGNED, order, style=Style.DASHED):
            for k in range(order):
                vector = FormalSum.single(diagram) - FormalSum.single(reverse_arrow(diagram, k))  # type: ignore
                if not vector:
                    continue
                vector = vector * (1 / vector.items()[0][1])
                found.setdefault(tuple((d.encode(), c) for d, c in vector.items()), vector)
    _logger.debug(f"flip constraints: {len(found)} distinct rows up to order {n} on {skeleton.value}")
    return [found[key] for key in sorted(found)]


def constraint_system(
    n: int,
    skeleton: Skeleton,
    profile: Profile,
    ceiling: Optional[int] = None,
) -> RelationSystem:
    """
    The relation rows a functional of the given profile must annihilate.

    Truncated Polyak relations for ``gpv`` (plus the flip constraints for
    ``gpv+virtualization``); truncated chord relations for ``chord``.
    """
    if profile is Profile.CHORD:
        return generate_chord_relations(n, skeleton, ceiling=ceiling)
    system = generate_polyak(n, skeleton, ceiling=ceiling)
    if profile is Profile.GPV_VIRTUALIZATION:
        flips = flip_constraints(n, skeleton, ceiling)
        system.extend((row, Provenance(RelationKind.FLIP.value, f"flip#{i}")) for i, row in enumerate(flips))
        system.name = f"dP+flip[{n},{skeleton.value}]"
    return system


def invariant_space(
    n: int,
    skeleton: Skeleton,
    profile: Profile = Profile.GPV,
    ceiling: Optional[int] = None,
    system: Optional[RelationSystem] = None,
) -> List[InvariantFunctional]:
    """
    Basis of the functionals of order ``n`` annihilating the profile's relations.

    Args:
        n (int): Order.
        skeleton (Skeleton): Circle or line.
        profile (Profile): Constraint profile.
        ceiling (int | None): Signed arrow ceiling, the package default when omitted.
        system (RelationSystem | None): A precomputed constraint system (e.g. from the cache).

    Returns:
        list[InvariantFunctional]: Normalized basis; the empty-diagram indicator
        (the constants) is always a member.

    Raises:
        ResourceLimitException: If ``n`` exceeds the ceiling.
    """
    if system is None:
        system = constraint_system(n, skeleton, profile, ceiling)
    basis = [InvariantFunctional(n, skeleton, vector, profile) for vector in system.complement()]
    _logger.debug(f"{profile.value} invariants of order {n} on {skeleton.value}: dimension {len(basis)}")
    return basis


def pairing_terms(knot: GaussDiagram, n: int) -> Iterator[GaussDiagram]:
    """
    Dashed subdiagrams of ``knot`` with at most ``n`` arrows.

    Every dashed arrow of ``knot`` is kept; solid arrows are chosen freely.
    """
    dashed = [k for k, a in enumerate(knot.arrows) if a.style is Style.DASHED]
    solid = [k for k, a in enumerate(knot.arrows) if a.style is Style.SOLID]
    room = n - len(dashed)
    for size in range(min(room, len(solid)) + 1):
        for chosen in combinations(solid, size):
            yield dash(restrict(knot, sorted(dashed + list(chosen))))  # type: ignore


def evaluate(functional: InvariantFunctional, knot: GaussDiagram) -> Fraction:
    """
    Value of a functional on a knot.

    Args:
        functional (InvariantFunctional): Any profile; chord functionals are paired
            with the bar of each subdiagram.
        knot (GaussDiagram): A signed Gauss diagram (solid, or semivirtual).

    Returns:
        Fraction: ``sum of v(dash(D'))`` over subdiagrams ``D'`` with at most ``n`` arrows.

    Raises:
        FlavorMismatchException: If the skeletons differ or the knot is unsigned.
    """
    if knot.skeleton is not functional.skeleton:
        raise FlavorMismatchException(
            f"a {functional.skeleton.value} invariant cannot evaluate a {knot.skeleton.value} knot"
        )
    if not knot.signed:
        raise FlavorMismatchException("knots carry signed crossings")
    total = Fraction(0)
    for term in pairing_terms(knot, functional.order):
        total += functional.value(bar(term) if functional.profile is Profile.CHORD else term)
    return total


def pullback_chord_functional(functional: InvariantFunctional) -> InvariantFunctional:
    """Lift a chord functional ``w`` to arrow diagrams as ``A -> w(bar(A))``."""
    if functional.profile is not Profile.CHORD:
        raise FlavorMismatchException(f"pullback takes a chord functional, got {functional.profile.value}")
    ambient = enumerate_diagrams(
        functional.skeleton, Flavor.ARROW_SIGNED, functional.order, CountMode.UP_TO, Style.DASHED
    )
    entries = FormalSum.from_terms(
        Flavor.ARROW_SIGNED,
        functional.skeleton,
        ((d, functional.value(bar(d))) for d in ambient),  # type: ignore
        style=Style.DASHED,
    )
    return InvariantFunctional(functional.order, functional.skeleton, entries, Profile.GPV_VIRTUALIZATION)


def descend_to_chord(functional: InvariantFunctional) -> InvariantFunctional:
    """
    Push a flip-invariant arrow functional down to signed chord diagrams.

    Raises:
        FlavorMismatchException: If the functional is not of the ``gpv+virtualization`` profile.
        ConventionMismatchException: If two orientations of one chord diagram disagree.
    """
    if functional.profile is not Profile.GPV_VIRTUALIZATION:
        raise FlavorMismatchException(f"descent takes a flip-invariant functional, got {functional.profile.value}")
    terms = []
    ambient = enumerate_diagrams(functional.skeleton, Flavor.CHORD_SIGNED, functional.order, CountMode.UP_TO)
    for chords in ambient:
        values = {functional.value(canonical(o)) for o in orientations(chords)}  # type: ignore
        if len(values) != 1:
            raise ConventionMismatchException(
                "orientations of one chord diagram take different values", chords.encode()
            )
        terms.append((chords, values.pop()))
    entries = FormalSum.from_terms(Flavor.CHORD_SIGNED, functional.skeleton, terms)
    return InvariantFunctional(functional.order, functional.skeleton, entries, Profile.CHORD)

