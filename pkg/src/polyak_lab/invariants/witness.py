import logging
from typing import Optional

from ..definitions.constants import DEFAULT_WITNESS_BOUND, MAX_WITNESS_BOUND
from ..definitions.exceptions import FlavorMismatchException
from ..definitions.namespace import Flavor, Profile, Style
from ..definitions.structures import WitnessPair
from ..diagrams.core import GaussDiagram
from ..diagrams.enumeration import enumerate_diagrams
from ..diagrams.operations import reverse_arrow
from ..serialization.gauss_code import emit_gauss_code
from .functional import InvariantFunctional, evaluate

_logger = logging.getLogger(__name__)


def _search(functional: InvariantFunctional, low: int, high: int) -> Optional[WitnessPair]:
    for crossings in range(low, high + 1):
        knots = enumerate_diagrams(functional.skeleton, Flavor.ARROW_SIGNED, crossings, style=Style.SOLID)
        for knot in knots:
            assert isinstance(knot, GaussDiagram)
            value = evaluate(functional, knot)
            for k in range(crossings):
                flipped = reverse_arrow(knot, k)
                flipped_value = evaluate(functional, flipped)
                if flipped_value != value:
                    return WitnessPair(
                        knot=emit_gauss_code(knot),
                        flipped_knot=emit_gauss_code(flipped),
                        flipped_label=k + 1,
                        value=value,
                        flipped_value=flipped_value,
                    )
    return None


def find_witness(
    functional: InvariantFunctional,
    max_crossings: int = DEFAULT_WITNESS_BOUND,
    escalate: bool = True,
) -> Optional[WitnessPair]:
    """
    Find two knots one virtualization move apart that the functional separates.

    Candidates are canonical solid diagrams ordered by crossing count, then by
    key, then by the index of the reversed arrow; the first separating pair wins.

    Args:
        functional (InvariantFunctional): A ``gpv`` or ``gpv+virtualization`` functional.
        max_crossings (int): Largest crossing count searched.
        escalate (bool): Continue up to MAX_WITNESS_BOUND crossings when the bound is exhausted.

    Returns:
        WitnessPair | None: The first witness, or None if every flip preserves the value.

    Raises:
        FlavorMismatchException: For a chord functional.
    """
    if functional.profile is Profile.CHORD:
        raise FlavorMismatchException("chord functionals cannot see arrow directions")
    if functional.is_constant:
        return None
    witness = _search(functional, 1, max_crossings)
    if witness is None and escalate and max_crossings < MAX_WITNESS_BOUND:
        _logger.warning(
            f"no witness with at most {max_crossings} crossings for {functional}; "
            f"raising the bound to {MAX_WITNESS_BOUND}"
        )
        witness = _search(functional, max_crossings + 1, MAX_WITNESS_BOUND)
    return witness
