import itertools
import logging
from typing import Iterator, List, Optional, Set, Tuple

from ..definitions.constants import DEFAULT_ENUMERATION_CEILING
from ..definitions.exceptions import ResourceLimitException
from ..definitions.namespace import CountMode, Flavor, Skeleton, Style
from .core import Arrow, Chord, ChordDiagram, Diagram, GaussDiagram, canonical, sort_key

_logger = logging.getLogger(__name__)


def perfect_matchings(points: Tuple[int, ...]) -> Iterator[Tuple[Tuple[int, int], ...]]:
    """Yield every perfect matching of ``points`` as a tuple of ordered pairs."""
    if not points:
        yield ()
        return
    first = points[0]
    for idx in range(1, len(points)):
        rest = points[1:idx] + points[idx + 1:]
        for tail in perfect_matchings(rest):
            yield ((first, points[idx]),) + tail


def _raw_diagrams(skeleton: Skeleton, flavor: Flavor, n: int, style: Style) -> Iterator[Diagram]:
    signs = (1, -1) if flavor.is_signed else (0,)
    for matching in perfect_matchings(tuple(range(2 * n))):
        for sign_choice in itertools.product(signs, repeat=n):
            if not flavor.is_arrow:
                yield ChordDiagram(
                    skeleton=skeleton,
                    chords=tuple(Chord(a, b, s) for (a, b), s in zip(matching, sign_choice)),
                    signed=flavor.is_signed,
                )
                continue
            for directions in itertools.product((False, True), repeat=n):
                arrows = tuple(
                    Arrow(tail=b, head=a, sign=s, style=style) if flip else Arrow(tail=a, head=b, sign=s, style=style)
                    for (a, b), s, flip in zip(matching, sign_choice, directions)
                )
                yield GaussDiagram(skeleton=skeleton, arrows=arrows, signed=flavor.is_signed)


def enumerate_diagrams(
    skeleton: Skeleton,
    flavor: Flavor,
    n: int,
    count: CountMode = CountMode.EXACTLY,
    style: Style = Style.DASHED,
    ceiling: Optional[int] = None,
) -> List[Diagram]:
    """
    Enumerate canonical diagrams of one flavor.

    Args:
        skeleton (Skeleton): Circle or line.
        flavor (Flavor): Arrow or chord, signed or unsigned.
        n (int): Number of arrows/chords.
        count (CountMode): Exactly ``n`` or every order up to ``n``.
        style (Style): Style given to arrows (ignored for chords).
        ceiling (int | None): Enumeration ceiling, the package default when omitted.

    Returns:
        list[Diagram]: Duplicate-free canonical diagrams sorted by key.

    Raises:
        ResourceLimitException: If ``n`` exceeds the ceiling.
    """
    if n < 0:
        raise ValueError(f"order must be non-negative, got {n}")
    ceiling = DEFAULT_ENUMERATION_CEILING if ceiling is None else ceiling
    if n > ceiling:
        raise ResourceLimitException("enumeration", n, ceiling)
    orders = range(n + 1) if count is CountMode.UP_TO else (n,)
    found: Set[Diagram] = set()
    for order in orders:
        before = len(found)
        found.update(canonical(d) for d in _raw_diagrams(skeleton, flavor, order, style))
        _logger.debug(f"enumerated {len(found) - before} {flavor.value} diagrams of order {order} on {skeleton.value}")
    return sorted(found, key=sort_key)
