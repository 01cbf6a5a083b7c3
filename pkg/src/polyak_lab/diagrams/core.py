"""
Gauss, arrow and chord diagrams on a circle or line skeleton.

Endpoints are always the integers ``0 .. 2n-1`` in skeleton order; arrows and
chords are stored sorted by their first endpoint so that structural equality is
plain dataclass equality. Diagrams equal up to rotation of the circle share a
canonical form (see :func:`canonical_form`).
"""
import re
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Dict, Hashable, List, Sequence, Tuple, Union

from ..definitions.exceptions import DiagramValidationException, FlavorMismatchException
from ..definitions.namespace import Flavor, Skeleton, Style

SIGN_CHARS: Dict[int, str] = {1: "+", -1: "-", 0: ""}
_CHAR_SIGNS: Dict[str, int] = {"+": 1, "-": -1, "": 0}

Token = Tuple[int, ...]


@dataclass(frozen=True)
class Arrow:
    tail: int
    head: int
    sign: int = 1
    style: Style = Style.SOLID

    @property
    def first(self) -> int:
        return min(self.tail, self.head)

    def reversed(self) -> "Arrow":
        return replace(self, tail=self.head, head=self.tail)


@dataclass(frozen=True)
class Chord:
    a: int
    b: int
    sign: int = 1

    def __post_init__(self) -> None:
        if self.a > self.b:
            a, b = self.b, self.a
            object.__setattr__(self, "a", a)
            object.__setattr__(self, "b", b)

    @property
    def first(self) -> int:
        return self.a


@dataclass(frozen=True)
class CanonicalKey:
    encoding: bytes
    rotation: int = 0

    def __str__(self) -> str:
        return self.encoding.decode("ascii")


def _check_signs(signs: Sequence[int], signed: bool) -> None:
    for idx, sign in enumerate(signs):
        if signed and sign not in (1, -1):
            raise DiagramValidationException(f"signed diagram carries sign {sign} on element {idx}", idx)
        if not signed and sign != 0:
            raise DiagramValidationException(f"unsigned diagram carries sign {sign} on element {idx}", idx)


def _check_endpoints(endpoints: Sequence[int], size: int) -> None:
    seen = set()
    for point in endpoints:
        if point < 0 or point >= size:
            raise DiagramValidationException(f"endpoint index {point} outside 0..{size - 1}", point)
        if point in seen:
            raise DiagramValidationException(f"endpoint index {point} used twice", point)
        seen.add(point)


@dataclass(frozen=True)
class GaussDiagram:
    """
    Signed (or unsigned), directed, styled arrows on ``2n`` ordered endpoints.

    The head of an arrow sits on the underpass occurrence of its crossing.
    """
    skeleton: Skeleton
    arrows: Tuple[Arrow, ...] = ()
    signed: bool = True

    def __post_init__(self) -> None:
        arrows = tuple(sorted(self.arrows, key=lambda a: a.first))
        object.__setattr__(self, "arrows", arrows)
        size = 2 * len(arrows)
        for idx, arrow in enumerate(arrows):
            if arrow.tail == arrow.head:
                raise DiagramValidationException(f"arrow {idx} has head equal to tail ({arrow.tail})", arrow.tail)
        _check_endpoints([p for a in arrows for p in (a.tail, a.head)], size)
        _check_signs([a.sign for a in arrows], self.signed)

    @property
    def order(self) -> int:
        return len(self.arrows)

    @property
    def flavor(self) -> Flavor:
        return Flavor.of(arrow=True, signed=self.signed)

    @property
    def is_dashed(self) -> bool:
        return all(a.style is Style.DASHED for a in self.arrows)

    @property
    def is_solid(self) -> bool:
        return all(a.style is Style.SOLID for a in self.arrows)

    @property
    def negative_count(self) -> int:
        return sum(1 for a in self.arrows if a.sign < 0)

    def partner_word(self) -> List[Token]:
        size = 2 * self.order
        word: List[Token] = [()] * size
        for arrow in self.arrows:
            style = 1 if arrow.style is Style.DASHED else 0
            for point, other, role in ((arrow.tail, arrow.head, 0), (arrow.head, arrow.tail, 1)):
                offset = (other - point) % size if self.skeleton is Skeleton.CIRCLE else other - point
                word[point] = (offset, role, -arrow.sign, style)
        return word

    def relocated(self, shift: int) -> "GaussDiagram":
        size = 2 * self.order
        return replace(self, arrows=tuple(
            replace(a, tail=(a.tail - shift) % size, head=(a.head - shift) % size) for a in self.arrows
        ))

    def with_style(self, style: Style) -> "GaussDiagram":
        return replace(self, arrows=tuple(replace(a, style=style) for a in self.arrows))

    def encode(self) -> str:
        items = ",".join(
            f"{a.tail}>{a.head}{SIGN_CHARS[a.sign]}{a.style.letter}" for a in self.arrows
        )
        return f"{self.skeleton.letter}{self.flavor.letter}:{items}"

    @classmethod
    def from_tokens(
        cls,
        skeleton: Skeleton,
        tokens: Sequence[Tuple[Hashable, bool]],
        attributes: Dict[Hashable, Tuple[int, Style]],
        signed: bool = True,
    ) -> "GaussDiagram":
        """
        Build a diagram from a skeleton-ordered endpoint sequence.

        Args:
            skeleton (Skeleton): Circle or line.
            tokens (Sequence[tuple[Hashable, bool]]): ``(label, is_head)`` per endpoint.
            attributes (dict): ``label -> (sign, style)``.
            signed (bool): Whether the diagram carries signs.

        Returns:
            GaussDiagram: The assembled diagram.
        """
        tails: Dict[Hashable, int] = {}
        heads: Dict[Hashable, int] = {}
        for position, (label, is_head) in enumerate(tokens):
            bucket = heads if is_head else tails
            if label in bucket:
                raise DiagramValidationException(f"label {label!r} has two {'heads' if is_head else 'tails'}", position)
            bucket[label] = position
        if set(tails) != set(heads):
            raise DiagramValidationException("every label needs exactly one tail and one head")
        arrows = tuple(
            Arrow(tail=tails[label], head=heads[label], sign=attributes[label][0], style=attributes[label][1])
            for label in tails
        )
        return cls(skeleton=skeleton, arrows=arrows, signed=signed)

    def tokens(self) -> List[Tuple[int, bool]]:
        """Skeleton-ordered ``(arrow index, is_head)`` pairs."""
        out: List[Tuple[int, bool]] = [(0, False)] * (2 * self.order)
        for idx, arrow in enumerate(self.arrows):
            out[arrow.tail] = (idx, False)
            out[arrow.head] = (idx, True)
        return out


@dataclass(frozen=True)
class ChordDiagram:
    """Undirected chords, signed or unsigned, forming a perfect matching of the endpoints."""
    skeleton: Skeleton
    chords: Tuple[Chord, ...] = ()
    signed: bool = True

    def __post_init__(self) -> None:
        chords = tuple(sorted(self.chords, key=lambda c: c.first))
        object.__setattr__(self, "chords", chords)
        size = 2 * len(chords)
        for idx, chord in enumerate(chords):
            if chord.a == chord.b:
                raise DiagramValidationException(f"chord {idx} joins endpoint {chord.a} to itself", chord.a)
        _check_endpoints([p for c in chords for p in (c.a, c.b)], size)
        _check_signs([c.sign for c in chords], self.signed)

    @property
    def order(self) -> int:
        return len(self.chords)

    @property
    def flavor(self) -> Flavor:
        return Flavor.of(arrow=False, signed=self.signed)

    @property
    def negative_count(self) -> int:
        return sum(1 for c in self.chords if c.sign < 0)

    def partner_word(self) -> List[Token]:
        size = 2 * self.order
        word: List[Token] = [()] * size
        for chord in self.chords:
            for point, other in ((chord.a, chord.b), (chord.b, chord.a)):
                offset = (other - point) % size if self.skeleton is Skeleton.CIRCLE else other - point
                word[point] = (offset, -chord.sign)
        return word

    def relocated(self, shift: int) -> "ChordDiagram":
        size = 2 * self.order
        return replace(self, chords=tuple(
            Chord(a=(c.a - shift) % size, b=(c.b - shift) % size, sign=c.sign) for c in self.chords
        ))

    def encode(self) -> str:
        items = ",".join(f"{c.a}-{c.b}{SIGN_CHARS[c.sign]}" for c in self.chords)
        return f"{self.skeleton.letter}{self.flavor.letter}:{items}"

    @classmethod
    def from_tokens(
        cls,
        skeleton: Skeleton,
        tokens: Sequence[Hashable],
        signs: Dict[Hashable, int],
        signed: bool = True,
    ) -> "ChordDiagram":
        positions: Dict[Hashable, List[int]] = {}
        for position, label in enumerate(tokens):
            positions.setdefault(label, []).append(position)
        for label, found in positions.items():
            if len(found) != 2:
                raise DiagramValidationException(f"chord label {label!r} occurs {len(found)} times", found[0])
        chords = tuple(Chord(a=p[0], b=p[1], sign=signs[label]) for label, p in positions.items())
        return cls(skeleton=skeleton, chords=chords, signed=signed)

    def tokens(self) -> List[int]:
        """Skeleton-ordered chord indices."""
        out = [0] * (2 * self.order)
        for idx, chord in enumerate(self.chords):
            out[chord.a] = idx
            out[chord.b] = idx
        return out


Diagram = Union[GaussDiagram, ChordDiagram]


@lru_cache(maxsize=None)
def canonical_form(diagram: Diagram) -> Tuple[Diagram, CanonicalKey]:
    """
    Reduce a diagram to its representative under rotation of the circle.

    The representative is the rotation whose endpoint word (partner offset,
    role, sign, style per endpoint) is lexicographically least; the first
    minimal rotation wins. This is not the rotation with the least encoding
    string: the word only picks the representative, and ``sort_key`` then
    orders representatives by their encoding. Line diagrams are returned
    unchanged.

    Args:
        diagram (GaussDiagram | ChordDiagram): A validated diagram.

    Returns:
        tuple[Diagram, CanonicalKey]: The canonical diagram and its key.
    """
    if diagram.skeleton is Skeleton.LINE or diagram.order == 0:
        return diagram, CanonicalKey(diagram.encode().encode("ascii"), 0)
    word = diagram.partner_word()
    size = len(word)
    best = 0
    best_word = word
    for shift in range(1, size):
        candidate = word[shift:] + word[:shift]
        if candidate < best_word:
            best, best_word = shift, candidate
    canonical = diagram.relocated(best) if best else diagram
    return canonical, CanonicalKey(canonical.encode().encode("ascii"), best)


def canonical(diagram: Diagram) -> Diagram:
    return canonical_form(diagram)[0]


def canonical_key(diagram: Diagram) -> CanonicalKey:
    return canonical_form(diagram)[1]


_ARROW_ITEM = re.compile(r"^(\d+)>(\d+)([+-]?)([sd])$")
_CHORD_ITEM = re.compile(r"^(\d+)-(\d+)([+-]?)$")


def decode_key(text: Union[str, bytes]) -> Diagram:
    """
    Rebuild a diagram from its encoding.

    Raises:
        DiagramValidationException: If the encoding is malformed.
    """
    if isinstance(text, bytes):
        text = text.decode("ascii")
    if len(text) < 3 or text[2] != ":":
        raise DiagramValidationException(f"malformed diagram key {text!r}")
    try:
        skeleton = Skeleton.from_letter(text[0])
        flavor = Flavor.from_letter(text[1])
    except KeyError:
        raise DiagramValidationException(f"unknown skeleton/flavor prefix in key {text!r}") from None
    body = text[3:]
    items = body.split(",") if body else []
    if flavor.is_arrow:
        arrows = []
        for idx, item in enumerate(items):
            match = _ARROW_ITEM.match(item)
            if match is None:
                raise DiagramValidationException(f"malformed arrow item {item!r} in key {text!r}", idx)
            style = Style.SOLID if match.group(4) == "s" else Style.DASHED
            arrows.append(Arrow(int(match.group(1)), int(match.group(2)), _CHAR_SIGNS[match.group(3)], style))
        return GaussDiagram(skeleton=skeleton, arrows=tuple(arrows), signed=flavor.is_signed)
    chords = []
    for idx, item in enumerate(items):
        match = _CHORD_ITEM.match(item)
        if match is None:
            raise DiagramValidationException(f"malformed chord item {item!r} in key {text!r}", idx)
        chords.append(Chord(int(match.group(1)), int(match.group(2)), _CHAR_SIGNS[match.group(3)]))
    return ChordDiagram(skeleton=skeleton, chords=tuple(chords), signed=flavor.is_signed)


def require_flavor(diagram: Diagram, *flavors: Flavor) -> None:
    if diagram.flavor not in flavors:
        raise FlavorMismatchException(
            f"expected a {' or '.join(f.value for f in flavors)} diagram, got {diagram.flavor.value}"
        )


def empty_diagram(skeleton: Skeleton, flavor: Flavor) -> Diagram:
    if flavor.is_arrow:
        return GaussDiagram(skeleton=skeleton, signed=flavor.is_signed)
    return ChordDiagram(skeleton=skeleton, signed=flavor.is_signed)


def sort_key(diagram: Diagram) -> Tuple[int, str]:
    """Ambient ordering: arrow/chord count first, then the canonical encoding."""
    return diagram.order, diagram.encode()
