"""
Reidemeister moves on Gauss diagrams.

A move touches short skeleton fragments ("blocks") of adjacent endpoints. Insertion
moves place their blocks into gaps of the existing endpoint sequence; the gap ``g``
sits just before endpoint ``g`` (on the line, gap ``2n`` is the end of the line).

R3 triangles are described by the arrows ``TM``, ``TB`` and ``MB`` between the top,
middle and bottom strands, a chirality ``c`` and the strand orientations ``s_T``,
``s_M``, ``s_B``:

* in the top block the ``TM`` tail precedes the ``TB`` tail iff ``s_T = +1``;
* in the middle block the ``TM`` head precedes the ``MB`` tail iff ``s_M = +1``;
* in the bottom block the ``MB`` head precedes the ``TB`` head iff ``s_B = +1``;
* signs are ``c*s_T*s_M``, ``-c*s_T*s_B`` and ``-c*s_M*s_B`` respectively.

The move reverses the order inside all three blocks and keeps every sign.
"""
import itertools
from dataclasses import dataclass, replace
from typing import Dict, Hashable, Iterator, List, Optional, Sequence, Tuple, Union

from ..definitions.exceptions import MovePreconditionException
from ..definitions.namespace import MoveType, Skeleton, Style
from .core import ChordDiagram, Diagram, GaussDiagram
from .operations import is_isolated, restrict

Block = Tuple[Tuple[Hashable, bool], ...]


@dataclass(frozen=True)
class Placement:
    """Blocks ``order[i]`` go into gap ``gaps[i]``; ``gaps`` is non-decreasing."""
    order: Tuple[int, ...]
    gaps: Tuple[int, ...]

    def __str__(self) -> str:
        return ",".join(f"{b}@{g}" for b, g in zip(self.order, self.gaps))


def gap_count(diagram: Diagram) -> int:
    size = 2 * diagram.order
    if diagram.skeleton is Skeleton.LINE:
        return size + 1
    return max(size, 1)


def placements(diagram: Diagram, block_count: int) -> Iterator[Placement]:
    """Every way to drop ``block_count`` labelled blocks into the gaps of ``diagram``."""
    for order in itertools.permutations(range(block_count)):
        for gaps in itertools.combinations_with_replacement(range(gap_count(diagram)), block_count):
            yield Placement(order=order, gaps=gaps)


def insert_blocks(
    diagram: GaussDiagram,
    blocks: Sequence[Block],
    placement: Placement,
    attributes: Dict[Hashable, Tuple[int, Style]],
) -> Tuple[GaussDiagram, Dict[Hashable, int]]:
    """
    Insert labelled blocks into ``diagram``.

    Returns:
        tuple[GaussDiagram, dict]: The new diagram and, per new label, the position of its tail.
    """
    limit = gap_count(diagram)
    for gap in placement.gaps:
        if not 0 <= gap < limit:
            raise MovePreconditionException("gap", f"gap {gap} outside 0..{limit - 1}")
    old_tokens = diagram.tokens()
    pending: Dict[int, List[Block]] = {}
    for block_id, gap in zip(placement.order, placement.gaps):
        pending.setdefault(gap, []).append(blocks[block_id])
    tokens: List[Tuple[Hashable, bool]] = []
    for gap in range(len(old_tokens) + 1):
        for block in pending.get(gap, []):
            tokens.extend(block)
        if gap < len(old_tokens):
            idx, is_head = old_tokens[gap]
            tokens.append((("ctx", idx), is_head))
    merged = dict(attributes)
    for idx, arrow in enumerate(diagram.arrows):
        merged[("ctx", idx)] = (arrow.sign, arrow.style)
    result = GaussDiagram.from_tokens(diagram.skeleton, tokens, merged, signed=diagram.signed)
    tails = {label: pos for pos, (label, is_head) in enumerate(tokens) if not is_head}
    return result, {label: tails[label] for label in attributes}


def insert_chord_blocks(
    diagram: ChordDiagram,
    blocks: Sequence[Tuple[Hashable, ...]],
    placement: Placement,
    signs: Dict[Hashable, int],
) -> Tuple[ChordDiagram, Dict[Hashable, int]]:
    """
    Chord counterpart of :func:`insert_blocks`; blocks are sequences of chord labels.

    Returns:
        tuple[ChordDiagram, dict]: The new diagram and, per new label, its first endpoint.
    """
    limit = gap_count(diagram)
    for gap in placement.gaps:
        if not 0 <= gap < limit:
            raise MovePreconditionException("gap", f"gap {gap} outside 0..{limit - 1}")
    old_tokens = diagram.tokens()
    pending: Dict[int, List[Tuple[Hashable, ...]]] = {}
    for block_id, gap in zip(placement.order, placement.gaps):
        pending.setdefault(gap, []).append(blocks[block_id])
    tokens: List[Hashable] = []
    for gap in range(len(old_tokens) + 1):
        for block in pending.get(gap, []):
            tokens.extend(block)
        if gap < len(old_tokens):
            tokens.append(("ctx", old_tokens[gap]))
    merged = dict(signs)
    for idx, chord in enumerate(diagram.chords):
        merged[("ctx", idx)] = chord.sign
    result = ChordDiagram.from_tokens(diagram.skeleton, tokens, merged, signed=diagram.signed)
    return result, {label: tokens.index(label) for label in signs}


def index_of_tail(diagram: GaussDiagram, tail: int) -> int:
    for idx, arrow in enumerate(diagram.arrows):
        if arrow.tail == tail:
            return idx
    raise MovePreconditionException("tail", f"no arrow has its tail at {tail}")


@dataclass(frozen=True)
class R1Configuration:
    sign: int
    head_first: bool

    def __str__(self) -> str:
        return f"{self.sign:+d}{'h' if self.head_first else 't'}"

    def block(self, label: Hashable = "a") -> Block:
        if self.head_first:
            return ((label, True), (label, False))
        return ((label, False), (label, True))

    @classmethod
    def all(cls) -> List["R1Configuration"]:
        return [cls(sign, head_first) for sign in (1, -1) for head_first in (False, True)]


@dataclass(frozen=True)
class R2Configuration:
    """Arrow ``a`` carries ``first_sign``, ``b`` the opposite; both tails share the over block."""
    parallel: bool
    first_sign: int

    def __str__(self) -> str:
        return f"{'par' if self.parallel else 'anti'}{self.first_sign:+d}"

    def blocks(self) -> Tuple[Block, Block]:
        over: Block = (("a", False), ("b", False))
        under: Block = (("a", True), ("b", True)) if self.parallel else (("b", True), ("a", True))
        return over, under

    @classmethod
    def all(cls) -> List["R2Configuration"]:
        return [cls(parallel, sign) for parallel in (True, False) for sign in (1, -1)]


@dataclass(frozen=True)
class R3Configuration:
    chirality: int
    s_top: int
    s_middle: int
    s_bottom: int

    def __str__(self) -> str:
        return f"c{self.chirality:+d}s{self.s_top:+d}{self.s_middle:+d}{self.s_bottom:+d}"

    def signs(self) -> Dict[str, int]:
        c = self.chirality
        return {
            "TM": c * self.s_top * self.s_middle,
            "TB": -c * self.s_top * self.s_bottom,
            "MB": -c * self.s_middle * self.s_bottom,
        }

    def blocks(self) -> Tuple[Block, Block, Block]:
        top: Block = (("TM", False), ("TB", False))
        middle: Block = (("TM", True), ("MB", False))
        bottom: Block = (("MB", True), ("TB", True))
        return (
            top if self.s_top > 0 else top[::-1],
            middle if self.s_middle > 0 else middle[::-1],
            bottom if self.s_bottom > 0 else bottom[::-1],
        )

    def moved(self) -> "R3Configuration":
        return R3Configuration(self.chirality, -self.s_top, -self.s_middle, -self.s_bottom)

    @classmethod
    def all(cls) -> List["R3Configuration"]:
        return [cls(*values) for values in itertools.product((1, -1), repeat=4)]


@dataclass(frozen=True)
class R1Insert:
    gap: int
    configuration: R1Configuration
    style: Style = Style.SOLID
    kind: MoveType = MoveType.R1_INSERT


@dataclass(frozen=True)
class R1Delete:
    k: int
    kind: MoveType = MoveType.R1_DELETE


@dataclass(frozen=True)
class R2Insert:
    placement: Placement
    configuration: R2Configuration
    style: Style = Style.SOLID
    kind: MoveType = MoveType.R2_INSERT


@dataclass(frozen=True)
class R2Delete:
    k1: int
    k2: int
    kind: MoveType = MoveType.R2_DELETE


@dataclass(frozen=True)
class R3:
    triple: Tuple[int, int, int]
    configuration: Optional[R3Configuration] = None
    kind: MoveType = MoveType.R3


Move = Union[R1Insert, R1Delete, R2Insert, R2Delete, R3]


def _follows(diagram: GaussDiagram, a: int, b: int) -> bool:
    """Whether endpoint ``b`` comes right after endpoint ``a`` along the skeleton."""
    if diagram.skeleton is Skeleton.CIRCLE:
        return (b - a) % (2 * diagram.order) == 1
    return b - a == 1


def _adjacent(diagram: GaussDiagram, a: int, b: int) -> bool:
    return _follows(diagram, a, b) or _follows(diagram, b, a)


def r2_pair_ok(diagram: GaussDiagram, k1: int, k2: int) -> bool:
    if k1 == k2:
        return False
    a1, a2 = diagram.arrows[k1], diagram.arrows[k2]
    return (
        a1.sign == -a2.sign
        and _adjacent(diagram, a1.tail, a2.tail)
        and _adjacent(diagram, a1.head, a2.head)
    )


def r3_configuration_of(diagram: GaussDiagram, triple: Tuple[int, int, int]) -> Optional[R3Configuration]:
    """The configuration the arrows ``(TM, TB, MB)`` form, or ``None`` if they are no R3 triangle."""
    if len(set(triple)) != 3:
        return None
    tm, tb, mb = (diagram.arrows[i] for i in triple)
    orders = []
    for first, second in ((tm.tail, tb.tail), (tm.head, mb.tail), (mb.head, tb.head)):
        if _follows(diagram, first, second):
            orders.append(1)
        elif _follows(diagram, second, first):
            orders.append(-1)
        else:
            return None
    s_top, s_middle, s_bottom = orders
    chirality = tm.sign * s_top * s_middle
    configuration = R3Configuration(chirality, s_top, s_middle, s_bottom)
    expected = configuration.signs()
    if (tb.sign, mb.sign) != (expected["TB"], expected["MB"]):
        return None
    return configuration


def apply_r_move(diagram: GaussDiagram, move: Move) -> GaussDiagram:
    """
    Apply one Reidemeister move.

    Args:
        diagram (GaussDiagram): The diagram to move.
        move (Move): The move with its site and configuration.

    Returns:
        GaussDiagram: The moved diagram (not canonicalized).

    Raises:
        MovePreconditionException: If the move does not apply at the named site.
    """
    if isinstance(move, R1Insert):
        config = move.configuration
        result, _ = insert_blocks(
            diagram, [config.block()], Placement((0,), (move.gap,)), {"a": (config.sign, move.style)}
        )
        return result
    if isinstance(move, R1Delete):
        if not 0 <= move.k < diagram.order or not is_isolated(diagram, move.k):
            raise MovePreconditionException("R1: isolated arrow", f"arrow {move.k} is not isolated")
        return restrict(diagram, [i for i in range(diagram.order) if i != move.k])  # type: ignore
    if isinstance(move, R2Insert):
        config = move.configuration
        attributes = {"a": (config.first_sign, move.style), "b": (-config.first_sign, move.style)}
        result, _ = insert_blocks(diagram, list(config.blocks()), move.placement, attributes)
        return result
    if isinstance(move, R2Delete):
        in_range = all(0 <= k < diagram.order for k in (move.k1, move.k2))
        if not in_range or not r2_pair_ok(diagram, move.k1, move.k2):
            raise MovePreconditionException(
                "R2: adjacent tails, adjacent heads, opposite signs",
                f"arrows {move.k1} and {move.k2} do not form a bigon",
            )
        dropped = {move.k1, move.k2}
        return restrict(diagram, [i for i in range(diagram.order) if i not in dropped])  # type: ignore
    if isinstance(move, R3):
        if not all(0 <= k < diagram.order for k in move.triple):
            raise MovePreconditionException("R3: triangle", f"arrow index out of range in {move.triple}")
        found = r3_configuration_of(diagram, move.triple)
        if found is None:
            raise MovePreconditionException("R3: triangle", f"arrows {move.triple} do not form a triangle")
        if move.configuration is not None and move.configuration != found:
            raise MovePreconditionException("R3: configuration", f"expected {move.configuration}, found {found}")
        return _swap_blocks(diagram, move.triple)
    raise TypeError(f"unknown move {move!r}")


def _swap_blocks(diagram: GaussDiagram, triple: Tuple[int, int, int]) -> GaussDiagram:
    i_tm, i_tb, i_mb = triple
    tm, tb, mb = (diagram.arrows[i] for i in triple)
    arrows = list(diagram.arrows)
    swapped = {
        i_tm: (tb.tail, mb.tail),
        i_tb: (tm.tail, mb.head),
        i_mb: (tm.head, tb.head),
    }
    for idx, (tail, head) in swapped.items():
        old = diagram.arrows[idx]
        arrows[idx] = replace(old, tail=tail, head=head)
    return GaussDiagram(skeleton=diagram.skeleton, arrows=tuple(arrows), signed=diagram.signed)


def insert_triangle(
    diagram: GaussDiagram,
    placement: Placement,
    configuration: R3Configuration,
    style: Style = Style.SOLID,
) -> Tuple[GaussDiagram, Tuple[int, int, int]]:
    """
    Insert an R3 triangle in its pre-move state.

    Returns:
        tuple[GaussDiagram, tuple[int, int, int]]: The diagram and the ``(TM, TB, MB)`` arrow indices.
    """
    signs = configuration.signs()
    attributes = {label: (sign, style) for label, sign in signs.items()}
    result, tails = insert_blocks(diagram, list(configuration.blocks()), placement, attributes)
    triple = (
        index_of_tail(result, tails["TM"]),
        index_of_tail(result, tails["TB"]),
        index_of_tail(result, tails["MB"]),
    )
    return result, triple


def available_moves(diagram: GaussDiagram) -> List[Move]:
    """Every deletion and R3 move applicable to ``diagram`` (insertions are unbounded and excluded)."""
    moves: List[Move] = [R1Delete(k) for k in range(diagram.order) if is_isolated(diagram, k)]
    for k1, k2 in itertools.combinations(range(diagram.order), 2):
        if r2_pair_ok(diagram, k1, k2):
            moves.append(R2Delete(k1, k2))
    for triple in itertools.permutations(range(diagram.order), 3):
        if r3_configuration_of(diagram, triple) is not None:  # type: ignore
            moves.append(R3(triple))  # type: ignore
    return moves
