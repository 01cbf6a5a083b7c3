"""
Gauss codes: ``["L:"] item ("," item)*`` with ``item = ("O" | "U") digits ("+" | "-")``.

The tail of each arrow sits at the ``O`` occurrence of its label and the head at
the ``U`` occurrence.
"""
from typing import Dict, List, Tuple

from ..definitions.exceptions import FlavorMismatchException, GaussCodeSemanticException, GaussCodeSyntaxException
from ..definitions.namespace import Skeleton, Style
from ..diagrams.core import GaussDiagram

LONG_PREFIX = "L:"

Item = Tuple[str, int, int, int]


def _scan(text: str, start: int) -> List[Item]:
    """Tokenize the items after the optional prefix as ``(pass, label, sign, position)``."""
    items: List[Item] = []
    pos = start
    if pos == len(text):
        return items
    while True:
        item_start = pos
        if pos >= len(text) or text[pos] not in "OU":
            raise GaussCodeSyntaxException("expected 'O' or 'U'", pos)
        passage = text[pos]
        pos += 1
        digits_start = pos
        while pos < len(text) and text[pos].isdigit() and text[pos].isascii():
            pos += 1
        if pos == digits_start:
            raise GaussCodeSyntaxException("expected a label", pos)
        label = int(text[digits_start:pos])
        if label == 0:
            raise GaussCodeSyntaxException("labels are positive integers", digits_start)
        if pos >= len(text) or text[pos] not in "+-":
            raise GaussCodeSyntaxException("expected '+' or '-'", pos)
        sign = 1 if text[pos] == "+" else -1
        pos += 1
        items.append((passage, label, sign, item_start))
        if pos == len(text):
            return items
        if text[pos] != ",":
            raise GaussCodeSyntaxException("expected ','", pos)
        pos += 1


def parse_gauss_code(text: str) -> GaussDiagram:
    """
    Parse a Gauss code into a diagram of solid arrows.

    Args:
        text (str): The code, ``"L:"``-prefixed for long knots.

    Returns:
        GaussDiagram: One solid arrow per label.

    Raises:
        GaussCodeSyntaxException: On a grammar violation, with its position.
        GaussCodeSemanticException: On label multiplicity, O/U imbalance or sign mismatch.
    """
    skeleton = Skeleton.CIRCLE
    start = 0
    if text.startswith(LONG_PREFIX):
        skeleton = Skeleton.LINE
        start = len(LONG_PREFIX)
    items = _scan(text, start)
    seen: Dict[int, List[Item]] = {}
    for item in items:
        seen.setdefault(item[1], []).append(item)
    for label, occurrences in seen.items():
        if len(occurrences) != 2:
            raise GaussCodeSemanticException(f"label {label} occurs {len(occurrences)} times, expected 2")
        passes = sorted(o[0] for o in occurrences)
        if passes != ["O", "U"]:
            raise GaussCodeSemanticException(f"label {label} needs one O and one U occurrence, got {'/'.join(passes)}")
        if occurrences[0][2] != occurrences[1][2]:
            raise GaussCodeSemanticException(f"sign mismatch for label {label}")
    tokens = [(label, passage == "U") for passage, label, _, _ in items]
    attributes = {label: (occ[0][2], Style.SOLID) for label, occ in seen.items()}
    return GaussDiagram.from_tokens(skeleton, tokens, attributes)  # type: ignore


def emit_gauss_code(diagram: GaussDiagram) -> str:
    """
    Write a diagram of solid signed arrows as a Gauss code.

    Labels are ``1, 2, ...`` in order of each arrow's first endpoint.

    Raises:
        FlavorMismatchException: If an arrow is dashed or the diagram is unsigned.
    """
    if not diagram.is_solid:
        raise FlavorMismatchException("Gauss codes describe knots; the diagram has dashed arrows")
    if not diagram.signed:
        raise FlavorMismatchException("Gauss codes carry signs; the diagram is unsigned")
    items = []
    for idx, is_head in diagram.tokens():
        sign = "+" if diagram.arrows[idx].sign > 0 else "-"
        items.append(f"{'U' if is_head else 'O'}{idx + 1}{sign}")
    prefix = LONG_PREFIX if diagram.skeleton is Skeleton.LINE else ""
    return prefix + ",".join(items)
