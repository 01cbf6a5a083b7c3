"""
Two-term moves on unsigned chord diagrams and the graph they span.
"""
import logging
from functools import lru_cache
from typing import List, Tuple

import networkx as nx

from ..definitions.exceptions import FlavorMismatchException
from ..definitions.namespace import Flavor, Skeleton
from ..diagrams.core import Chord, ChordDiagram, canonical, sort_key
from ..diagrams.enumeration import enumerate_diagrams
from ..linalg.formal_sum import FormalSum
from ..linalg.system import Provenance

_logger = logging.getLogger(__name__)


def adjacent_pairs(diagram: ChordDiagram) -> List[Tuple[int, int]]:
    size = 2 * diagram.order
    pairs = [(i, i + 1) for i in range(size - 1)]
    if diagram.skeleton is Skeleton.CIRCLE and size > 2:
        pairs.append((size - 1, 0))
    return pairs


def swap_endpoints(diagram: ChordDiagram, i: int, j: int) -> ChordDiagram:
    def moved(point: int) -> int:
        return j if point == i else i if point == j else point

    return ChordDiagram(
        skeleton=diagram.skeleton,
        chords=tuple(Chord(moved(c.a), moved(c.b), c.sign) for c in diagram.chords),
        signed=diagram.signed,
    )


def two_term_neighbours(diagram: ChordDiagram) -> List[Tuple[ChordDiagram, Tuple[int, int]]]:
    """Canonical diagrams one 2T move away; only endpoints of distinct chords are swapped."""
    tokens = diagram.tokens()
    out = []
    for i, j in adjacent_pairs(diagram):
        if tokens[i] == tokens[j]:
            continue
        out.append((canonical(swap_endpoints(diagram, i, j)), (i, j)))  # type: ignore
    return out


def two_term_rows(n: int, skeleton: Skeleton) -> List[Tuple[FormalSum, Provenance]]:
    out = []
    for diagram in enumerate_diagrams(skeleton, Flavor.CHORD_UNSIGNED, n):
        for other, (i, j) in two_term_neighbours(diagram):  # type: ignore
            row = FormalSum.single(diagram) - FormalSum.single(other)
            if row:
                out.append((row, Provenance("2T", f"{diagram.encode()} swap={i},{j}")))
    return out


@lru_cache(maxsize=None)
def two_term_graph(n: int, skeleton: Skeleton) -> nx.Graph:
    """Unsigned ``n``-chord diagrams with an edge per 2T move."""
    graph = nx.Graph()
    for diagram in enumerate_diagrams(skeleton, Flavor.CHORD_UNSIGNED, n):
        graph.add_node(diagram)
        for other, _ in two_term_neighbours(diagram):  # type: ignore
            if other != diagram:
                graph.add_edge(diagram, other)
    _logger.debug(f"2T graph on {skeleton.value}, {n} chords: {graph.number_of_nodes()} nodes, "
                  f"{graph.number_of_edges()} edges, {nx.number_connected_components(graph)} components")
    return graph


def caterpillar(n: int, skeleton: Skeleton) -> ChordDiagram:
    """The ``n``-chord diagram whose chords are all isolated, side by side along the skeleton."""
    chords = tuple(Chord(2 * i, 2 * i + 1, 0) for i in range(n))
    return canonical(ChordDiagram(skeleton=skeleton, chords=chords, signed=False))  # type: ignore


def two_term_path(diagram: ChordDiagram) -> List[ChordDiagram]:
    """
    A shortest chain of 2T moves from ``diagram`` to the caterpillar.

    Raises:
        FlavorMismatchException: If the diagram is signed.
        networkx.NetworkXNoPath: If the two lie in different 2T classes.
    """
    if diagram.signed:
        raise FlavorMismatchException("2T moves act on unsigned chord diagrams")
    graph = two_term_graph(diagram.order, diagram.skeleton)
    return nx.shortest_path(graph, canonical(diagram), caterpillar(diagram.order, diagram.skeleton))


def two_term_classes(n: int, skeleton: Skeleton) -> List[List[ChordDiagram]]:
    graph = two_term_graph(n, skeleton)
    classes = [sorted(component, key=sort_key) for component in nx.connected_components(graph)]
    return sorted(classes, key=lambda c: sort_key(c[0]))
