"""Hypothesis strategies shared by the test modules."""
from fractions import Fraction

from hypothesis import strategies as st

from polyak_lab.definitions.namespace import Skeleton, Style
from polyak_lab.diagrams.core import Arrow, Chord, ChordDiagram, GaussDiagram

skeletons = st.sampled_from([Skeleton.CIRCLE, Skeleton.LINE])
signs = st.sampled_from([1, -1])
small_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def gauss_diagrams(draw, min_arrows=0, max_arrows=4, skeleton=None, style=Style.SOLID):
    n = draw(st.integers(min_value=min_arrows, max_value=max_arrows))
    skeleton = draw(skeletons) if skeleton is None else skeleton
    points = draw(st.permutations(list(range(2 * n))))
    arrows = tuple(
        Arrow(tail=points[2 * i], head=points[2 * i + 1], sign=draw(signs), style=style) for i in range(n)
    )
    return GaussDiagram(skeleton=skeleton, arrows=arrows)


@st.composite
def chord_diagrams(draw, min_chords=0, max_chords=4, skeleton=None, signed=False):
    n = draw(st.integers(min_value=min_chords, max_value=max_chords))
    skeleton = draw(skeletons) if skeleton is None else skeleton
    points = draw(st.permutations(list(range(2 * n))))
    chords = tuple(
        Chord(points[2 * i], points[2 * i + 1], draw(signs) if signed else 0) for i in range(n)
    )
    return ChordDiagram(skeleton=skeleton, chords=chords, signed=signed)


@st.composite
def sparse_rows(draw, width, max_rows=8):
    count = draw(st.integers(min_value=0, max_value=max_rows))
    rows = []
    for _ in range(count):
        entries = draw(st.dictionaries(st.integers(0, width - 1), small_rationals, max_size=width))
        rows.append({col: Fraction(v) for col, v in entries.items() if v})
    return rows
