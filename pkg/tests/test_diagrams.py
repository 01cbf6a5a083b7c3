import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polyak_lab.definitions.exceptions import (
    DiagramValidationException,
    FlavorMismatchException,
    MovePreconditionException,
    ResourceLimitException,
)
from polyak_lab.definitions.namespace import CountMode, Flavor, Skeleton, Style
from polyak_lab.diagrams.core import (
    Arrow,
    Chord,
    ChordDiagram,
    GaussDiagram,
    canonical,
    canonical_key,
    decode_key,
)
from polyak_lab.diagrams.enumeration import enumerate_diagrams, perfect_matchings
from polyak_lab.diagrams.moves import (
    R1Configuration,
    R1Delete,
    R1Insert,
    R2Configuration,
    R2Delete,
    R2Insert,
    R3,
    R3Configuration,
    apply_r_move,
    available_moves,
    gap_count,
    insert_triangle,
    placements,
    r2_pair_ok,
    r3_configuration_of,
)
from polyak_lab.diagrams.operations import (
    bar,
    dash,
    is_isolated,
    orientations,
    restrict,
    reverse_all,
    reverse_arrow,
    subdiagrams,
    undash,
    xi,
)
from polyak_lab.serialization.gauss_code import emit_gauss_code, parse_gauss_code

from .strategies import chord_diagrams, gauss_diagrams


def _rotation_orbit_count(n):
    """Unsigned chord diagrams on a circle with 2n points, counted up to rotation."""
    size = 2 * n
    seen = set()
    for matching in perfect_matchings(tuple(range(size))):
        seen.add(min(
            tuple(sorted(tuple(sorted(((a - s) % size, (b - s) % size))) for a, b in matching))
            for s in range(size)
        ))
    return len(seen)


class TestConstruction:
    def test_arrows_sorted_by_first_endpoint(self):
        d = GaussDiagram(Skeleton.CIRCLE, (Arrow(3, 1), Arrow(0, 2)))
        assert [a.first for a in d.arrows] == [0, 1]

    @pytest.mark.parametrize("arrows", [
        (Arrow(0, 0),),
        (Arrow(0, 2),),
        (Arrow(0, 1), Arrow(1, 2)),
    ])
    def test_invalid_endpoints_rejected(self, arrows):
        with pytest.raises(DiagramValidationException):
            GaussDiagram(Skeleton.CIRCLE, arrows)

    def test_sign_must_match_signedness(self):
        with pytest.raises(DiagramValidationException):
            GaussDiagram(Skeleton.LINE, (Arrow(0, 1, sign=0),))
        with pytest.raises(DiagramValidationException):
            ChordDiagram(Skeleton.LINE, (Chord(0, 1, 1),), signed=False)

    def test_chord_endpoints_ordered(self):
        assert Chord(3, 1, 1) == Chord(1, 3, 1)


class TestCanonicalForm:
    def test_single_arrow_directions_agree_on_circle(self):
        forward = GaussDiagram(Skeleton.CIRCLE, (Arrow(tail=0, head=1),))
        backward = GaussDiagram(Skeleton.CIRCLE, (Arrow(tail=1, head=0),))
        assert canonical_key(forward) == canonical_key(backward)

    def test_single_arrow_directions_differ_on_line(self):
        forward = GaussDiagram(Skeleton.LINE, (Arrow(tail=0, head=1),))
        backward = GaussDiagram(Skeleton.LINE, (Arrow(tail=1, head=0),))
        assert canonical_key(forward) != canonical_key(backward)

    @given(gauss_diagrams(max_arrows=5, skeleton=Skeleton.CIRCLE))
    def test_rotation_invariant(self, d):
        keys = {canonical_key(d.relocated(shift)) for shift in range(max(2 * d.order, 1))}
        assert keys == {canonical_key(d)}

    @given(gauss_diagrams(max_arrows=5))
    def test_idempotent(self, d):
        c = canonical(d)
        assert canonical(c) == c

    @given(gauss_diagrams(max_arrows=5, skeleton=Skeleton.CIRCLE))
    def test_representative_is_a_rotation(self, d):
        rotations = {d.relocated(shift) for shift in range(max(2 * d.order, 1))}
        assert canonical(d) in rotations

    @given(st.one_of(gauss_diagrams(min_arrows=1, max_arrows=5, skeleton=Skeleton.CIRCLE),
                     chord_diagrams(min_chords=1, max_chords=5, skeleton=Skeleton.CIRCLE, signed=True)))
    def test_representative_has_the_least_endpoint_word(self, d):
        words = [d.relocated(shift).partner_word() for shift in range(2 * d.order)]
        assert canonical(d).partner_word() == min(words)

    @given(st.one_of(gauss_diagrams(max_arrows=4, style=Style.DASHED), chord_diagrams(max_chords=4, signed=True)))
    def test_key_decodes_to_representative(self, d):
        assert decode_key(str(canonical_key(d))) == canonical(d)

    def test_line_diagrams_unchanged(self):
        d = GaussDiagram(Skeleton.LINE, (Arrow(2, 0, -1), Arrow(1, 3)))
        assert canonical(d) == d
        assert canonical_key(d).rotation == 0

    @pytest.mark.parametrize("text", ["", "X", "CA", "CA:0>1", "CZ:0>1+s", "Ch:0-1-x"])
    def test_malformed_keys(self, text):
        with pytest.raises(DiagramValidationException):
            decode_key(text)


class TestEnumeration:
    @pytest.mark.parametrize("skeleton, flavor, n, expected", [
        (Skeleton.CIRCLE, Flavor.CHORD_UNSIGNED, 2, 2),
        (Skeleton.CIRCLE, Flavor.CHORD_UNSIGNED, 3, 5),
        (Skeleton.CIRCLE, Flavor.CHORD_UNSIGNED, 4, 18),
        (Skeleton.LINE, Flavor.CHORD_UNSIGNED, 2, 3),
        (Skeleton.CIRCLE, Flavor.ARROW_SIGNED, 1, 2),
        (Skeleton.LINE, Flavor.ARROW_SIGNED, 1, 4),
        (Skeleton.CIRCLE, Flavor.ARROW_SIGNED, 0, 1),
    ])
    def test_counts(self, skeleton, flavor, n, expected):
        assert len(enumerate_diagrams(skeleton, flavor, n)) == expected

    def test_up_to(self):
        found = enumerate_diagrams(Skeleton.CIRCLE, Flavor.CHORD_UNSIGNED, 2, CountMode.UP_TO)
        assert len(found) == 4
        assert [d.order for d in found] == [0, 1, 2, 2]

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_matches_orbit_oracle(self, n):
        assert len(enumerate_diagrams(Skeleton.CIRCLE, Flavor.CHORD_UNSIGNED, n)) == _rotation_orbit_count(n)

    def test_results_are_canonical_and_distinct(self):
        found = enumerate_diagrams(Skeleton.CIRCLE, Flavor.ARROW_SIGNED, 2, style=Style.SOLID)
        assert all(canonical(d) == d for d in found)
        assert len({canonical_key(d) for d in found}) == len(found)
        assert all(d.is_solid for d in found)

    def test_ceiling(self):
        with pytest.raises(ResourceLimitException):
            enumerate_diagrams(Skeleton.CIRCLE, Flavor.ARROW_SIGNED, 7)
        with pytest.raises(ResourceLimitException):
            enumerate_diagrams(Skeleton.CIRCLE, Flavor.ARROW_SIGNED, 3, ceiling=2)

    def test_negative_order(self):
        with pytest.raises(ValueError):
            enumerate_diagrams(Skeleton.CIRCLE, Flavor.ARROW_SIGNED, -1)


class TestOperations:
    @given(gauss_diagrams(max_arrows=5))
    def test_subdiagram_count(self, d):
        subs = subdiagrams(d)
        assert len(subs) == 2 ** d.order
        assert subs[0].order == 0
        assert subs[-1] == d

    def test_restrict_recompacts(self):
        d = GaussDiagram(Skeleton.CIRCLE, (Arrow(0, 2), Arrow(1, 3, -1)))
        assert restrict(d, [1]) == GaussDiagram(Skeleton.CIRCLE, (Arrow(0, 1, -1),))

    def test_reverse_arrow_on_a_knot(self):
        d = parse_gauss_code("O1+,U2+,O2+,U1+")
        assert emit_gauss_code(reverse_arrow(d, 0)) == "U1+,U2+,O2+,O1+"

    @given(gauss_diagrams(min_arrows=1, max_arrows=5), st.data())
    def test_reverse_arrow_involution(self, d, data):
        k = data.draw(st.integers(0, d.order - 1))
        assert reverse_arrow(reverse_arrow(d, k), k) == d

    def test_reverse_arrow_out_of_range(self):
        with pytest.raises(DiagramValidationException):
            reverse_arrow(parse_gauss_code("O1+,U1+"), 1)

    @given(gauss_diagrams(max_arrows=5))
    def test_reversal_preserves_bar(self, d):
        assert bar(reverse_all(d)) == bar(d)

    def test_bar(self):
        d = parse_gauss_code("O1+,U2-,O2-,U1+")
        assert bar(d) == ChordDiagram(Skeleton.CIRCLE, (Chord(0, 3, 1), Chord(1, 2, -1)))

    def test_xi(self):
        positive = ChordDiagram(Skeleton.CIRCLE, (Chord(0, 2, 1), Chord(1, 3, 1)))
        mixed = ChordDiagram(Skeleton.CIRCLE, (Chord(0, 2, 1), Chord(1, 3, -1)))
        unsigned = ChordDiagram(Skeleton.CIRCLE, (Chord(0, 2, 0), Chord(1, 3, 0)), signed=False)
        assert xi(positive) == (1, unsigned)
        assert xi(mixed) == (-1, unsigned)
        with pytest.raises(FlavorMismatchException):
            xi(unsigned)

    @given(gauss_diagrams(max_arrows=4))
    def test_dash_and_undash(self, d):
        assert dash(d).is_dashed
        assert undash(dash(d)) == d
        assert bar(dash(d)) == bar(d)

    @given(chord_diagrams(max_chords=4))
    def test_orientations(self, chords):
        found = orientations(chords)
        assert len(found) == 2 ** chords.order
        assert all(d.is_dashed for d in found)
        assert {bar(d) for d in found} == {chords}

    def test_isolated(self):
        d = parse_gauss_code("O1+,U2+,O2+,U1+")
        assert is_isolated(d, 0)
        assert is_isolated(d, 1)
        crossed = parse_gauss_code("O1+,O2+,U1+,U2+")
        assert not any(is_isolated(crossed, k) for k in range(2))


class TestMoves:
    def test_r1_on_empty(self):
        empty = GaussDiagram(Skeleton.CIRCLE)
        assert gap_count(empty) == 1
        kinked = apply_r_move(empty, R1Insert(0, R1Configuration(1, False)))
        assert kinked == GaussDiagram(Skeleton.CIRCLE, (Arrow(0, 1, 1),))
        assert apply_r_move(kinked, R1Delete(0)) == empty

    @settings(max_examples=30, deadline=None)
    @given(gauss_diagrams(max_arrows=3))
    def test_r1_insert_then_delete(self, d):
        for gap, configuration in itertools.product(range(gap_count(d)), R1Configuration.all()):
            moved = apply_r_move(d, R1Insert(gap, configuration))
            assert moved.order == d.order + 1
            back = [
                canonical(apply_r_move(moved, R1Delete(k)))
                for k in range(moved.order) if is_isolated(moved, k)
            ]
            assert canonical(d) in back

    def test_r1_delete_needs_isolated_arrow(self):
        with pytest.raises(MovePreconditionException):
            apply_r_move(parse_gauss_code("O1+,O2+,U1+,U2+"), R1Delete(0))

    @settings(max_examples=20, deadline=None)
    @given(gauss_diagrams(max_arrows=2))
    def test_r2_insert_then_delete(self, d):
        for placement in placements(d, 2):
            for configuration in R2Configuration.all():
                moved = apply_r_move(d, R2Insert(placement, configuration))
                back = [
                    canonical(apply_r_move(moved, R2Delete(k1, k2)))
                    for k1, k2 in itertools.combinations(range(moved.order), 2)
                    if r2_pair_ok(moved, k1, k2)
                ]
                assert canonical(d) in back

    def test_r2_delete_needs_opposite_signs(self):
        same_signs = parse_gauss_code("O1+,O2+,U1+,U2+")
        assert not r2_pair_ok(same_signs, 0, 1)
        with pytest.raises(MovePreconditionException):
            apply_r_move(same_signs, R2Delete(0, 1))
        bigon = parse_gauss_code("O1+,O2-,U1+,U2-")
        assert apply_r_move(bigon, R2Delete(0, 1)) == GaussDiagram(Skeleton.CIRCLE)

    @pytest.mark.parametrize("configuration", R3Configuration.all())
    def test_triangle_is_recognised(self, configuration):
        base = parse_gauss_code("O1+,U1+")
        for placement in placements(base, 3):
            triangle, triple = insert_triangle(base, placement, configuration)
            assert r3_configuration_of(triangle, triple) == configuration
            moved = apply_r_move(triangle, R3(triple, configuration))
            assert moved.order == triangle.order
            assert moved != triangle

    def test_r3_wrong_configuration(self):
        configuration = R3Configuration(1, 1, 1, 1)
        empty = GaussDiagram(Skeleton.LINE)
        triangle, triple = insert_triangle(empty, next(placements(empty, 3)), configuration)
        with pytest.raises(MovePreconditionException):
            apply_r_move(triangle, R3(triple, configuration.moved()))
        with pytest.raises(MovePreconditionException):
            apply_r_move(triangle, R3((0, 0, 1)))

    def test_available_moves(self):
        moves = available_moves(parse_gauss_code("O1+,O2-,U1+,U2-"))
        assert R2Delete(0, 1) in moves
        assert not any(isinstance(m, R1Delete) for m in moves)
