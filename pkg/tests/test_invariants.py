import itertools
from functools import lru_cache

import pytest
from hypothesis import given, settings

from polyak_lab.definitions.exceptions import FlavorMismatchException
from polyak_lab.definitions.namespace import Profile, Skeleton
from polyak_lab.diagrams.core import GaussDiagram
from polyak_lab.diagrams.moves import (
    R1Configuration,
    R1Insert,
    R2Configuration,
    R2Insert,
    R3,
    R3Configuration,
    apply_r_move,
    gap_count,
    insert_triangle,
    placements,
)
from polyak_lab.invariants.functional import (
    InvariantFunctional,
    descend_to_chord,
    evaluate,
    flip_constraints,
    invariant_space,
    pullback_chord_functional,
)
from polyak_lab.invariants.witness import find_witness
from polyak_lab.linalg.formal_sum import FormalSum
from polyak_lab.serialization.gauss_code import parse_gauss_code

from .strategies import gauss_diagrams


@lru_cache(maxsize=None)
def _basis(n, skeleton, profile=Profile.GPV):
    return tuple(invariant_space(n, skeleton, profile))


def _constant(skeleton):
    return InvariantFunctional(0, skeleton, FormalSum.single(GaussDiagram(skeleton)))


@pytest.mark.parametrize("n, skeleton, profile, expected", [
    (1, Skeleton.CIRCLE, Profile.GPV, 1),
    (3, Skeleton.CIRCLE, Profile.GPV, 2),
    (2, Skeleton.LINE, Profile.GPV, 3),
    (1, Skeleton.CIRCLE, Profile.GPV_VIRTUALIZATION, 1),
    (2, Skeleton.CIRCLE, Profile.GPV_VIRTUALIZATION, 1),
    (3, Skeleton.CIRCLE, Profile.GPV_VIRTUALIZATION, 1),
    (1, Skeleton.LINE, Profile.GPV_VIRTUALIZATION, 1),
    (2, Skeleton.LINE, Profile.GPV_VIRTUALIZATION, 1),
    (2, Skeleton.CIRCLE, Profile.CHORD, 1),
])
def test_dimensions(n, skeleton, profile, expected):
    assert len(_basis(n, skeleton, profile)) == expected


@pytest.mark.slow
@pytest.mark.parametrize("skeleton", [Skeleton.CIRCLE, Skeleton.LINE])
def test_flip_invariant_space_is_constant_at_order_three_and_four(skeleton):
    for n in (3, 4) if skeleton is Skeleton.CIRCLE else (3,):
        basis = _basis(n, skeleton, Profile.GPV_VIRTUALIZATION)
        assert len(basis) == 1
        assert basis[0].is_constant


def test_constants_are_always_in_the_basis():
    for skeleton in (Skeleton.CIRCLE, Skeleton.LINE):
        assert any(f.is_constant for f in _basis(2, skeleton))


def test_flip_constraints():
    assert flip_constraints(1, Skeleton.CIRCLE) == []
    line = flip_constraints(1, Skeleton.LINE)
    assert len(line) == 2
    assert all(len(row) == 2 and row.items()[0][1] == 1 for row in line)


@given(gauss_diagrams(max_arrows=5))
def test_empty_indicator_is_one(knot):
    assert evaluate(_constant(knot.skeleton), knot) == 1


def test_evaluate_rejects_other_skeleton():
    with pytest.raises(FlavorMismatchException):
        evaluate(_constant(Skeleton.LINE), parse_gauss_code("O1+,U1+"))


@settings(max_examples=15)
@given(gauss_diagrams(max_arrows=3, skeleton=Skeleton.CIRCLE))
def test_order_three_invariants_survive_first_and_second_moves(knot):
    for functional in _basis(3, Skeleton.CIRCLE):
        value = evaluate(functional, knot)
        for gap, configuration in itertools.product(range(gap_count(knot)), R1Configuration.all()):
            assert evaluate(functional, apply_r_move(knot, R1Insert(gap, configuration))) == value
        for placement in itertools.islice(placements(knot, 2), 12):
            for configuration in R2Configuration.all():
                assert evaluate(functional, apply_r_move(knot, R2Insert(placement, configuration))) == value


@settings(max_examples=10)
@given(gauss_diagrams(max_arrows=2, skeleton=Skeleton.CIRCLE))
def test_order_three_invariants_survive_third_moves(knot):
    for functional in _basis(3, Skeleton.CIRCLE):
        for placement in itertools.islice(placements(knot, 3), 8):
            for configuration in R3Configuration.all():
                before, triple = insert_triangle(knot, placement, configuration)
                after = apply_r_move(before, R3(triple, configuration))
                assert evaluate(functional, before) == evaluate(functional, after)


def test_witnesses_for_nonconstant_invariants():
    for functional in _basis(3, Skeleton.CIRCLE):
        witness = find_witness(functional)
        if functional.is_constant:
            assert witness is None
            continue
        assert witness is not None
        assert witness.value != witness.flipped_value
        assert evaluate(functional, parse_gauss_code(witness.knot)) == witness.value
        assert evaluate(functional, parse_gauss_code(witness.flipped_knot)) == witness.flipped_value


def test_witness_rejects_chord_functionals():
    chord = _basis(2, Skeleton.CIRCLE, Profile.CHORD)[0]
    with pytest.raises(FlavorMismatchException):
        find_witness(chord)


@pytest.mark.parametrize("n, skeleton", [(2, Skeleton.CIRCLE), (2, Skeleton.LINE)])
def test_descent_and_pullback_are_inverse(n, skeleton):
    for functional in _basis(n, skeleton, Profile.GPV_VIRTUALIZATION):
        down = descend_to_chord(functional)
        assert down.profile is Profile.CHORD
        assert pullback_chord_functional(down).entries == functional.entries


def test_descent_needs_flip_invariant_functional():
    with pytest.raises(FlavorMismatchException):
        descend_to_chord(_basis(2, Skeleton.CIRCLE)[0])
    with pytest.raises(FlavorMismatchException):
        pullback_chord_functional(_basis(2, Skeleton.CIRCLE)[0])
