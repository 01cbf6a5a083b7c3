import dataclasses
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polyak_lab.definitions.exceptions import (
    ConventionMismatchException,
    FlavorMismatchException,
    ResourceLimitException,
)
from polyak_lab.definitions.namespace import Flavor, RelationKind, Skeleton
from polyak_lab.diagrams.core import ChordDiagram
from polyak_lab.diagrams.operations import has_isolated
from polyak_lab.linalg.formal_sum import FormalSum
from polyak_lab.linalg.maps import xi_sum
from polyak_lab.linalg.system import RelationSystem
from polyak_lab.relations.polyak import (
    generate_chord_relations,
    generate_polyak,
    polyak_instances,
    signed_relations,
)
from polyak_lab.relations.transcribed import transcribed_chord_relations
from polyak_lab.relations.two_term import caterpillar, two_term_classes, two_term_graph, two_term_path
from polyak_lab.relations.unsigned import decompose_6T, generate_unsigned, six_term_instances
from polyak_lab.serialization.json_codec import fingerprint, system_to_json
from polyak_lab.verification.certificate import certificate_bytes, new_certificate, record_system


class TestPolyak:
    def test_order_one(self):
        system = generate_polyak(1, Skeleton.CIRCLE)
        assert system.width == 3
        assert system.rank() == 2

    def test_provenance(self):
        system = generate_polyak(2, Skeleton.LINE)
        assert {p.schema for p in system.provenance} == {"dPI", "dPII", "dPIII"}

    def test_ceiling(self):
        with pytest.raises(ResourceLimitException):
            generate_polyak(5, Skeleton.CIRCLE)
        with pytest.raises(ResourceLimitException):
            generate_polyak(3, Skeleton.CIRCLE, ceiling=2)

    @settings(max_examples=8, deadline=None)
    @given(
        st.randoms(use_true_random=False),
        st.lists(st.sampled_from([1, -1, 3, Fraction(-1, 2), Fraction(2, 3)]), min_size=1, max_size=4),
    )
    def test_shuffled_and_rescaled_rows_give_identical_certificates(self, rng, scales):
        system = generate_polyak(2, Skeleton.CIRCLE)
        pairs = list(zip(system.rows, system.provenance))
        pairs += [(row * scales[i % len(scales)], p) for i, (row, p) in enumerate(pairs)]
        rng.shuffle(pairs)
        rebuilt = RelationSystem(
            flavor=system.flavor,
            skeleton=system.skeleton,
            ambient=list(reversed(system.ambient)),
            rows=[row for row, _ in pairs],
            provenance=[p for _, p in pairs],
            style=system.style,
            name=system.name,
        )
        assert rebuilt.rows == system.rows
        assert fingerprint(system_to_json(rebuilt)) == fingerprint(system_to_json(system))
        certificates = []
        for candidate in (system, rebuilt):
            certificate = new_certificate("polyak", n=2, skeleton=Skeleton.CIRCLE)
            record_system(certificate, "dP", candidate, candidate.rank())
            certificates.append(certificate_bytes(certificate, reproducible=True))
        assert certificates[0] == certificates[1]

    def test_second_move_has_three_terms(self):
        for instance in polyak_instances(2, Skeleton.CIRCLE, (RelationKind.DELTA_PII,)):
            left, right = instance.side_terms()
            assert (len(left), len(right)) == (3, 0)
            assert len(instance.vector()) == 3

    def test_third_move_sides(self):
        instances = list(polyak_instances(3, Skeleton.CIRCLE, (RelationKind.DELTA_PIII,), context_orders=(0, 1)))
        assert instances
        for instance in instances:
            left, right = instance.side_terms()
            assert len(left) == len(right) <= 4
            assert len(instance.vector()) <= 8

    def test_truncation(self):
        untruncated = generate_polyak(2, Skeleton.CIRCLE, truncated=False)
        assert max(d.order for d in untruncated.ambient) > 2
        truncated = generate_polyak(2, Skeleton.CIRCLE)
        assert max(d.order for d in truncated.ambient) == 2


class TestSignedRelations:
    def test_one_term(self):
        relations = signed_relations(RelationKind.ONE_TERM_SIGNED, 2, Skeleton.CIRCLE)
        assert relations
        for relation in relations:
            (diagram,) = relation.vector.support()
            assert has_isolated(diagram)

    def test_ns_rows_have_two_terms_and_vanish_without_signs(self):
        relations = signed_relations(RelationKind.NS, 2, Skeleton.CIRCLE)
        assert relations
        for relation in relations:
            assert len(relation.vector) == 2
            assert not xi_sum(relation.chord())

    def test_six_term_rows(self):
        relations = signed_relations(RelationKind.SIX_TERM_SIGNED, 2, Skeleton.LINE)
        assert relations
        assert all(len(r.vector) <= 6 for r in relations)
        assert all(r.vector.degrees() == [2] for r in relations)

    def test_rejects_move_kinds(self):
        with pytest.raises(ValueError):
            signed_relations(RelationKind.DELTA_PI, 2, Skeleton.CIRCLE)


class TestChordRelations:
    @pytest.mark.parametrize("skeleton", [Skeleton.CIRCLE, Skeleton.LINE])
    def test_transcription_spans_the_bar_images(self, skeleton):
        images = generate_chord_relations(2, skeleton)
        transcribed = transcribed_chord_relations(2, skeleton)
        assert images.ambient == transcribed.ambient
        assert all(transcribed.contains(row) for row in images.rows)
        assert all(images.contains(row) for row in transcribed.rows)

    def test_provenance(self):
        system = generate_chord_relations(2, Skeleton.CIRCLE)
        assert {p.schema for p in system.provenance} <= {"dRI", "dRII", "dRIII"}


class TestUnsigned:
    def test_one_term(self):
        system = generate_unsigned(RelationKind.ONE_TERM, 1, Skeleton.LINE)
        assert len(system.rows) == 1
        system = generate_unsigned(RelationKind.ONE_TERM, 2, Skeleton.CIRCLE)
        assert len(system.rows) == 1
        assert system.width == 2

    def test_two_term_on_the_line(self):
        system = generate_unsigned(RelationKind.TWO_TERM, 2, Skeleton.LINE)
        assert system.width == 3
        assert system.width - system.rank() == 1

    def test_four_term_rows_sum_to_zero(self):
        system = generate_unsigned(RelationKind.FOUR_TERM, 3, Skeleton.CIRCLE)
        assert system.rows
        assert all(sum(row.terms.values()) == 0 for row in system.rows)

    def test_six_term_on_arrows(self):
        system = generate_unsigned(RelationKind.SIX_TERM, 2, Skeleton.CIRCLE, Flavor.ARROW_UNSIGNED)
        assert system.flavor is Flavor.ARROW_UNSIGNED
        assert all(d.is_dashed for d in system.ambient)

    def test_flavor_errors(self):
        with pytest.raises(FlavorMismatchException):
            generate_unsigned(RelationKind.ONE_TERM, 2, Skeleton.CIRCLE, Flavor.CHORD_SIGNED)
        with pytest.raises(FlavorMismatchException):
            generate_unsigned(RelationKind.FOUR_TERM, 2, Skeleton.CIRCLE, Flavor.ARROW_UNSIGNED)
        with pytest.raises(FlavorMismatchException):
            generate_unsigned(RelationKind.TWO_TERM, 2, Skeleton.CIRCLE, Flavor.ARROW_UNSIGNED)
        with pytest.raises(ValueError):
            generate_unsigned(RelationKind.ONE_TERM, 0, Skeleton.CIRCLE)


class TestSixTermDecomposition:
    @pytest.mark.parametrize("n, skeleton", [(2, Skeleton.CIRCLE), (3, Skeleton.CIRCLE), (3, Skeleton.LINE)])
    def test_every_row_splits(self, n, skeleton):
        two_term = generate_unsigned(RelationKind.TWO_TERM, n, skeleton)
        instances = six_term_instances(n, skeleton)
        assert instances or n == 2
        for instance in instances:
            found = decompose_6T(instance, two_term)
            rebuilt = found.four_term
            for row, coefficient in zip(found.two_term_rows, found.coefficients):
                rebuilt = rebuilt + row * coefficient
            assert rebuilt == instance.vector

    def test_sign_corrupted_row_is_refused(self):
        two_term = generate_unsigned(RelationKind.TWO_TERM, 3, Skeleton.CIRCLE)
        instance = six_term_instances(3, Skeleton.CIRCLE)[0]
        diagram, coefficient = instance.vector.items()[0]
        corrupted = instance.vector - FormalSum.single(diagram, 2 * coefficient)
        with pytest.raises(ConventionMismatchException):
            decompose_6T(dataclasses.replace(instance, vector=corrupted), two_term)


class TestTwoTermGraph:
    @pytest.mark.parametrize("n, skeleton", [(2, Skeleton.LINE), (3, Skeleton.CIRCLE), (3, Skeleton.LINE)])
    def test_single_class(self, n, skeleton):
        classes = two_term_classes(n, skeleton)
        assert len(classes) == 1
        assert caterpillar(n, skeleton) in classes[0]

    def test_paths_end_at_the_caterpillar(self):
        target = caterpillar(3, Skeleton.CIRCLE)
        for diagram in two_term_graph(3, Skeleton.CIRCLE).nodes:
            path = two_term_path(diagram)
            assert path[0] == diagram
            assert path[-1] == target

    def test_signed_diagrams_rejected(self):
        with pytest.raises(FlavorMismatchException):
            two_term_path(ChordDiagram(Skeleton.LINE))
