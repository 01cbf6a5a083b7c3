"""
Finite-order verification of the constancy theorem and the lemmas it rests on.

Each claim returns a Certificate: PASS when every check holds, FAIL with the
first offending instance otherwise, INCONCLUSIVE when a witness search runs out
of crossings.
"""
import logging
from typing import Dict, List, Optional, Sequence, Tuple

from ..definitions.exceptions import ConventionMismatchException
from ..definitions.namespace import Flavor, Profile, RelationKind, Skeleton, Style
from ..definitions.structures import Certificate
from ..diagrams.core import GaussDiagram
from ..diagrams.enumeration import enumerate_diagrams
from ..diagrams.operations import has_isolated, reverse_arrow
from ..invariants.functional import (
    InvariantFunctional,
    descend_to_chord,
    evaluate,
    flip_constraints,
    invariant_space,
    pullback_chord_functional,
)
from ..invariants.witness import find_witness
from ..linalg.elimination import SparseVector, _axpy
from ..linalg.formal_sum import FormalSum
from ..linalg.maps import average_sum, bar_sum, i_gpv, normalized_average_bar, xi_sum
from ..linalg.system import Provenance, RelationSystem
from ..relations.polyak import check_ceiling, signed_relations
from ..relations.two_term import caterpillar, two_term_classes, two_term_path
from ..relations.unsigned import decompose_6T, four_term_rows, six_term_instances
from ..serialization.gauss_code import parse_gauss_code
from .certificate import new_certificate, record_basis, record_system, timed, witness_record
from .context import VerificationContext

_logger = logging.getLogger(__name__)


def _membership(
    system: RelationSystem,
    vectors: Sequence[Tuple[FormalSum, str]],
) -> Tuple[int, Optional[str]]:
    """
    Express every vector through the system's rows and re-verify each combination.

    Returns:
        tuple[int, str | None]: Number of rows used over all certificates, and the
        site of the first vector outside the span (None when all are members).
    """
    echelon = system.echelon(track=True)
    rows = system.vectors()
    used = 0
    for vector, site in vectors:
        target = system.to_sparse(vector)
        coefficients = echelon.express(target)
        if coefficients is None:
            return used, site
        check: SparseVector = {}
        for index, coefficient in coefficients.items():
            if coefficient:
                _axpy(check, coefficient, rows[index])
        if check != target:
            raise ArithmeticError(f"span certificate for {site} failed to reproduce the vector")
        used += sum(1 for c in coefficients.values() if c)
    return used, None


def _space(
    context: VerificationContext,
    certificate: Certificate,
    n: int,
    skeleton: Skeleton,
    profile: Profile,
    label: str,
) -> List[InvariantFunctional]:
    system = context.profile_system(n, skeleton, profile)
    basis = invariant_space(n, skeleton, profile, system=system)
    record_system(certificate, label, system, system.width - len(basis))
    record_basis(certificate, label, basis)
    certificate.dims[label] = len(basis)
    return basis


def verify_theorem1(n: int, skeleton: Skeleton, context: Optional[VerificationContext] = None) -> Certificate:
    """
    Flip-invariant GPV invariants of order ``n`` are constant, and every other one is separated by a flip.

    PASS iff the ``gpv+virtualization`` space is spanned by the empty-diagram
    indicator and every nonconstant ``gpv`` basis functional gets a witness pair,
    re-checked by evaluating both knots afresh.
    """
    context = context or VerificationContext()
    certificate = new_certificate("theorem1", n=n, skeleton=skeleton)
    with timed(certificate):
        gpv = _space(context, certificate, n, skeleton, Profile.GPV, "gpv")
        virt = _space(context, certificate, n, skeleton, Profile.GPV_VIRTUALIZATION, "virt")
        if len(virt) != 1 or not virt[0].is_constant:
            certificate.fail(f"flip-invariant space has dimension {len(virt)}, expected the constants only")
        for index, functional in enumerate(gpv):
            if functional.is_constant:
                continue
            witness = find_witness(functional, context.witness_bound)
            if witness is None:
                certificate.inconclusive(f"no witness found for gpv/{index}")
                continue
            value = evaluate(functional, parse_gauss_code(witness.knot))
            flipped = evaluate(functional, parse_gauss_code(witness.flipped_knot))
            if value != witness.value or flipped != witness.flipped_value or value == flipped:
                certificate.fail(f"witness for gpv/{index} does not re-evaluate")
            certificate.witnesses.append(witness_record(index, witness))
    _logger.debug(f"theorem1[{n},{skeleton.value}]: {certificate.status.name} dims={certificate.dims}")
    return certificate


def verify_vanishing(n: int, skeleton: Skeleton, context: Optional[VerificationContext] = None) -> Certificate:
    """PASS iff the 1T and 6T rows over unsigned ``n``-chord diagrams have full rank."""
    context = context or VerificationContext()
    certificate = new_certificate("vanishing", n=n, skeleton=skeleton)
    with timed(certificate):
        one_term = context.unsigned_system(RelationKind.ONE_TERM, n, skeleton, Flavor.CHORD_UNSIGNED)
        six_term = context.unsigned_system(RelationKind.SIX_TERM, n, skeleton, Flavor.CHORD_UNSIGNED)
        combined = one_term.union(six_term, name=f"1T+6T[{n},{skeleton.value}]")
        rank = combined.rank()
        one_term_rank = one_term.rank()
        record_system(certificate, "1T+6T", combined, rank)
        certificate.dims["diagrams"] = combined.width
        certificate.dims["quotient"] = combined.width - rank
        # without 6T the quotient is nonzero as soon as a diagram has no isolated chord
        certificate.dims["quotient_1T_only"] = one_term.width - one_term_rank
        if rank != combined.width:
            certificate.fail(f"1T and 6T rows have rank {rank} on {combined.width} diagrams")
    return certificate


def verify_caterpillar(n: int, skeleton: Skeleton, context: Optional[VerificationContext] = None) -> Certificate:
    """
    PASS iff 2T leaves a one-dimensional quotient whose class holds an isolated-chord diagram.

    The certificate also lists a 2T path from every diagram to the caterpillar.
    """
    context = context or VerificationContext()
    certificate = new_certificate("caterpillar", n=n, skeleton=skeleton)
    with timed(certificate):
        two_term = context.unsigned_system(RelationKind.TWO_TERM, n, skeleton, Flavor.CHORD_UNSIGNED)
        rank = two_term.rank()
        record_system(certificate, "2T", two_term, rank)
        certificate.dims["diagrams"] = two_term.width
        certificate.dims["quotient"] = two_term.width - rank
        classes = two_term_classes(n, skeleton)
        target = caterpillar(n, skeleton)
        certificate.details["caterpillar"] = target.encode()
        certificate.details["classes"] = len(classes)
        if two_term.width - rank != 1 or len(classes) != 1:
            certificate.fail(f"2T quotient has dimension {two_term.width - rank} ({len(classes)} classes)")
        elif not has_isolated(target) or target not in classes[0]:
            certificate.fail("the 2T class holds no isolated-chord diagram")
        else:
            certificate.details["paths"] = {
                d.encode(): len(two_term_path(d)) - 1 for d in classes[0]  # type: ignore
            }
    return certificate


def verify_average(
    n: int,
    skeleton: Skeleton = Skeleton.CIRCLE,
    context: Optional[VerificationContext] = None,
) -> Certificate:
    """
    The average map respects the relations and splits the bar map.

    Checks, with explicit coefficients: every averaged 4T row lies in the arrow 6T
    span, every averaged chord 1T row in the arrow 1T span, ``bar(average(C)) / 2**n == C``
    for every ``n``-chord diagram, and every chord 6T row splits into the 4T row at
    its site plus 2T rows.
    """
    context = context or VerificationContext()
    certificate = new_certificate("average", n=n, skeleton=skeleton)
    with timed(certificate):
        six_arrow = context.unsigned_system(RelationKind.SIX_TERM, n, skeleton, Flavor.ARROW_UNSIGNED)
        one_arrow = context.unsigned_system(RelationKind.ONE_TERM, n, skeleton, Flavor.ARROW_UNSIGNED)
        one_chord = context.unsigned_system(RelationKind.ONE_TERM, n, skeleton, Flavor.CHORD_UNSIGNED)
        two_chord = context.unsigned_system(RelationKind.TWO_TERM, n, skeleton, Flavor.CHORD_UNSIGNED)
        record_system(certificate, "6T-arrow", six_arrow, six_arrow.rank())
        record_system(certificate, "1T-arrow", one_arrow, one_arrow.rank())

        four_term = [(average_sum(row), p.site) for row, p in four_term_rows(n, skeleton)]
        used, missing = _membership(six_arrow, four_term)
        certificate.details["4T_in_6T"] = {"instances": len(four_term), "coefficients_used": used}
        if missing is not None:
            certificate.fail(f"averaged 4T row at {missing} is not in the 6T span")

        one_term = [(average_sum(row), p.site) for row, p in zip(one_chord.rows, one_chord.provenance)]
        used, missing = _membership(one_arrow, one_term)
        certificate.details["1T_in_1T"] = {"instances": len(one_term), "coefficients_used": used}
        if missing is not None:
            certificate.fail(f"averaged 1T row at {missing} is not in the arrow 1T span")

        chords = enumerate_diagrams(skeleton, Flavor.CHORD_UNSIGNED, n, ceiling=context.chord_ceiling)
        for diagram in chords:
            if normalized_average_bar(diagram) != FormalSum.single(diagram):  # type: ignore
                certificate.fail(f"bar(average) is not the identity on {diagram.encode()}")
                break
        certificate.details["identity_checked"] = len(chords)

        decomposed = 0
        for instance in six_term_instances(n, skeleton, context.arrow_ceiling):
            try:
                decompose_6T(instance, two_chord)
            except ConventionMismatchException as e:
                certificate.fail(str(e))
                break
            decomposed += 1
        certificate.details["6T_decomposed"] = decomposed
        certificate.counts["diagrams"] += len(chords)
    return certificate


def verify_membership_lemma(
    n: int,
    flavor: Flavor = Flavor.CHORD_SIGNED,
    skeleton: Skeleton = Skeleton.CIRCLE,
    context: Optional[VerificationContext] = None,
) -> Certificate:
    """
    Every 1T+-, NS and 6T+- row is an untruncated move relation up to diagrams with more than ``n`` chords.

    Works on chord images (``CHORD_SIGNED``) or on the arrow relations themselves.
    """
    context = context or VerificationContext()
    certificate = new_certificate("membership", n=n, flavor=flavor, skeleton=skeleton)
    with timed(certificate):
        check_ceiling("membership lemma", n, context.arrow_ceiling)
        counts: Dict[str, int] = {}
        for kind in (RelationKind.ONE_TERM_SIGNED, RelationKind.NS, RelationKind.SIX_TERM_SIGNED):
            relations = signed_relations(kind, n, skeleton, context.arrow_ceiling)
            counts[kind.value] = len(relations)
            for relation in relations:
                full = relation.source.vector()
                vector, source = relation.vector, full
                if not flavor.is_arrow:
                    vector, source = relation.chord(), bar_sum(full)
                remainder = vector - source
                if remainder.degrees() and min(remainder.degrees()) <= n:
                    certificate.fail(f"{kind.value} row at {relation.source.site} leaves a remainder of degree "
                                     f"{min(remainder.degrees())}: {remainder}")
                    break
        certificate.details["instances"] = counts
        certificate.counts["relations"] += sum(counts.values())
    return certificate


def verify_stability(
    n_low: int,
    n_high: int,
    skeleton: Skeleton,
    context: Optional[VerificationContext] = None,
) -> Certificate:
    """PASS iff the chord invariants are just the constants at every order in ``[n_low, n_high]``."""
    context = context or VerificationContext()
    certificate = new_certificate("stability", n_low=n_low, n_high=n_high, skeleton=skeleton)
    with timed(certificate):
        for n in range(n_low, n_high + 1):
            basis = _space(context, certificate, n, skeleton, Profile.CHORD, f"chord[{n}]")
            if len(basis) != 1:
                certificate.fail(f"chord invariants of order {n} have dimension {len(basis)}")
    return certificate


def verify_xi_compatibility(n: int, skeleton: Skeleton, context: Optional[VerificationContext] = None) -> Certificate:
    """Sign erasure maps 1T+- into 1T, 6T+- into 6T and kills NS."""
    context = context or VerificationContext()
    certificate = new_certificate("xi", n=n, skeleton=skeleton)
    with timed(certificate):
        one_arrow = context.unsigned_system(RelationKind.ONE_TERM, n, skeleton, Flavor.ARROW_UNSIGNED)
        six_arrow = context.unsigned_system(RelationKind.SIX_TERM, n, skeleton, Flavor.ARROW_UNSIGNED)
        for kind, target in (
            (RelationKind.ONE_TERM_SIGNED, one_arrow),
            (RelationKind.SIX_TERM_SIGNED, six_arrow),
            (RelationKind.NS, None),
        ):
            relations = signed_relations(kind, n, skeleton, context.arrow_ceiling)
            images = [(xi_sum(r.vector), r.source.site) for r in relations]
            certificate.details[kind.value] = len(images)
            if target is None:
                nonzero = [site for image, site in images if image]
                if nonzero:
                    certificate.fail(f"sign erasure of the NS row at {nonzero[0]} is nonzero")
                continue
            _, missing = _membership(target, images)
            if missing is not None:
                certificate.fail(f"sign erasure of the {kind.value} row at {missing} leaves the {target.name} span")
    return certificate


def verify_universality(n: int, skeleton: Skeleton, context: Optional[VerificationContext] = None) -> Certificate:
    """
    Flip-invariant arrow functionals and chord functionals are the same space.

    PASS iff both spaces have one dimension, descent lands in the chord space,
    pullback lands in the flip-invariant space and the two maps are mutually inverse.
    """
    context = context or VerificationContext()
    certificate = new_certificate("universality", n=n, skeleton=skeleton)
    with timed(certificate):
        virt = _space(context, certificate, n, skeleton, Profile.GPV_VIRTUALIZATION, "virt")
        chord = _space(context, certificate, n, skeleton, Profile.CHORD, "chord")
        if len(virt) != len(chord):
            certificate.fail(f"dimensions differ: {len(virt)} flip-invariant vs {len(chord)} chord")
        chord_rows = context.profile_system(n, skeleton, Profile.CHORD).rows
        arrow_rows = context.profile_system(n, skeleton, Profile.GPV_VIRTUALIZATION).rows
        for index, functional in enumerate(virt):
            down = descend_to_chord(functional)
            if any(down.entries.dot(row) for row in chord_rows):
                certificate.fail(f"descent of virt/{index} violates a chord relation")
            if pullback_chord_functional(down).entries != functional.entries:
                certificate.fail(f"pullback does not invert descent on virt/{index}")
        for index, functional in enumerate(chord):
            up = pullback_chord_functional(functional)
            if any(up.entries.dot(row) for row in arrow_rows):
                certificate.fail(f"pullback of chord/{index} violates a Polyak or flip relation")
            if descend_to_chord(up).entries != functional.entries:
                certificate.fail(f"descent does not invert pullback on chord/{index}")
    return certificate


def verify_flip_span(n: int, skeleton: Skeleton, context: Optional[VerificationContext] = None) -> Certificate:
    """
    Reversing one arrow of a knot changes its subdiagram sum by flip constraints, and nothing more.

    PASS iff ``span{i_gpv(B) - i_gpv(B with arrow k reversed)}`` over knots ``B`` with
    at most ``n`` crossings equals the span of the flip constraints.
    """
    context = context or VerificationContext()
    certificate = new_certificate("flip-span", n=n, skeleton=skeleton)
    with timed(certificate):
        check_ceiling("flip span", n, context.arrow_ceiling)
        ambient = [d for m in range(n + 1) for d in enumerate_diagrams(skeleton, Flavor.ARROW_SIGNED, m)]
        differences = []
        for m in range(1, n + 1):
            for knot in enumerate_diagrams(skeleton, Flavor.ARROW_SIGNED, m, style=Style.SOLID):
                assert isinstance(knot, GaussDiagram)
                for k in range(m):
                    row = i_gpv(knot) - i_gpv(reverse_arrow(knot, k))
                    differences.append((row, Provenance("flip-difference", f"{knot.encode()} k={k}")))
        knot_side = RelationSystem(
            flavor=Flavor.ARROW_SIGNED, skeleton=skeleton, ambient=ambient,
            rows=[r for r, _ in differences], provenance=[p for _, p in differences],
            style=Style.DASHED, name=f"flip-differences[{n},{skeleton.value}]",
        )
        flips = flip_constraints(n, skeleton, context.arrow_ceiling)
        constraint_side = RelationSystem(
            flavor=Flavor.ARROW_SIGNED, skeleton=skeleton, ambient=ambient,
            rows=flips, provenance=[Provenance(RelationKind.FLIP.value, f"flip#{i}") for i in range(len(flips))],
            style=Style.DASHED, name=f"flip[{n},{skeleton.value}]",
        )
        rank = knot_side.rank()
        record_system(certificate, "flip-differences", knot_side, rank)
        record_system(certificate, "flip", constraint_side, constraint_side.rank())
        certificate.dims["span"] = rank
        _, missing = _membership(constraint_side, [(r, p.site) for r, p in zip(knot_side.rows, knot_side.provenance)])
        if missing is not None:
            certificate.fail(f"flip difference at {missing} is not a combination of flip constraints")
        constraints = [(r, p.site) for r, p in zip(constraint_side.rows, constraint_side.provenance)]
        _, missing = _membership(knot_side, constraints)
        if missing is not None:
            certificate.fail(f"flip constraint {missing} is not a combination of flip differences")
    return certificate

