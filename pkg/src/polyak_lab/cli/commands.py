import argparse
import logging
import random
import sys
from pathlib import Path
from typing import Any, Dict, List

from ..config import RunConfig
from ..definitions.constants import EXIT_OK
from ..definitions.exceptions import UsageException, exit_code_for_status
from ..definitions.namespace import CountMode, Flavor, Profile, RelationKind, Skeleton, Style
from ..definitions.structures import Certificate
from ..diagrams.core import sort_key
from ..diagrams.enumeration import enumerate_diagrams
from ..factory import ContextSettings, ClaimFactory, overall_status
from ..invariants.functional import InvariantFunctional, evaluate, flip_constraints, invariant_space
from ..invariants.witness import find_witness
from ..linalg.system import Provenance, RelationSystem
from ..relations.polyak import CHORD_KIND, MOVE_KINDS, generate_chord_relations, generate_polyak, signed_relations
from ..relations.unsigned import generate_unsigned
from ..serialization.gauss_code import parse_gauss_code
from ..serialization.json_codec import (
    certificate_to_json,
    dumps,
    format_rational,
    functional_to_json,
    read_json,
    system_to_json,
)
from ..verification.caches import open_cache
from ..verification.context import VerificationContext

_logger = logging.getLogger(__name__)

SIGNED_KINDS = (RelationKind.ONE_TERM_SIGNED, RelationKind.NS, RelationKind.SIX_TERM_SIGNED)
UNSIGNED_KINDS = (RelationKind.ONE_TERM, RelationKind.SIX_TERM, RelationKind.FOUR_TERM, RelationKind.TWO_TERM)


def emit(config: RunConfig, text: str) -> None:
    if config.output is None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
        return
    Path(config.output).write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")
    _logger.debug(f"wrote {config.output}")


def emit_document(config: RunConfig, document: Any, table: List[str]) -> None:
    if config.format == "json":
        emit(config, dumps(document).decode("ascii"))
    else:
        emit(config, "\n".join(table))


def context_for(config: RunConfig) -> VerificationContext:
    return VerificationContext(
        cache=open_cache(config.cache_dir, config.use_cache),
        arrow_ceiling=config.arrow_ceiling,
        chord_ceiling=config.chord_ceiling,
        witness_bound=config.witness_bound,
    )


def load_functional(path: str) -> InvariantFunctional:
    try:
        data = Path(path).read_bytes()
    except OSError as e:
        raise UsageException(f"cannot read {path}: {e}") from None
    functional = read_json(data, "functional")
    assert isinstance(functional, InvariantFunctional)
    return functional


def cmd_enum(args: argparse.Namespace, config: RunConfig) -> int:
    count = CountMode.EXACTLY if args.exactly is not None else CountMode.UP_TO
    n = args.exactly if args.exactly is not None else args.up_to
    diagrams = enumerate_diagrams(
        Skeleton(args.skeleton), Flavor(args.flavor), n, count, Style(args.style), config.enumeration_ceiling
    )
    if args.sample is not None and args.sample < len(diagrams):
        diagrams = sorted(random.Random(config.seed).sample(diagrams, args.sample), key=sort_key)
    keys = [d.encode() for d in diagrams]
    emit_document(config, {"count": len(keys), "diagrams": keys}, keys)
    return EXIT_OK


def _subsystem(system: RelationSystem, schema: str) -> RelationSystem:
    kept = [(row, p) for row, p in zip(system.rows, system.provenance) if p.schema == schema]
    return RelationSystem(
        flavor=system.flavor,
        skeleton=system.skeleton,
        ambient=system.ambient,
        rows=[row for row, _ in kept],
        provenance=[p for _, p in kept],
        style=system.style,
        name=f"{schema}[{system.name}]",
    )


def build_relations(kind: str, n: int, skeleton: Skeleton, flavor: str, truncated: bool,
                    config: RunConfig) -> RelationSystem:
    if kind in ("dP", "dR"):
        build = generate_polyak if kind == "dP" else generate_chord_relations
        return build(n, skeleton, truncated, config.arrow_ceiling)
    relation_kind = RelationKind(kind)
    if relation_kind in MOVE_KINDS:
        return _subsystem(generate_polyak(n, skeleton, truncated, config.arrow_ceiling), kind)
    if relation_kind in CHORD_KIND.values():
        return _subsystem(generate_chord_relations(n, skeleton, truncated, config.arrow_ceiling), kind)
    if relation_kind in SIGNED_KINDS:
        relations = signed_relations(relation_kind, n, skeleton, config.arrow_ceiling)
        rows = [r.vector if flavor == "arrow" else r.chord() for r in relations]
        return RelationSystem(
            flavor=Flavor.ARROW_SIGNED if flavor == "arrow" else Flavor.CHORD_SIGNED,
            skeleton=skeleton,
            ambient=sorted({d for row in rows for d in row.terms}, key=sort_key),
            rows=rows,
            provenance=[r.provenance for r in relations],
            name=f"{kind}[{n},{skeleton.value},{flavor}]",
        )
    if relation_kind in UNSIGNED_KINDS:
        target = Flavor.ARROW_UNSIGNED if flavor == "arrow" else Flavor.CHORD_UNSIGNED
        ceiling = config.arrow_ceiling if relation_kind is RelationKind.SIX_TERM else config.chord_ceiling
        return generate_unsigned(relation_kind, n, skeleton, target, ceiling)
    flips = flip_constraints(n, skeleton, config.arrow_ceiling)
    return RelationSystem(
        flavor=Flavor.ARROW_SIGNED,
        skeleton=skeleton,
        ambient=enumerate_diagrams(skeleton, Flavor.ARROW_SIGNED, n, CountMode.UP_TO, Style.DASHED),
        rows=flips,
        provenance=[Provenance(RelationKind.FLIP.value, f"flip#{i}") for i in range(len(flips))],
        style=Style.DASHED,
        name=f"flip[{n},{skeleton.value}]",
    )


def cmd_relations(args: argparse.Namespace, config: RunConfig) -> int:
    system = build_relations(args.kind, args.order, Skeleton(args.skeleton), args.flavor, not args.untruncated, config)
    table = [f"{p.schema}\t{p.site}\t{row}" for row, p in zip(system.rows, system.provenance)]
    emit_document(config, system_to_json(system), table)
    return EXIT_OK


def cmd_invariants(args: argparse.Namespace, config: RunConfig) -> int:
    skeleton = Skeleton(args.skeleton)
    profile = Profile(args.profile)
    system = context_for(config).profile_system(args.order, skeleton, profile)
    basis = invariant_space(args.order, skeleton, profile, system=system)
    document = {
        "order": args.order,
        "skeleton": skeleton.value,
        "profile": profile.value,
        "dimension": len(basis),
        "basis": [functional_to_json(f) for f in basis],
    }
    emit_document(config, document, [f"dimension {len(basis)}"] + [str(f) for f in basis])
    return EXIT_OK


def cmd_eval(args: argparse.Namespace, config: RunConfig) -> int:
    functional = load_functional(args.invariant)
    value = evaluate(functional, parse_gauss_code(args.knot))
    emit_document(config, {"knot": args.knot, "value": format_rational(value)}, [str(value)])
    return EXIT_OK


def cmd_witness(args: argparse.Namespace, config: RunConfig) -> int:
    functional = load_functional(args.invariant)
    bound = args.max_crossings if args.max_crossings is not None else config.witness_bound
    witness = find_witness(functional, bound)
    if witness is None:
        emit_document(config, {"witness": None}, ["no witness"])
        return EXIT_OK
    document: Dict[str, Any] = {
        "knot": witness.knot,
        "flipped_knot": witness.flipped_knot,
        "flipped_label": witness.flipped_label,
        "value": format_rational(witness.value),
        "flipped_value": format_rational(witness.flipped_value),
    }
    table = [f"{witness.knot} -> {witness.value}", f"{witness.flipped_knot} -> {witness.flipped_value}"]
    emit_document(config, {"witness": document}, table)
    return EXIT_OK


def _certificate_line(certificate: Certificate) -> str:
    params = ",".join(f"{k}={v}" for k, v in certificate.params.items())
    dims = ",".join(f"{k}={v}" for k, v in certificate.dims.items())
    line = f"{certificate.claim}[{params}]\t{certificate.status.name}\t{dims}"
    return f"{line}\t{certificate.failure}" if certificate.failure else line


def cmd_verify(args: argparse.Namespace, config: RunConfig) -> int:
    factory = ClaimFactory()
    include_runtime = not args.reproducible
    if args.claim == "all":
        settings = ContextSettings(
            cache_dir=config.cache_dir if config.use_cache else None,
            arrow_ceiling=config.arrow_ceiling,
            chord_ceiling=config.chord_ceiling,
            witness_bound=config.witness_bound,
        )
        certificates = factory.run_all(args.order_max, settings, config.workers)
        documents = [certificate_to_json(c, include_runtime) for c in certificates]
        emit_document(config, documents, [_certificate_line(c) for c in certificates])
        return exit_code_for_status(overall_status(certificates))
    if args.order is None:
        raise UsageException(f"verify {args.claim} needs --order")
    options: Dict[str, Any] = {}
    if args.claim == "membership":
        options["flavor"] = args.flavor
    if args.claim == "stability":
        options["order_low"] = args.order_low
    certificate = factory.run_claim(args.claim, args.order, Skeleton(args.skeleton), context_for(config), **options)
    emit_document(config, certificate_to_json(certificate, include_runtime), [_certificate_line(certificate)])
    return exit_code_for_status(certificate.status)
