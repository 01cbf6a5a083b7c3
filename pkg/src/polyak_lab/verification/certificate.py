import time
from contextlib import contextmanager
from enum import Enum
from typing import Any, Dict, Iterator, List

from ..definitions.structures import Certificate, CountsJson, WitnessJson, WitnessPair
from ..invariants.functional import InvariantFunctional
from ..linalg.system import RelationSystem
from ..serialization.json_codec import fingerprint, format_rational, functional_to_json, system_to_json, write_json


def new_certificate(claim: str, **params: Any) -> Certificate:
    normalized = {k: (v.value if isinstance(v, Enum) else v) for k, v in sorted(params.items())}
    return Certificate(claim=claim, params=normalized)


@contextmanager
def timed(certificate: Certificate) -> Iterator[Certificate]:
    start = time.perf_counter()
    try:
        yield certificate
    finally:
        certificate.runtime_ms = int((time.perf_counter() - start) * 1000)


def record_basis(certificate: Certificate, name: str, basis: List[InvariantFunctional]) -> None:
    """Export a basis and its hash; the entries alone let a checker re-verify orthogonality."""
    documents = []
    for i, functional in enumerate(basis):
        document: Dict[str, Any] = {"name": f"{name}/{i}"}
        document.update(functional_to_json(functional))
        documents.append(document)
    certificate.basis.extend(documents)
    certificate.fingerprints[f"basis:{name}"] = fingerprint({"basis": documents})


def record_system(certificate: Certificate, label: str, system: RelationSystem, rank: int) -> None:
    certificate.fingerprints[f"system:{label}"] = fingerprint(system_to_json(system))
    certificate.details.setdefault("ranks", {})[label] = rank
    certificate.counts = CountsJson(
        diagrams=certificate.counts["diagrams"] + system.width,
        relations=certificate.counts["relations"] + len(system.rows),
    )


def witness_record(index: int, witness: WitnessPair) -> WitnessJson:
    return WitnessJson(
        functional=index,
        knot=witness.knot,
        flipped_knot=witness.flipped_knot,
        flipped_label=witness.flipped_label,
        value=format_rational(witness.value),
        flipped_value=format_rational(witness.flipped_value),
    )


def certificate_bytes(certificate: Certificate, reproducible: bool = False) -> bytes:
    """Serialized certificate; ``reproducible`` zeroes the wall-clock time."""
    return write_json(certificate, include_runtime=not reproducible)
