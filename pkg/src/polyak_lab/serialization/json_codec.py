"""
JSON wire formats for diagrams, formal sums, functionals, relation systems and certificates.

Rationals travel as ``"p/q"`` strings in lowest terms and diagrams inside sums as
their canonical encodings. Documents are written with a fixed field order, so
equal entities serialize to equal bytes.
"""
import hashlib
import json
import re
from fractions import Fraction
from typing import Any, Dict, List, Mapping, Optional, Union

from ..definitions.constants import CERTIFICATE_SCHEMA
from ..definitions.exceptions import DiagramValidationException, FlavorMismatchException, SchemaViolationException
from ..definitions.namespace import Flavor, Profile, Skeleton, Status, Style
from ..definitions.structures import Certificate, CountsJson, WitnessJson
from ..diagrams.core import Arrow, Chord, ChordDiagram, Diagram, GaussDiagram, canonical_key, decode_key
from ..invariants.functional import InvariantFunctional
from ..linalg.formal_sum import FormalSum
from ..linalg.system import Provenance, RelationSystem

Entity = Union[GaussDiagram, ChordDiagram, FormalSum, InvariantFunctional, RelationSystem, Certificate]

_RATIONAL = re.compile(r"^(-?\d+)(?:/(\d+))?$")


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: Any, pointer: str) -> Fraction:
    if not isinstance(text, str):
        raise SchemaViolationException("expected a rational string \"p/q\"", pointer)
    match = _RATIONAL.match(text)
    if match is None:
        raise SchemaViolationException(f"malformed rational {text!r}", pointer)
    denominator = int(match.group(2) or 1)
    if denominator == 0:
        raise SchemaViolationException("zero denominator", pointer)
    return Fraction(int(match.group(1)), denominator)


def _require(obj: Any, key: str, pointer: str, kind: Union[type, tuple]) -> Any:
    if not isinstance(obj, dict):
        raise SchemaViolationException("expected an object", pointer)
    if key not in obj:
        raise SchemaViolationException(f"missing field '{key}'", f"{pointer}/{key}")
    value = obj[key]
    # bool is an int subclass, never a valid count or index here
    if not isinstance(value, kind) or (kind is int and isinstance(value, bool)):
        raise SchemaViolationException(f"field '{key}' has the wrong type", f"{pointer}/{key}")
    return value


def _enum(enum_type: Any, value: Any, pointer: str) -> Any:
    try:
        return enum_type(value)
    except ValueError:
        allowed = ", ".join(repr(e.value) for e in enum_type)
        raise SchemaViolationException(f"{value!r} is not one of {allowed}", pointer) from None


def _key(text: Any, pointer: str) -> Diagram:
    if not isinstance(text, str):
        raise SchemaViolationException("expected a diagram key", pointer)
    try:
        return decode_key(text)
    except DiagramValidationException as e:
        raise SchemaViolationException(str(e), pointer) from None


def diagram_to_json(diagram: Diagram) -> Dict[str, Any]:
    out: Dict[str, Any] = {"skeleton": diagram.skeleton.value}
    if isinstance(diagram, GaussDiagram):
        out["arrows"] = [
            {"tail": a.tail, "head": a.head, "sign": a.sign, "style": a.style.value} for a in diagram.arrows
        ]
    else:
        out["chords"] = [{"a": c.a, "b": c.b, "sign": c.sign} for c in diagram.chords]
    if not diagram.signed:
        out["signed"] = False
    return out


def diagram_from_json(obj: Any, pointer: str = "") -> Diagram:
    skeleton = _enum(Skeleton, _require(obj, "skeleton", pointer, str), f"{pointer}/skeleton")
    signed = obj.get("signed", True)
    if not isinstance(signed, bool):
        raise SchemaViolationException("field 'signed' must be a boolean", f"{pointer}/signed")
    try:
        if "chords" in obj:
            chords = []
            for i, item in enumerate(_require(obj, "chords", pointer, list)):
                where = f"{pointer}/chords/{i}"
                chords.append(Chord(
                    a=_require(item, "a", where, int),
                    b=_require(item, "b", where, int),
                    sign=_require(item, "sign", where, int),
                ))
            return ChordDiagram(skeleton=skeleton, chords=tuple(chords), signed=signed)
        arrows = []
        for i, item in enumerate(_require(obj, "arrows", pointer, list)):
            where = f"{pointer}/arrows/{i}"
            arrows.append(Arrow(
                tail=_require(item, "tail", where, int),
                head=_require(item, "head", where, int),
                sign=_require(item, "sign", where, int),
                style=_enum(Style, _require(item, "style", where, str), f"{where}/style"),
            ))
        return GaussDiagram(skeleton=skeleton, arrows=tuple(arrows), signed=signed)
    except DiagramValidationException as e:
        raise SchemaViolationException(str(e), pointer) from None


def _terms_to_json(vector: FormalSum) -> List[Dict[str, str]]:
    return [{"diagram": str(canonical_key(d)), "coeff": format_rational(c)} for d, c in vector.items()]


def _terms_from_json(items: Any, pointer: str) -> List:
    out = []
    for i, item in enumerate(items):
        where = f"{pointer}/{i}"
        out.append((_key(_require(item, "diagram", where, str), f"{where}/diagram"),
                    parse_rational(_require(item, "coeff", where, str), f"{where}/coeff")))
    return out


def _vector_from_json(
    flavor: Flavor,
    skeleton: Skeleton,
    style: Optional[Style],
    items: Any,
    pointer: str,
    max_order: Optional[int] = None,
) -> FormalSum:
    terms = _terms_from_json(items, pointer)
    for i, (diagram, _) in enumerate(terms):
        if max_order is not None and diagram.order > max_order:
            raise SchemaViolationException(
                f"entry with {diagram.order} arrows in an order-{max_order} functional", f"{pointer}/{i}/diagram"
            )
        if diagram.flavor is not flavor or diagram.skeleton is not skeleton:
            raise SchemaViolationException(
                f"diagram of flavor {diagram.flavor.value}/{diagram.skeleton.value} in a "
                f"{flavor.value}/{skeleton.value} document",
                f"{pointer}/{i}/diagram",
            )
    try:
        return FormalSum.from_terms(flavor, skeleton, terms, style=style)
    except FlavorMismatchException as e:
        raise SchemaViolationException(str(e), pointer) from None


def sum_to_json(vector: FormalSum) -> Dict[str, Any]:
    out: Dict[str, Any] = {"flavor": vector.flavor.value, "skeleton": vector.skeleton.value}
    if vector.style is not None:
        out["style"] = vector.style.value
    out["terms"] = _terms_to_json(vector)
    return out


def sum_from_json(obj: Any, pointer: str = "") -> FormalSum:
    flavor = _enum(Flavor, _require(obj, "flavor", pointer, str), f"{pointer}/flavor")
    skeleton = _enum(Skeleton, _require(obj, "skeleton", pointer, str), f"{pointer}/skeleton")
    style = _enum(Style, obj["style"], f"{pointer}/style") if "style" in obj else None
    return _vector_from_json(flavor, skeleton, style, _require(obj, "terms", pointer, list), f"{pointer}/terms")


def functional_to_json(functional: InvariantFunctional) -> Dict[str, Any]:
    return {
        "order": functional.order,
        "skeleton": functional.skeleton.value,
        "profile": functional.profile.value,
        "entries": _terms_to_json(functional.entries),
    }


def functional_from_json(obj: Any, pointer: str = "") -> InvariantFunctional:
    order = _require(obj, "order", pointer, int)
    if order < 0:
        raise SchemaViolationException("order must be non-negative", f"{pointer}/order")
    skeleton = _enum(Skeleton, _require(obj, "skeleton", pointer, str), f"{pointer}/skeleton")
    profile = _enum(Profile, obj.get("profile", Profile.GPV.value), f"{pointer}/profile")
    flavor = Flavor.CHORD_SIGNED if profile is Profile.CHORD else Flavor.ARROW_SIGNED
    style = None if profile is Profile.CHORD else Style.DASHED
    entries = _vector_from_json(
        flavor, skeleton, style, _require(obj, "entries", pointer, list), f"{pointer}/entries", max_order=order
    )
    return InvariantFunctional(order, skeleton, entries, profile)


def system_to_json(system: RelationSystem) -> Dict[str, Any]:
    out: Dict[str, Any] = {
        "name": system.name,
        "flavor": system.flavor.value,
        "skeleton": system.skeleton.value,
    }
    if system.style is not None:
        out["style"] = system.style.value
    out["ambient"] = [str(canonical_key(d)) for d in system.ambient]
    out["rows"] = [
        {"schema": p.schema, "site": p.site, "terms": _terms_to_json(row)}
        for row, p in zip(system.rows, system.provenance)
    ]
    return out


def system_from_json(obj: Any, pointer: str = "") -> RelationSystem:
    flavor = _enum(Flavor, _require(obj, "flavor", pointer, str), f"{pointer}/flavor")
    skeleton = _enum(Skeleton, _require(obj, "skeleton", pointer, str), f"{pointer}/skeleton")
    style = _enum(Style, obj["style"], f"{pointer}/style") if "style" in obj else None
    ambient = [_key(k, f"{pointer}/ambient/{i}") for i, k in enumerate(_require(obj, "ambient", pointer, list))]
    rows, provenance = [], []
    for i, item in enumerate(_require(obj, "rows", pointer, list)):
        where = f"{pointer}/rows/{i}"
        rows.append(_vector_from_json(flavor, skeleton, style, _require(item, "terms", where, list), f"{where}/terms"))
        provenance.append(Provenance(_require(item, "schema", where, str), item.get("site", "")))
    try:
        return RelationSystem(
            flavor=flavor,
            skeleton=skeleton,
            ambient=ambient,
            rows=rows,
            provenance=provenance,
            style=style,
            name=obj.get("name", ""),
        )
    except DiagramValidationException as e:
        raise SchemaViolationException(str(e), f"{pointer}/rows") from None


def witness_to_json(witness: WitnessJson) -> Dict[str, Any]:
    return {
        "functional": witness["functional"],
        "knot": witness["knot"],
        "flipped_knot": witness["flipped_knot"],
        "flipped_label": witness["flipped_label"],
        "value": witness["value"],
        "flipped_value": witness["flipped_value"],
    }


def certificate_to_json(certificate: Certificate, include_runtime: bool = True) -> Dict[str, Any]:
    out: Dict[str, Any] = {
        "schema": certificate.schema,
        "claim": certificate.claim,
        "params": dict(certificate.params),
        "status": certificate.status.name,
        "dims": dict(certificate.dims),
        "basis": list(certificate.basis),
        "witnesses": [witness_to_json(w) for w in certificate.witnesses],
        "counts": {"diagrams": certificate.counts["diagrams"], "relations": certificate.counts["relations"]},
        "runtime_ms": certificate.runtime_ms if include_runtime else 0,
        "tool_version": certificate.tool_version,
        "fingerprints": dict(certificate.fingerprints),
        "details": certificate.details,
    }
    if certificate.failure is not None:
        out["failure"] = certificate.failure
    return out


def certificate_from_json(obj: Any, pointer: str = "") -> Certificate:
    schema = _require(obj, "schema", pointer, str)
    if schema != CERTIFICATE_SCHEMA:
        raise SchemaViolationException(f"unsupported certificate schema {schema!r}", f"{pointer}/schema")
    claim = _require(obj, "claim", pointer, str)
    params = _require(obj, "params", pointer, dict)
    status_name = _require(obj, "status", pointer, str)
    if status_name not in Status.__members__:
        raise SchemaViolationException(f"unknown status {status_name!r}", f"{pointer}/status")
    dims = _require(obj, "dims", pointer, dict)
    for name, value in dims.items():
        if not isinstance(value, int) or isinstance(value, bool):
            raise SchemaViolationException("dimensions are integers", f"{pointer}/dims/{name}")
    basis = _require(obj, "basis", pointer, list)
    witnesses: List[WitnessJson] = []
    for i, item in enumerate(_require(obj, "witnesses", pointer, list)):
        where = f"{pointer}/witnesses/{i}"
        witnesses.append(WitnessJson(
            functional=_require(item, "functional", where, int),
            knot=_require(item, "knot", where, str),
            flipped_knot=_require(item, "flipped_knot", where, str),
            flipped_label=_require(item, "flipped_label", where, int),
            value=format_rational(parse_rational(_require(item, "value", where, str), f"{where}/value")),
            flipped_value=format_rational(
                parse_rational(_require(item, "flipped_value", where, str), f"{where}/flipped_value")
            ),
        ))
    counts = _require(obj, "counts", pointer, dict)
    return Certificate(
        claim=claim,
        params=params,
        status=Status[status_name],
        dims=dims,
        basis=basis,
        witnesses=witnesses,
        counts=CountsJson(
            diagrams=_require(counts, "diagrams", f"{pointer}/counts", int),
            relations=_require(counts, "relations", f"{pointer}/counts", int),
        ),
        runtime_ms=_require(obj, "runtime_ms", pointer, int),
        tool_version=obj.get("tool_version", ""),
        fingerprints=obj.get("fingerprints", {}),
        details=obj.get("details", {}),
        failure=obj.get("failure"),
        schema=schema,
    )


def to_json(entity: Entity, include_runtime: bool = True) -> Dict[str, Any]:
    if isinstance(entity, (GaussDiagram, ChordDiagram)):
        return diagram_to_json(entity)
    if isinstance(entity, FormalSum):
        return sum_to_json(entity)
    if isinstance(entity, InvariantFunctional):
        return functional_to_json(entity)
    if isinstance(entity, RelationSystem):
        return system_to_json(entity)
    if isinstance(entity, Certificate):
        return certificate_to_json(entity, include_runtime)
    raise TypeError(f"cannot serialize {type(entity).__name__}")


def dumps(document: Any) -> bytes:
    return (json.dumps(document, indent=2, ensure_ascii=True) + "\n").encode("ascii")


def write_json(entity: Entity, include_runtime: bool = True) -> bytes:
    """
    Serialize an entity.

    Args:
        entity (Entity): Diagram, formal sum, functional, relation system or certificate.
        include_runtime (bool): Keep a certificate's wall-clock time; without it the
            output is byte-reproducible.

    Returns:
        bytes: Indented ASCII JSON with a trailing newline.
    """
    return dumps(to_json(entity, include_runtime))


_READERS = {
    "diagram": diagram_from_json,
    "sum": sum_from_json,
    "functional": functional_from_json,
    "relations": system_from_json,
    "certificate": certificate_from_json,
}


def detect_kind(obj: Any) -> str:
    if not isinstance(obj, dict):
        raise SchemaViolationException("expected an object", "")
    for field_name, kind in (
        ("schema", "certificate"),
        ("entries", "functional"),
        ("rows", "relations"),
        ("terms", "sum"),
        ("arrows", "diagram"),
        ("chords", "diagram"),
    ):
        if field_name in obj:
            return kind
    raise SchemaViolationException("unrecognized document", "")


def read_json(data: Union[bytes, str], kind: Optional[str] = None) -> Entity:
    """
    Parse and validate a document.

    Args:
        data (bytes | str): JSON text.
        kind (str | None): One of ``diagram``, ``sum``, ``functional``, ``relations``,
            ``certificate``; detected from the fields present when omitted.

    Returns:
        Entity: The decoded entity.

    Raises:
        SchemaViolationException: On invalid JSON or a schema violation, with a JSON pointer.
    """
    try:
        obj = json.loads(data)
    except ValueError as e:
        raise SchemaViolationException(f"invalid JSON: {e}", "") from None
    if kind is None:
        kind = detect_kind(obj)
    if kind not in _READERS:
        raise ValueError(f"unknown document kind {kind!r}")
    if not isinstance(obj, dict):
        raise SchemaViolationException("expected an object", "")
    return _READERS[kind](obj)  # type: ignore


def fingerprint(document: Mapping[str, Any]) -> str:
    """sha256 over the compact, key-sorted rendering of a document."""
    text = json.dumps(document, sort_keys=True, separators=(",", ":"), ensure_ascii=True)
    return hashlib.sha256(text.encode("ascii")).hexdigest()
