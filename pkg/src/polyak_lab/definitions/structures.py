from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional
from typing_extensions import Literal, TypedDict

from .constants import CERTIFICATE_SCHEMA, TOOL_VERSION
from .namespace import Status

SkeletonNameT = Literal["circle", "line"]
StyleNameT = Literal["solid", "dashed"]
OutputFormatT = Literal["json", "table"]
ClaimT = Literal[
    "theorem1",
    "vanishing",
    "caterpillar",
    "average",
    "membership",
    "stability",
    "xi",
    "universality",
    "flip-span",
]


class ArrowJson(TypedDict):
    tail: int
    head: int
    sign: int
    style: StyleNameT


class ChordJson(TypedDict):
    a: int
    b: int
    sign: int


class TermJson(TypedDict):
    diagram: str
    coeff: str


class FunctionalJson(TypedDict):
    order: int
    skeleton: SkeletonNameT
    profile: str
    entries: List[TermJson]


class CountsJson(TypedDict):
    diagrams: int
    relations: int


class WitnessJson(TypedDict):
    functional: int
    knot: str
    flipped_knot: str
    flipped_label: int
    value: str
    flipped_value: str


@dataclass(frozen=True)
class WitnessPair:
    """Two knots one virtualization move apart on which a functional takes different values."""
    knot: str
    flipped_knot: str
    flipped_label: int
    value: Fraction
    flipped_value: Fraction


@dataclass
class Certificate:
    """
    Record of one verification run.

    ``basis`` holds the exported basis vectors as ``{"name", "entries"}`` records and
    ``fingerprints`` the sha256 hashes of every basis and relation system involved.
    """
    claim: str
    params: Dict[str, Any]
    status: Status = Status.PASS
    dims: Dict[str, int] = field(default_factory=dict)
    basis: List[Dict[str, Any]] = field(default_factory=list)
    witnesses: List[WitnessJson] = field(default_factory=list)
    counts: CountsJson = field(default_factory=lambda: CountsJson(diagrams=0, relations=0))
    runtime_ms: int = 0
    tool_version: str = TOOL_VERSION
    fingerprints: Dict[str, str] = field(default_factory=dict)
    details: Dict[str, Any] = field(default_factory=dict)
    failure: Optional[str] = None
    schema: str = CERTIFICATE_SCHEMA

    def fail(self, reason: str) -> None:
        self.status = Status.FAIL
        self.failure = self.failure or reason

    def inconclusive(self, reason: str) -> None:
        if self.status is not Status.FAIL:
            self.status = Status.INCONCLUSIVE
            self.failure = self.failure or reason


@dataclass(frozen=True)
class CacheKey:
    kind: str
    skeleton: str
    order: int

    def __str__(self) -> str:
        return f"{self.kind}/{self.skeleton}/{self.order}"
