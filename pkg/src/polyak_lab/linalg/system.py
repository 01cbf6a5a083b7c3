import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..definitions.exceptions import DiagramValidationException, FlavorMismatchException
from ..definitions.namespace import Flavor, Skeleton, Style
from ..diagrams.core import Diagram, canonical, sort_key
from .elimination import EchelonBasis, SparseVector, complement_of, in_span
from .formal_sum import FormalSum

_logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Provenance:
    schema: str
    site: str = ""


@dataclass
class RelationSystem:
    """
    Relation rows over a fixed, sorted ambient of canonical diagrams.

    Rows are deduplicated up to scaling and kept in a canonical order. Each
    stored row is the primitive integer multiple with a positive leading
    coefficient, labelled with the least provenance among its parallel copies,
    so two systems generated from the same instances in any order and at any
    scale are identical.
    """
    flavor: Flavor
    skeleton: Skeleton
    ambient: List[Diagram]
    rows: List[FormalSum] = field(default_factory=list)
    provenance: List[Provenance] = field(default_factory=list)
    style: Optional[Style] = None
    name: str = ""

    def __post_init__(self) -> None:
        self.ambient = sorted({canonical(d) for d in self.ambient}, key=sort_key)
        self._position: Dict[Diagram, int] = {d: i for i, d in enumerate(self.ambient)}
        if self.flavor.is_arrow and self.style is None:
            self.style = Style.DASHED
        pairs = list(zip(self.rows, self.provenance or [Provenance("")] * len(self.rows)))
        self.rows, self.provenance = [], []
        self._seen: Dict[Tuple, int] = {}
        self.extend(pairs)

    @property
    def width(self) -> int:
        return len(self.ambient)

    def index(self, diagram: Diagram) -> int:
        return self._position[canonical(diagram)]

    def to_sparse(self, vector: FormalSum) -> SparseVector:
        if (vector.flavor, vector.skeleton) != (self.flavor, self.skeleton):
            raise FlavorMismatchException(
                f"{vector.flavor.value}/{vector.skeleton.value} vector against a "
                f"{self.flavor.value}/{self.skeleton.value} system"
            )
        out: SparseVector = {}
        for diagram, coefficient in vector.terms.items():
            position = self._position.get(diagram)
            if position is None:
                raise DiagramValidationException(f"diagram {diagram.encode()} lies outside the ambient")
            out[position] = coefficient
        return out

    def from_sparse(self, vector: SparseVector) -> FormalSum:
        return FormalSum(
            flavor=self.flavor,
            skeleton=self.skeleton,
            terms={self.ambient[col]: value for col, value in vector.items() if value},
            style=self.style,
        )

    def _dedup_key(self, sparse: SparseVector) -> Tuple:
        lead = sparse[min(sparse)]
        return tuple(sorted((col, value / lead) for col, value in sparse.items()))

    def add(self, row: FormalSum, provenance: Provenance) -> bool:
        """
        Add one row; zero rows and rows parallel to an existing row are skipped.

        A skipped parallel row still replaces the stored provenance when its
        own provenance sorts lower.

        Raises:
            DiagramValidationException: If the row leaves the ambient.
        """
        sparse = self.to_sparse(row)
        if not sparse:
            return False
        key = self._dedup_key(sparse)
        existing = self._seen.get(key)
        if existing is not None:
            if provenance < self.provenance[existing]:
                self.provenance[existing] = provenance
            return False
        self._seen[key] = len(self.rows)
        self.rows.append(row.scaled_to_integers())
        self.provenance.append(provenance)
        return True

    def extend(self, pairs: Iterable[Tuple[FormalSum, Provenance]]) -> None:
        for row, provenance in pairs:
            self.add(row, provenance)
        self._sort()

    def _sort(self) -> None:
        keyed = sorted(
            zip(self.rows, self.provenance),
            key=lambda pair: self._dedup_key(self.to_sparse(pair[0])),
        )
        self.rows = [row for row, _ in keyed]
        self.provenance = [p for _, p in keyed]
        self._seen = {self._dedup_key(self.to_sparse(row)): i for i, row in enumerate(self.rows)}

    def vectors(self) -> List[SparseVector]:
        return [self.to_sparse(row) for row in self.rows]

    def echelon(self, track: bool = False) -> EchelonBasis:
        basis = EchelonBasis(self.width, track=track)
        for vector in self.vectors():
            basis.add(vector)
        _logger.debug(f"{self.name or 'system'}: {len(self.rows)} rows over {self.width} diagrams, rank {basis.rank}")
        return basis

    def rank(self) -> int:
        return self.echelon().rank

    def complement(self) -> List[FormalSum]:
        return [self.from_sparse(v) for v in complement_of(self.echelon())]

    def contains(self, vector: FormalSum) -> bool:
        return self.echelon().contains(self.to_sparse(vector))

    def express(self, vector: FormalSum) -> Optional[List[Fraction]]:
        """Explicit coefficients over ``self.rows`` reproducing ``vector``, or None."""
        return in_span(self.to_sparse(vector), self.vectors(), self.width)

    def union(self, other: "RelationSystem", name: str = "") -> "RelationSystem":
        if (self.flavor, self.skeleton, self.style) != (other.flavor, other.skeleton, other.style):
            raise FlavorMismatchException("cannot join relation systems of different flavors")
        return RelationSystem(
            flavor=self.flavor,
            skeleton=self.skeleton,
            ambient=sorted(set(self.ambient) | set(other.ambient), key=sort_key),
            rows=self.rows + other.rows,
            provenance=self.provenance + other.provenance,
            style=self.style,
            name=name or f"{self.name}+{other.name}",
        )

    def over(self, ambient: Sequence[Diagram]) -> "RelationSystem":
        """Same rows over a larger (or equal) ambient."""
        return RelationSystem(
            flavor=self.flavor,
            skeleton=self.skeleton,
            ambient=list(ambient),
            rows=list(self.rows),
            provenance=list(self.provenance),
            style=self.style,
            name=self.name,
        )
