"""
Exact sparse Gauss-Jordan elimination over the rationals.

Vectors are ``dict`` maps from column index to non-zero ``Fraction``. The basis is
kept in reduced row-echelon form at all times (pivot = lowest column of the row,
pivot entry 1, every pivot column cleared in every other row), which makes it
unique for a given row space and column order.
"""
import logging
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

_logger = logging.getLogger(__name__)

SparseVector = Dict[int, Fraction]


def _axpy(target: SparseVector, scale: Fraction, source: SparseVector) -> None:
    """``target += scale * source`` in place, dropping cancelled entries."""
    for col, value in source.items():
        updated = target.get(col, Fraction(0)) + scale * value
        if updated:
            target[col] = updated
        else:
            target.pop(col, None)


class EchelonBasis:
    """
    An incrementally maintained reduced row-echelon basis.

    Args:
        width (int): Number of columns.
        track (bool): Record every basis row as a combination of the inserted rows.
    """

    def __init__(self, width: int, track: bool = False) -> None:
        self.width = width
        self.track = track
        self.rows: Dict[int, SparseVector] = {}
        self.combos: Dict[int, SparseVector] = {}
        self._column_index: Dict[int, Set[int]] = {}
        self.inserted = 0

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> List[int]:
        return sorted(self.rows)

    def _index(self, pivot: int, row: SparseVector) -> None:
        for col in row:
            self._column_index.setdefault(col, set()).add(pivot)

    def _unindex(self, pivot: int, row: SparseVector) -> None:
        for col in row:
            owners = self._column_index.get(col)
            if owners is not None:
                owners.discard(pivot)

    def reduce(self, vector: SparseVector) -> Tuple[SparseVector, SparseVector]:
        """
        Reduce a vector against the basis.

        Returns:
            tuple[SparseVector, SparseVector]: The remainder and the multiples of each pivot row subtracted.
        """
        remainder = {col: value for col, value in vector.items() if value}
        used: SparseVector = {}
        for pivot in [col for col in vector if col in self.rows]:
            factor = remainder.get(pivot)
            if not factor:
                continue
            _axpy(remainder, -factor, self.rows[pivot])
            used[pivot] = factor
        return remainder, used

    def add(self, vector: SparseVector) -> bool:
        """
        Insert a row.

        Returns:
            bool: True if the rank grew.
        """
        source = self.inserted
        self.inserted += 1
        remainder, used = self.reduce(vector)
        if not remainder:
            return False
        pivot = min(remainder)
        scale = 1 / remainder[pivot]
        row = {col: value * scale for col, value in remainder.items()}
        combo: SparseVector = {}
        if self.track:
            combo = {source: scale}
            for used_pivot, factor in used.items():
                _axpy(combo, -factor * scale, self.combos[used_pivot])
        for owner in sorted(self._column_index.get(pivot, set())):
            other = self.rows[owner]
            factor = other.get(pivot)
            if not factor:
                continue
            self._unindex(owner, other)
            _axpy(other, -factor, row)
            self._index(owner, other)
            if self.track:
                _axpy(self.combos[owner], -factor, combo)
        self.rows[pivot] = row
        self._index(pivot, row)
        if self.track:
            self.combos[pivot] = combo
        return True

    def contains(self, vector: SparseVector) -> bool:
        return not self.reduce(vector)[0]

    def express(self, vector: SparseVector) -> Optional[SparseVector]:
        """
        Write ``vector`` as a combination of the inserted rows.

        Returns:
            SparseVector | None: Coefficients keyed by insertion index, or None if outside the span.
        """
        if not self.track:
            raise ValueError("express() needs a basis built with track=True")
        remainder, used = self.reduce(vector)
        if remainder:
            return None
        coefficients: SparseVector = {}
        for pivot, factor in used.items():
            _axpy(coefficients, factor, self.combos[pivot])
        return coefficients

    def basis(self) -> List[SparseVector]:
        return [self.rows[p] for p in self.pivots]


def row_space(rows: Iterable[SparseVector], width: int) -> Tuple[List[SparseVector], int]:
    """
    Reduced row-echelon basis of the row space.

    Returns:
        tuple[list[SparseVector], int]: The basis sorted by pivot, and the rank.
    """
    echelon = EchelonBasis(width)
    for row in rows:
        echelon.add(row)
    _logger.debug(f"eliminated {echelon.inserted} rows over {width} columns: rank {echelon.rank}")
    return echelon.basis(), echelon.rank


def _normalized(vector: SparseVector) -> SparseVector:
    lead = vector[min(vector)]
    return {col: value / lead for col, value in vector.items()}


def complement_of(echelon: EchelonBasis) -> List[SparseVector]:
    """Nullspace basis of the row space, first entry 1, ordered by sorted support."""
    pivots = set(echelon.rows)
    out: List[SparseVector] = []
    for free in range(echelon.width):
        if free in pivots:
            continue
        vector: SparseVector = {free: Fraction(1)}
        for pivot in echelon._column_index.get(free, set()):
            value = echelon.rows[pivot].get(free)
            if value:
                vector[pivot] = -value
        out.append(_normalized(vector))
    out.sort(key=lambda v: sorted(v))
    return out


def orthogonal_complement(rows: Iterable[SparseVector], width: int) -> List[SparseVector]:
    """
    Basis of ``{w : <w, r> = 0 for every row r}``.

    Args:
        rows (Iterable[SparseVector]): Relation rows.
        width (int): Ambient dimension.

    Returns:
        list[SparseVector]: ``width - rank`` vectors, each exactly orthogonal to every row.
    """
    echelon = EchelonBasis(width)
    for row in rows:
        echelon.add(row)
    complement = complement_of(echelon)
    _logger.debug(f"complement of rank {echelon.rank} in {width} columns: dimension {len(complement)}")
    return complement


def in_span(vector: SparseVector, rows: Sequence[SparseVector], width: int) -> Optional[List[Fraction]]:
    """
    Exact span membership with an explicit certificate.

    Returns:
        list[Fraction] | None: Coefficients ``c`` with ``sum(c[i] * rows[i]) == vector``, or None.
    """
    echelon = EchelonBasis(width, track=True)
    for row in rows:
        echelon.add(row)
    expressed = echelon.express(vector)
    if expressed is None:
        return None
    coefficients = [expressed.get(i, Fraction(0)) for i in range(len(rows))]
    check: SparseVector = {}
    for coefficient, row in zip(coefficients, rows):
        if coefficient:
            _axpy(check, coefficient, row)
    if check != {col: value for col, value in vector.items() if value}:
        raise ArithmeticError("span certificate failed to reproduce the vector")
    return coefficients


def dot(left: SparseVector, right: SparseVector) -> Fraction:
    small, large = (left, right) if len(left) <= len(right) else (right, left)
    return sum((value * large.get(col, Fraction(0)) for col, value in small.items()), Fraction(0))
