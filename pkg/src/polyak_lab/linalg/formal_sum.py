"""
Sparse rational linear combinations of canonical diagrams.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Tuple, Union

from ..definitions.exceptions import FlavorMismatchException
from ..definitions.namespace import Flavor, Skeleton, Style
from ..diagrams.core import CanonicalKey, Diagram, GaussDiagram, canonical, canonical_key, sort_key

Rational = Union[int, Fraction]
Term = Tuple[Diagram, Rational]


def _style_of(diagram: Diagram) -> Optional[Style]:
    if not isinstance(diagram, GaussDiagram) or diagram.order == 0:
        return None
    if diagram.is_dashed:
        return Style.DASHED
    if diagram.is_solid:
        return Style.SOLID
    raise FlavorMismatchException(f"semivirtual diagram {diagram.encode()} cannot index a formal sum")


@dataclass(frozen=True)
class FormalSum:
    """
    A finite rational combination of canonical diagrams of one flavor and skeleton.

    Arrow flavors additionally fix one arrow style (dashed for the arrow space,
    solid for knot-side sums). Zero coefficients are never stored.
    """
    flavor: Flavor
    skeleton: Skeleton
    terms: Dict[Diagram, Fraction] = field(default_factory=dict)
    style: Optional[Style] = None

    def __post_init__(self) -> None:
        if self.flavor.is_arrow and self.style is None:
            object.__setattr__(self, "style", Style.DASHED)
        if not self.flavor.is_arrow and self.style is not None:
            object.__setattr__(self, "style", None)

    @classmethod
    def from_terms(
        cls,
        flavor: Flavor,
        skeleton: Skeleton,
        terms: Iterable[Term],
        style: Optional[Style] = None,
    ) -> "FormalSum":
        """
        Canonicalize, check and merge ``(diagram, coefficient)`` pairs.

        Raises:
            FlavorMismatchException: If a diagram has another flavor, skeleton or style.
        """
        out = cls(flavor=flavor, skeleton=skeleton, style=style)
        merged: Dict[Diagram, Fraction] = {}
        for diagram, coefficient in terms:
            out._check(diagram)
            key = canonical(diagram)
            merged[key] = merged.get(key, Fraction(0)) + Fraction(coefficient)
        return out._with({d: c for d, c in merged.items() if c != 0})

    @classmethod
    def single(cls, diagram: Diagram, coefficient: Rational = 1, style: Optional[Style] = None) -> "FormalSum":
        if style is None:
            style = _style_of(diagram)
        return cls.from_terms(diagram.flavor, diagram.skeleton, [(diagram, coefficient)], style=style)

    @classmethod
    def zero(cls, flavor: Flavor, skeleton: Skeleton, style: Optional[Style] = None) -> "FormalSum":
        return cls(flavor=flavor, skeleton=skeleton, style=style)

    def _check(self, diagram: Diagram) -> None:
        if diagram.flavor is not self.flavor:
            raise FlavorMismatchException(
                f"cannot add a {diagram.flavor.value} diagram to a {self.flavor.value} sum"
            )
        if diagram.skeleton is not self.skeleton:
            raise FlavorMismatchException(
                f"cannot add a {diagram.skeleton.value} diagram to a {self.skeleton.value} sum"
            )
        style = _style_of(diagram)
        if style is not None and style is not self.style:
            raise FlavorMismatchException(
                f"cannot add a {style.value} diagram to a {self.style.value if self.style else 'chord'} sum"
            )

    def _with(self, terms: Dict[Diagram, Fraction]) -> "FormalSum":
        return FormalSum(flavor=self.flavor, skeleton=self.skeleton, terms=terms, style=self.style)

    def _compatible(self, other: "FormalSum") -> None:
        if (self.flavor, self.skeleton, self.style) != (other.flavor, other.skeleton, other.style):
            raise FlavorMismatchException(
                f"cannot combine {self.flavor.value}/{self.skeleton.value} "
                f"with {other.flavor.value}/{other.skeleton.value}"
            )

    def __add__(self, other: "FormalSum") -> "FormalSum":
        self._compatible(other)
        merged = dict(self.terms)
        for diagram, coefficient in other.terms.items():
            value = merged.get(diagram, Fraction(0)) + coefficient
            if value:
                merged[diagram] = value
            else:
                merged.pop(diagram, None)
        return self._with(merged)

    def __neg__(self) -> "FormalSum":
        return self._with({d: -c for d, c in self.terms.items()})

    def __sub__(self, other: "FormalSum") -> "FormalSum":
        return self + (-other)

    def __mul__(self, scalar: Rational) -> "FormalSum":
        scalar = Fraction(scalar)
        if not scalar:
            return self._with({})
        return self._with({d: c * scalar for d, c in self.terms.items()})

    __rmul__ = __mul__

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[Tuple[Diagram, Fraction]]:
        return iter(self.items())

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*[{d.encode()}]" for d, c in self.items())

    def coefficient(self, diagram: Diagram) -> Fraction:
        return self.terms.get(canonical(diagram), Fraction(0))

    def items(self) -> List[Tuple[Diagram, Fraction]]:
        return sorted(self.terms.items(), key=lambda item: sort_key(item[0]))

    def support(self) -> List[Diagram]:
        return sorted(self.terms, key=sort_key)

    def keys(self) -> List[CanonicalKey]:
        return [canonical_key(d) for d in self.support()]

    def degrees(self) -> List[int]:
        return sorted({d.order for d in self.terms})

    def homogeneous_part(self, degree: int) -> "FormalSum":
        return self._with({d: c for d, c in self.terms.items() if d.order == degree})

    def truncate(self, max_degree: int) -> "FormalSum":
        return self._with({d: c for d, c in self.terms.items() if d.order <= max_degree})

    def dot(self, other: "FormalSum") -> Fraction:
        """Pairing in which distinct canonical diagrams are orthonormal."""
        self._compatible(other)
        small, large = (self, other) if len(self) <= len(other) else (other, self)
        return sum((c * large.terms.get(d, Fraction(0)) for d, c in small.terms.items()), Fraction(0))

    def map(
        self,
        fn: Callable[[Diagram], Iterable[Term]],
        flavor: Flavor,
        skeleton: Optional[Skeleton] = None,
        style: Optional[Style] = None,
    ) -> "FormalSum":
        """Extend ``fn`` (diagram to terms) linearly into a sum of the target flavor."""
        skeleton = self.skeleton if skeleton is None else skeleton
        return FormalSum.from_terms(
            flavor,
            skeleton,
            ((image, c * Fraction(k)) for d, c in self.terms.items() for image, k in fn(d)),
            style=style,
        )

    def scaled_to_integers(self) -> "FormalSum":
        """Return the primitive integer multiple with a positive leading coefficient."""
        if not self.terms:
            return self
        lcm = 1
        for c in self.terms.values():
            lcm = lcm * c.denominator // gcd(lcm, c.denominator)
        ints = [int(c * lcm) for c in self.terms.values()]
        g = 0
        for value in ints:
            g = gcd(g, abs(value))
        lead = self.items()[0][1]
        factor = Fraction(lcm, g) * (1 if lead > 0 else -1)
        return self * factor
