from enum import Enum, IntEnum


class Skeleton(str, Enum):
    CIRCLE = "circle"
    LINE = "line"

    @property
    def letter(self) -> str:
        return "C" if self is Skeleton.CIRCLE else "L"

    @classmethod
    def from_letter(cls, letter: str) -> "Skeleton":
        return {"C": cls.CIRCLE, "L": cls.LINE}[letter]


class Style(str, Enum):
    SOLID = "solid"
    DASHED = "dashed"

    @property
    def letter(self) -> str:
        return "s" if self is Style.SOLID else "d"


class Flavor(str, Enum):
    ARROW_SIGNED = "arrow-signed"
    ARROW_UNSIGNED = "arrow-unsigned"
    CHORD_SIGNED = "chord-signed"
    CHORD_UNSIGNED = "chord-unsigned"

    @property
    def is_arrow(self) -> bool:
        return self in (Flavor.ARROW_SIGNED, Flavor.ARROW_UNSIGNED)

    @property
    def is_signed(self) -> bool:
        return self in (Flavor.ARROW_SIGNED, Flavor.CHORD_SIGNED)

    @property
    def letter(self) -> str:
        return _FLAVOR_LETTERS[self]

    @classmethod
    def from_letter(cls, letter: str) -> "Flavor":
        return {v: k for k, v in _FLAVOR_LETTERS.items()}[letter]

    @classmethod
    def of(cls, arrow: bool, signed: bool) -> "Flavor":
        if arrow:
            return cls.ARROW_SIGNED if signed else cls.ARROW_UNSIGNED
        return cls.CHORD_SIGNED if signed else cls.CHORD_UNSIGNED


_FLAVOR_LETTERS = {
    Flavor.ARROW_SIGNED: "A",
    Flavor.ARROW_UNSIGNED: "a",
    Flavor.CHORD_SIGNED: "H",
    Flavor.CHORD_UNSIGNED: "h",
}


class CountMode(str, Enum):
    EXACTLY = "exactly"
    UP_TO = "up-to"


class Profile(str, Enum):
    GPV = "gpv"
    GPV_VIRTUALIZATION = "gpv+virtualization"
    CHORD = "chord"


class RelationKind(str, Enum):
    DELTA_PI = "dPI"
    DELTA_PII = "dPII"
    DELTA_PIII = "dPIII"
    DELTA_RI = "dRI"
    DELTA_RII = "dRII"
    DELTA_RIII = "dRIII"
    ONE_TERM_SIGNED = "1T+-"
    NS = "NS"
    SIX_TERM_SIGNED = "6T+-"
    ONE_TERM = "1T"
    SIX_TERM = "6T"
    FOUR_TERM = "4T"
    TWO_TERM = "2T"
    FLIP = "flip"


class MoveType(str, Enum):
    R1_INSERT = "R1-insert"
    R1_DELETE = "R1-delete"
    R2_INSERT = "R2-insert"
    R2_DELETE = "R2-delete"
    R3 = "R3"


class Status(IntEnum):
    PASS = 0
    FAIL = 1
    INCONCLUSIVE = 2

    @classmethod
    def worst(cls, *statuses: "Status") -> "Status":
        # INCONCLUSIVE ranks above FAIL only for exit-code purposes
        if any(s is cls.FAIL for s in statuses):
            return cls.FAIL
        if any(s is cls.INCONCLUSIVE for s in statuses):
            return cls.INCONCLUSIVE
        return cls.PASS
