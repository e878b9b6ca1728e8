"""An enum of the conjugacy classes used as colors."""

from dataclasses import dataclass
from enum import Enum


@dataclass(frozen=True)
class _ClassKindDataMixin:
    """Class kind data mixin."""

    class_name: str
    cycle_length: int


class ClassKind(_ClassKindDataMixin, Enum):
    """An enum of the conjugacy classes used as colors."""

    TRANSPOSITIONS = "transpositions", 2
    """2-cycles ``(ij)``; every color is an involution, so crossing signs do not matter."""

    THREE_CYCLES = "three_cycles", 3
    """3-cycles ``(ijk)``; the crossing sign decides the direction of conjugation."""

    @classmethod
    def from_name(cls, name: str) -> "ClassKind":
        """Look up a class kind by its JSON name."""
        for kind in cls:
            if kind.class_name == name:
                return kind
        raise ValueError(f"Unknown conjugacy class: {name!r}")
