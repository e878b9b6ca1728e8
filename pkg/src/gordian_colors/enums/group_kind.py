"""An enum of the permutation groups a coloring may target."""

from dataclasses import dataclass
from enum import Enum


@dataclass(frozen=True)
class _GroupKindDataMixin:
    """Group kind data mixin."""

    group_name: str
    prefix: str


class GroupKind(_GroupKindDataMixin, Enum):
    """An enum of the permutation groups a coloring may target."""

    SYMMETRIC = "symmetric", "S"
    """The full symmetric group ``S_n``."""

    ALTERNATING = "alternating", "A"
    """The alternating group ``A_n`` of even permutations."""

    @classmethod
    def from_prefix(cls, prefix: str) -> "GroupKind":
        """Look up a group kind by its one-letter prefix (``S`` or ``A``)."""
        for kind in cls:
            if kind.prefix == prefix.upper():
                return kind
        raise ValueError(f"Unknown group prefix: {prefix!r}")
