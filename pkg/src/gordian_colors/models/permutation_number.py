"""Results of the permutation-number search."""

import typing as t
from dataclasses import dataclass, field

from .class_coloring import ClassColoring


@dataclass(frozen=True)
class PermutationNumber:
    """The largest ``n <= n_max`` with a surjective transposition coloring onto ``S_n``."""

    value: int
    n_max: int
    """The largest degree searched."""

    witnesses: t.Mapping[int, ClassColoring] = field(default_factory=dict)
    """One surjective coloring for every degree that has one."""

    @property
    def degrees(self) -> t.Tuple[int, ...]:
        """Every degree ``2..n_max`` with a surjective coloring; not always an interval."""
        return tuple(sorted(self.witnesses))


@dataclass(frozen=True)
class MeridionalRankCertificate:
    """The chain ``p - 1 <= μ <= b <= strands`` for the closure of a braid.

    ``μ`` is at least ``p - 1`` because ``S_p`` needs ``p - 1`` transpositions to be generated. The bridge number
    ``b`` bounds ``μ`` from above and is itself bounded by the strand count. ``seed_count`` is the number of arcs
    that generate the knot group, another upper bound for ``μ``.
    """

    permutation_number: int
    seed_count: int
    strands: int

    @property
    def lower(self) -> int:
        return self.permutation_number - 1

    @property
    def upper(self) -> int:
        return self.strands

    @property
    def pinned(self) -> bool:
        """``True`` when ``μ`` and ``b`` are both forced to equal the strand count."""
        return self.lower == self.upper
