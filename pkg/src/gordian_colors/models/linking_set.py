"""Sets of linking numbers of the lifts of a knot."""

import typing as t
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class LinkingSet:
    """The linking numbers over all surjective three-colorings, one coloring per color permutation orbit."""

    values: t.Tuple[Fraction, ...] = ()
    """Distinct defined values, ascending."""

    orbits: t.Tuple[t.Tuple[Fraction, int], ...] = ()
    """How many coloring orbits produce each value, ascending by value."""

    undefined_count: int = 0
    """Coloring orbits whose lifts are not torsion in homology."""

    @classmethod
    def from_results(cls, results: t.Iterable[t.Optional[Fraction]]) -> "LinkingSet":
        """Tally per-coloring results, ``None`` standing for an undefined linking number."""
        counts: t.Dict[Fraction, int] = {}
        undefined = 0
        for value in results:
            if value is None:
                undefined += 1
            else:
                counts[value] = counts.get(value, 0) + 1
        return cls(
            values=tuple(sorted(counts)),
            orbits=tuple(sorted(counts.items())),
            undefined_count=undefined,
        )

    def __contains__(self, value: object) -> bool:
        return value in self.values

    def __len__(self) -> int:
        return len(self.values)

    def negated(self) -> "LinkingSet":
        """The set of the mirror image."""
        return LinkingSet(
            values=tuple(sorted(-v for v in self.values)),
            orbits=tuple(sorted((-v, n) for v, n in self.orbits)),
            undefined_count=self.undefined_count,
        )


@dataclass(frozen=True)
class LinkingObstruction:
    """Comparison of the linking sets of two knots.

    Disjoint sets separate the knots by a single crossing change only under the unproven conjecture that
    monochromatic crossing changes keep linking numbers; ``obstructed`` is therefore always conditional.
    """

    first: LinkingSet
    second: LinkingSet
    common: t.Tuple[Fraction, ...]
    second_twice_colorable: bool
    """Whether the second knot's Fox 3-coloring space has dimension at least 3."""

    @property
    def disjoint(self) -> bool:
        return not self.common

    @property
    def obstructed(self) -> bool:
        """Disjoint sets with a twice 3-colorable second knot; conditional on the conjecture above."""
        return self.disjoint and self.second_twice_colorable
