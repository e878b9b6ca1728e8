"""Finite group presentations."""

import typing as t
from dataclasses import dataclass, field

from ..errors import InvalidDiagram
from ..utils.word_utils import Word, WordUtils


@dataclass(frozen=True)
class GroupPresentation:
    """Generators ``x_0 … x_{G-1}`` and relator words.

    Used both for Wirtinger presentations of knot groups and for the rewritten presentations of covers.
    """

    generator_count: int
    relators: t.Tuple[Word, ...] = ()
    meridian_flags: t.FrozenSet[int] = field(default_factory=frozenset)
    """Generators that are meridians."""

    labels: t.Optional[t.Tuple[str, ...]] = None
    """Optional display name per generator."""

    def __post_init__(self) -> None:
        object.__setattr__(self, "relators", tuple(tuple(relator) for relator in self.relators))
        object.__setattr__(self, "meridian_flags", frozenset(self.meridian_flags))
        for i, relator in enumerate(self.relators):
            for letter in relator:
                if letter == 0 or abs(letter) > self.generator_count:
                    raise InvalidDiagram(f"Relator {i} uses letter {letter} outside 1..{self.generator_count}")
        for generator in self.meridian_flags:
            if not 0 <= generator < self.generator_count:
                raise InvalidDiagram(f"Meridian flag {generator} is not a generator")
        if self.labels is not None and len(self.labels) != self.generator_count:
            raise InvalidDiagram(f"{len(self.labels)} labels for {self.generator_count} generators")

    def relation_matrix(self) -> t.List[t.List[int]]:
        """Return the abelianised relators, one row each."""
        return [WordUtils.abelianize(relator, self.generator_count) for relator in self.relators]

    def to_text(self) -> str:
        """Render as ``< x0, x1 | r0, r1 >``."""
        names = self.labels or tuple(f"x{i}" for i in range(self.generator_count))
        relators = ", ".join(WordUtils.to_text(relator, names) for relator in self.relators)
        return f"< {', '.join(names)} | {relators} >"
