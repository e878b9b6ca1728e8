"""The rewritten presentation of an irregular three-fold cover."""

import typing as t
from dataclasses import dataclass, field

from ..utils.word_utils import Word
from .group_presentation import GroupPresentation


@dataclass(frozen=True)
class MeridianLift:
    """The two lifts of the meridian of one arc."""

    arc: int
    fixed_sheet: int
    """The sheet fixed by the arc's color; the meridian lifts there with degree one."""

    degree_one: Word
    """The meridian rewritten from ``fixed_sheet``."""

    moved_sheet: int
    """The least sheet moved by the arc's color."""

    degree_two: Word
    """The squared meridian rewritten from ``moved_sheet``."""


@dataclass(frozen=True)
class CoverPresentation:
    """Generators, relators and lifted meridians of the subgroup fixing sheet ``0``.

    Schreier generator ``k`` is the pair ``generators[k] == (sheet, wirtinger_generator)`` that is not an edge of
    the breadth-first coset tree.
    """

    presentation: GroupPresentation
    transversal: t.Tuple[Word, ...]
    """Coset representative of each sheet, a word in the Wirtinger generators."""

    generators: t.Tuple[t.Tuple[int, int], ...]
    meridian_lifts: t.Tuple[MeridianLift, ...]
    longitude_lifts: t.Mapping[int, Word] = field(default_factory=dict)
    """The preferred longitude rewritten from each sheet it was lifted from."""

    sheets: int = 3

    @property
    def generator_count(self) -> int:
        return self.presentation.generator_count

    @property
    def relators(self) -> t.Tuple[Word, ...]:
        return self.presentation.relators
