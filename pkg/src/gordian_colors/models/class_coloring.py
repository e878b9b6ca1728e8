"""Colorings of diagram arcs by a conjugacy class."""

import typing as t
from dataclasses import dataclass

from ..errors import SpecMismatch
from ..utils.permutation_utils import Perm, PermutationUtils
from .class_spec import ClassSpec


@dataclass(frozen=True)
class ClassColoring:
    """An assignment of class elements to arcs; ``assignment[a]`` colors arc ``a``."""

    spec: ClassSpec
    assignment: t.Tuple[Perm, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "assignment", tuple(tuple(color) for color in self.assignment))
        for arc, color in enumerate(self.assignment):
            if not self.spec.contains(color):
                raise SpecMismatch(
                    f"Arc {arc} is colored {PermutationUtils.to_cycles(color) or color}, "
                    f"which is not among the {self.spec.kind.class_name} of {self.spec.name}"
                )

    def __len__(self) -> int:
        return len(self.assignment)

    def __getitem__(self, arc: int) -> Perm:
        return self.assignment[arc]

    @property
    def colors(self) -> t.FrozenSet[Perm]:
        """The distinct colors used."""
        return frozenset(self.assignment)

    def conjugated(self, g: Perm) -> "ClassColoring":
        """Return the coloring ``a ↦ g ∘ c(a) ∘ g⁻¹``."""
        return ClassColoring(self.spec, tuple(PermutationUtils.conjugate(g, color) for color in self.assignment))

    def canonical(self) -> "ClassColoring":
        """Return the least conjugate under the ambient group, comparing class indices arc by arc."""
        key = self.spec.canonical_key(self.assignment)
        return ClassColoring(self.spec, tuple(self.spec.elements[i] for i in key))

    def sort_key(self) -> t.Tuple[int, ...]:
        return tuple(self.spec.index(color) for color in self.assignment)

    def cycles(self) -> t.Tuple[t.Tuple[t.Tuple[int, ...], ...], ...]:
        """Every arc color in 1-based cycle notation."""
        return tuple(PermutationUtils.to_cycles(color) for color in self.assignment)
