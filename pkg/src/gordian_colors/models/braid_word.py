"""Braid words: the source of most diagrams in this package."""

import typing as t
from dataclasses import dataclass

from ..errors import DiagramError
from ..utils.permutation_utils import Perm, PermutationUtils


@dataclass(frozen=True)
class BraidWord:
    """A word in the Artin generators of the braid group ``B_n``.

    Letter ``i`` stands for ``σ_|i|``; its sign is the sign of the crossing.
    """

    strands: int
    """The number of strands ``n``."""

    letters: t.Tuple[int, ...] = ()
    """Nonzero integers with ``1 <= |i| <= n - 1``."""

    def __post_init__(self) -> None:
        """Validate the word and normalise the letters to a tuple."""
        object.__setattr__(self, "letters", tuple(int(letter) for letter in self.letters))
        if self.strands < 1:
            raise DiagramError(f"A braid needs at least one strand, got {self.strands}")
        for letter in self.letters:
            if letter == 0 or abs(letter) >= self.strands:
                raise DiagramError(f"Letter {letter} is not a generator of B_{self.strands}")

    def __len__(self) -> int:
        return len(self.letters)

    def permutation(self) -> Perm:
        """Return the permutation taking a bottom position to the top position of its strand."""
        positions = list(range(self.strands))
        for letter in self.letters:
            i = abs(letter) - 1
            positions[i], positions[i + 1] = positions[i + 1], positions[i]
        # positions[top] = bottom strand; invert to read bottom -> top
        return PermutationUtils.inverse(tuple(positions))

    def is_knot(self) -> bool:
        """Return ``True`` when the closure has a single component."""
        perm = self.permutation()
        point, steps = perm[0], 1
        while point != 0:
            point, steps = perm[point], steps + 1
        return steps == self.strands

    def mirror(self) -> "BraidWord":
        """Return the word with every crossing sign reversed."""
        return BraidWord(self.strands, tuple(-letter for letter in self.letters))

    def __add__(self, other: "BraidWord") -> "BraidWord":
        """Concatenate two words, widening to the larger strand count."""
        return BraidWord(max(self.strands, other.strands), self.letters + other.letters)

    @property
    def writhe(self) -> int:
        """Return the sum of the crossing signs."""
        return sum(1 if letter > 0 else -1 for letter in self.letters)
