"""The space of Fox colorings of a diagram modulo a prime."""

import typing as t
from dataclasses import dataclass


@dataclass(frozen=True)
class FoxSpace:
    """Arc labelings ``v`` in ``Z/p`` with ``v(out) ≡ 2·v(over) − v(in)`` at every crossing."""

    p: int
    basis: t.Tuple[t.Tuple[int, ...], ...]
    """Reduced basis vectors, one entry per arc, with entries in ``0..p-1``."""

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def arc_count(self) -> int:
        return len(self.basis[0]) if self.basis else 0

    @property
    def twice_three_colorable(self) -> bool:
        """``True`` when ``p == 3`` and the space has dimension at least 3."""
        return self.p == 3 and self.dimension >= 3

    def combine(self, coefficients: t.Sequence[int], vectors: t.Sequence[t.Sequence[int]]) -> t.Tuple[int, ...]:
        """Return ``Σ c_i v_i`` reduced modulo ``p``."""
        return tuple(
            sum(c * vector[arc] for c, vector in zip(coefficients, vectors)) % self.p for arc in range(self.arc_count)
        )

    def vector(self, coefficients: t.Sequence[int]) -> t.Tuple[int, ...]:
        """Return the combination of the basis with ``coefficients``."""
        return self.combine(coefficients, self.basis)

    def size(self) -> int:
        """The number of Fox colorings, ``p ** dimension``."""
        return self.p**self.dimension
