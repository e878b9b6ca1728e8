"""A finitely generated abelian group."""

import typing as t
from dataclasses import dataclass


@dataclass(frozen=True)
class HomologyDecomposition:
    """``Z^free_rank ⊕ Z/d_1 ⊕ … ⊕ Z/d_k`` with ``1 < d_1 | d_2 | … | d_k``."""

    free_rank: int
    invariant_factors: t.Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.free_rank < 0:
            raise ValueError(f"free_rank must be non-negative, got {self.free_rank}")
        for a, b in zip(self.invariant_factors, self.invariant_factors[1:]):
            if b % a:
                raise ValueError(f"Invariant factors {self.invariant_factors} do not form a divisibility chain")
        if any(d <= 1 for d in self.invariant_factors):
            raise ValueError(f"Invariant factors must exceed 1, got {self.invariant_factors}")

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.invariant_factors

    @property
    def torsion_order(self) -> int:
        order = 1
        for d in self.invariant_factors:
            order *= d
        return order

    def __str__(self) -> str:
        parts = [f"Z/{d}" for d in self.invariant_factors]
        if self.free_rank:
            parts.insert(0, "Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        return " + ".join(parts) or "0"
