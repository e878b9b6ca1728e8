"""Smith normal form of an integer matrix together with its certificates."""

import typing as t
from dataclasses import dataclass


@dataclass(frozen=True)
class SmithForm:
    """``left · matrix · right == diag(diagonal)`` with unimodular ``left`` and ``right``.

    The product has been checked by exact multiplication when an instance is returned by
    :meth:`gordian_colors.utils.linear_algebra.LinearAlgebra.smith`.
    """

    shape: t.Tuple[int, int]
    """Rows and columns of the decomposed matrix."""

    diagonal: t.Tuple[int, ...]
    """The ``min(rows, cols)`` diagonal entries of the normal form."""

    left: t.Tuple[t.Tuple[int, ...], ...]
    """The row transform, ``rows × rows``."""

    right: t.Tuple[t.Tuple[int, ...], ...]
    """The column transform, ``cols × cols``."""

    invariant_factors: t.Tuple[int, ...] = ()
    """The nonzero diagonal as a divisibility chain ``d_1 | d_2 | …``; trivial factors ``1`` included."""

    @property
    def rank(self) -> int:
        return sum(1 for entry in self.diagonal if entry != 0)

    @property
    def free_columns(self) -> t.Tuple[int, ...]:
        """Coordinates of the cokernel (in the basis given by ``right``) that generate a free summand."""
        rows, cols = self.shape
        return tuple(j for j in range(cols) if j >= len(self.diagonal) or self.diagonal[j] == 0)

    def coordinates(self, vector: t.Sequence[int]) -> t.Tuple[int, ...]:
        """Express a row vector in the basis in which the relations are diagonal (``vector · right``)."""
        cols = self.shape[1]
        return tuple(sum(vector[i] * self.right[i][j] for i in range(cols)) for j in range(cols))
