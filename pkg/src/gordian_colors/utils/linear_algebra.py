"""Exact linear algebra over the integers and the prime fields."""

import logging
import typing as t
from collections import defaultdict
from fractions import Fraction

from sympy import factorint
from sympy.polys.domains import GF, ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import smith_normal_decomp

from ..models.smith_form import SmithForm


log = logging.getLogger(__name__)

Matrix = t.Sequence[t.Sequence[int]]


class LinearAlgebra:
    """Integer Smith normal forms and nullspaces modulo a prime."""

    @staticmethod
    def _domain_matrix(rows: Matrix, cols: int, domain: t.Any) -> DomainMatrix:
        return DomainMatrix([[domain(int(entry)) for entry in row] for row in rows], (len(rows), cols), domain)

    @staticmethod
    def divisibility_chain(values: t.Iterable[int]) -> t.Tuple[int, ...]:
        """Rearrange nonzero integers into invariant factors ``d_1 | d_2 | …`` of the same abelian group."""
        magnitudes = [abs(int(value)) for value in values if value != 0]
        exponents: t.DefaultDict[int, t.List[int]] = defaultdict(list)
        for value in magnitudes:
            for prime, exponent in factorint(value).items():
                exponents[prime].append(exponent)
        chain = [1] * len(magnitudes)
        for prime, powers in exponents.items():
            powers.sort()
            offset = len(chain) - len(powers)
            for i, exponent in enumerate(powers):
                chain[offset + i] *= prime**exponent
        return tuple(chain)

    @classmethod
    def smith(cls, rows: Matrix, cols: int) -> SmithForm:
        """Return the Smith normal form of an integer matrix with ``cols`` columns.

        The certificate ``left · rows · right == diag`` is verified by exact multiplication before returning.
        """
        shape = (len(rows), cols)
        for i, row in enumerate(rows):
            if len(row) != cols:
                raise ValueError(f"Row {i} has {len(row)} entries, expected {cols}")
        matrix = cls._domain_matrix(rows, cols, ZZ)
        diagonal_matrix, left, right = smith_normal_decomp(matrix)

        if 0 not in shape:
            product = (left * matrix * right).to_list()
            if product != diagonal_matrix.to_list():
                raise ArithmeticError(f"Smith normal form certificate failed for a {shape[0]}x{shape[1]} matrix")

        dense = diagonal_matrix.to_list()
        diagonal = tuple(int(dense[i][i]) for i in range(min(shape)))
        log.debug("smith normal form of a %dx%d matrix: rank %d", shape[0], shape[1], sum(1 for d in diagonal if d))
        return SmithForm(
            shape=shape,
            diagonal=diagonal,
            left=tuple(tuple(int(x) for x in row) for row in left.to_list()),
            right=tuple(tuple(int(x) for x in row) for row in right.to_list()),
            invariant_factors=cls.divisibility_chain(diagonal),
        )

    @classmethod
    def nullspace_mod(cls, rows: Matrix, cols: int, p: int) -> t.Tuple[t.Tuple[int, ...], ...]:
        """Return a reduced basis of ``{v : rows · v ≡ 0 (mod p)}`` with entries in ``0..p-1``."""
        if not rows:
            return tuple(tuple(1 if i == j else 0 for j in range(cols)) for i in range(cols))
        matrix = cls._domain_matrix(rows, cols, GF(p))
        reduced, pivots = matrix.rref()
        basis = reduced.nullspace_from_rref(pivots)
        return tuple(tuple(int(x) % p for x in row) for row in basis.to_list())

    @staticmethod
    def proportion(vector: t.Sequence[int], base: t.Sequence[int]) -> t.Optional[Fraction]:
        """Return ``r`` with ``vector == r · base``, or ``None`` if ``base`` is zero or no such ``r`` exists."""
        pivot = next((i for i, entry in enumerate(base) if entry != 0), None)
        if pivot is None:
            return None
        ratio = Fraction(vector[pivot], base[pivot])
        if any(Fraction(v) != ratio * b for v, b in zip(vector, base)):
            return None
        return ratio
