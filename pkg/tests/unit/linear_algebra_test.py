from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gordian_colors.utils.linear_algebra import LinearAlgebra


def multiply(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


@st.composite
def integer_matrices(draw, max_size: int = 6):
    rows = draw(st.integers(min_value=1, max_value=max_size))
    cols = draw(st.integers(min_value=1, max_value=max_size))
    entries = st.integers(min_value=-9, max_value=9)
    return draw(st.lists(st.lists(entries, min_size=cols, max_size=cols), min_size=rows, max_size=rows))


class TestSmith:
    @pytest.mark.parametrize(
        "matrix, factors, rank",
        [
            ([[1, 0, 0], [0, 1, 0], [0, 0, 1]], (1, 1, 1), 3),
            ([[2, 4], [6, 8]], (2, 4), 2),
            ([[0, 0, 0], [0, 0, 0]], (), 0),
            ([[2, 0], [0, 3]], (1, 6), 2),
            ([[3, 3, 3]], (3,), 1),
        ],
    )
    def test_examples(self, matrix, factors, rank) -> None:
        smith = LinearAlgebra.smith(matrix, len(matrix[0]))
        assert smith.invariant_factors == factors
        assert smith.rank == rank

    def test_free_columns(self) -> None:
        smith = LinearAlgebra.smith([[2, 0, 0]], 3)
        assert smith.free_columns == (1, 2)

    def test_rejects_ragged_rows(self) -> None:
        with pytest.raises(ValueError):
            LinearAlgebra.smith([[1, 2], [3]], 2)

    @given(integer_matrices())
    def test_certificate(self, matrix) -> None:
        smith = LinearAlgebra.smith(matrix, len(matrix[0]))
        product = multiply(multiply(smith.left, matrix), smith.right)
        for i, row in enumerate(product):
            for j, entry in enumerate(row):
                assert entry == (smith.diagonal[i] if i == j else 0)

    @pytest.mark.slow
    @settings(max_examples=500, deadline=None)
    @given(integer_matrices(max_size=12))
    def test_certificate_up_to_twelve(self, matrix) -> None:
        smith = LinearAlgebra.smith(matrix, len(matrix[0]))
        product = multiply(multiply(smith.left, matrix), smith.right)
        assert [product[i][i] for i in range(len(smith.diagonal))] == list(smith.diagonal)
        for a, b in zip(smith.invariant_factors, smith.invariant_factors[1:]):
            assert b % a == 0

    def test_coordinates(self) -> None:
        smith = LinearAlgebra.smith([[1, 1]], 2)
        # the relation row itself lies in the span of the relations: its free coordinate vanishes
        coordinates = smith.coordinates([1, 1])
        assert [coordinates[j] for j in smith.free_columns] == [0]
        assert [smith.coordinates([1, 0])[j] for j in smith.free_columns] != [0]


class TestDivisibilityChain:
    @pytest.mark.parametrize(
        "values, chain",
        [
            ((2, 3), (1, 6)),
            ((4, 2), (2, 4)),
            ((6, 10, 0), (2, 30)),
            ((), ()),
        ],
    )
    def test_chain(self, values, chain) -> None:
        assert LinearAlgebra.divisibility_chain(values) == chain


class TestNullspaceMod:
    def test_single_relation(self) -> None:
        basis = LinearAlgebra.nullspace_mod([[1, 1, 1]], 3, 3)
        assert len(basis) == 2
        for vector in basis:
            assert sum(vector) % 3 == 0
            assert all(0 <= entry < 3 for entry in vector)

    def test_no_relations(self) -> None:
        assert LinearAlgebra.nullspace_mod([], 2, 5) == ((1, 0), (0, 1))

    def test_full_rank(self) -> None:
        assert LinearAlgebra.nullspace_mod([[1, 0], [0, 1]], 2, 3) == ()


class TestProportion:
    def test_multiple(self) -> None:
        assert LinearAlgebra.proportion([4, -2], [2, -1]) == Fraction(2)
        assert LinearAlgebra.proportion([1], [2]) == Fraction(1, 2)

    def test_undefined(self) -> None:
        assert LinearAlgebra.proportion([1, 0], [1, 1]) is None
        assert LinearAlgebra.proportion([1], [0]) is None
        assert LinearAlgebra.proportion([], []) is None
