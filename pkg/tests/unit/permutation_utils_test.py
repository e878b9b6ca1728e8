import pytest
from hypothesis import given
from hypothesis import strategies as st

from gordian_colors.enums.class_kind import ClassKind
from gordian_colors.utils.permutation_utils import PermutationUtils


def permutations(n: int) -> st.SearchStrategy:
    return st.permutations(list(range(n))).map(tuple)


class TestPermutationUtils:
    def test_compose_applies_right_factor_first(self) -> None:
        a = PermutationUtils.from_cycle(3, (1, 2))
        b = PermutationUtils.from_cycle(3, (2, 3))
        assert PermutationUtils.compose(a, b) == PermutationUtils.from_cycle(3, (1, 2, 3))

    @given(permutations(5))
    def test_inverse(self, p) -> None:
        assert PermutationUtils.compose(p, PermutationUtils.inverse(p)) == PermutationUtils.identity(5)

    @given(permutations(4), st.integers(min_value=-6, max_value=6))
    def test_power_adds_exponents(self, p, k) -> None:
        assert PermutationUtils.compose(PermutationUtils.power(p, k), p) == PermutationUtils.power(p, k + 1)

    def test_twist_of_transpositions(self) -> None:
        a = PermutationUtils.from_cycle(3, (1, 2))
        b = PermutationUtils.from_cycle(3, (1, 3))
        assert PermutationUtils.twist(a, b, 1) == PermutationUtils.from_cycle(3, (2, 3))
        assert PermutationUtils.twist(a, b, -1) == PermutationUtils.from_cycle(3, (2, 3))

    @given(permutations(4), permutations(4), st.sampled_from([1, -1]))
    def test_untwist_inverts_twist(self, over, under, sign) -> None:
        out = PermutationUtils.twist(over, under, sign)
        assert PermutationUtils.untwist(over, out, sign) == under

    @pytest.mark.parametrize(
        "points, cycles",
        [
            ((1, 2), ((1, 2),)),
            ((3, 1, 2), ((1, 2, 3),)),
            ((2, 4), ((2, 4),)),
        ],
    )
    def test_to_cycles(self, points, cycles) -> None:
        assert PermutationUtils.to_cycles(PermutationUtils.from_cycle(4, points)) == cycles

    def test_from_cycle_rejects_repeated_points(self) -> None:
        with pytest.raises(ValueError):
            PermutationUtils.from_cycle(3, (1, 1))

    def test_support_and_commute(self) -> None:
        a = PermutationUtils.from_cycle(4, (1, 2))
        b = PermutationUtils.from_cycle(4, (3, 4))
        assert PermutationUtils.support(a) == frozenset({0, 1})
        assert PermutationUtils.commute(a, b)
        assert not PermutationUtils.commute(a, PermutationUtils.from_cycle(4, (2, 3)))

    def test_parity(self) -> None:
        assert PermutationUtils.parity(PermutationUtils.from_cycle(4, (1, 2))) == 1
        assert PermutationUtils.parity(PermutationUtils.from_cycle(4, (1, 2, 3))) == 0

    @pytest.mark.parametrize(
        "n, kind, size",
        [
            (3, ClassKind.TRANSPOSITIONS, 3),
            (5, ClassKind.TRANSPOSITIONS, 10),
            (4, ClassKind.THREE_CYCLES, 8),
            (5, ClassKind.THREE_CYCLES, 20),
        ],
    )
    def test_class_elements(self, n, kind, size) -> None:
        elements = PermutationUtils.class_elements(n, kind)
        assert len(elements) == len(set(elements)) == size
        assert elements[0] == PermutationUtils.from_cycle(n, (1, 2) if kind is ClassKind.TRANSPOSITIONS else (1, 2, 3))

    def test_transposition_graph(self) -> None:
        colors = [PermutationUtils.from_cycle(4, (1, 2)), PermutationUtils.from_cycle(4, (3, 4))]
        graph = PermutationUtils.transposition_graph(colors, 4)
        assert sorted(graph.nodes) == [1, 2, 3, 4]
        assert graph.number_of_edges() == 2
        with pytest.raises(ValueError):
            PermutationUtils.transposition_graph([PermutationUtils.from_cycle(4, (1, 2, 3))], 4)
