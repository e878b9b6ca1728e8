import typing as t

import pytest

from gordian_colors.coloring import check_coloring, extend_coloring, is_surjective
from gordian_colors.diagram import braid_closure
from gordian_colors.enums.case_label import CaseLabel
from gordian_colors.errors import BudgetExceeded, MalformedSection, SynthesisExhausted
from gordian_colors.models.braid_word import BraidWord
from gordian_colors.models.class_coloring import ClassColoring
from gordian_colors.models.class_spec import ClassSpec
from gordian_colors.models.solver_options import SynthesisOptions
from gordian_colors.paths import (
    clasp_section,
    classify_clasp_case,
    classify_colors,
    is_one_crossing_adjacent,
    neighbor_diagrams,
    synthesize_k1_tilde,
    transport,
)
from gordian_colors.utils.permutation_utils import PermutationUtils


K1_BRAID = BraidWord(3, (2, 2, 1, 1, 1, 2, 2, 2))
S3 = ClassSpec.symmetric(3)


def t3(a: int, b: int) -> t.Tuple[int, ...]:
    return PermutationUtils.from_cycle(3, (a, b))


def t5(a: int, b: int) -> t.Tuple[int, ...]:
    return PermutationUtils.from_cycle(5, (a, b))


BOTTOM_COLORS = {
    CaseLabel.CASE1: (t3(1, 2), t3(1, 2), t3(1, 3)),
    CaseLabel.CASE2A: (t3(1, 2), t3(2, 3), t3(2, 3)),
    CaseLabel.CASE2B: (t3(1, 2), t3(2, 3), t3(1, 2)),
    CaseLabel.CASE2C: (t3(1, 2), t3(2, 3), t3(1, 3)),
}


def section_coloring(label: CaseLabel) -> ClassColoring:
    d = clasp_section(K1_BRAID, 0).diagram
    return extend_coloring(d, S3, dict(zip(d.bottom_arcs, BOTTOM_COLORS[label])))


class TestClaspSection:
    def test_structure(self) -> None:
        section = clasp_section(K1_BRAID, 0)
        assert section.position == 1
        assert section.clasp_a == (0, 1)
        assert section.clasp_b == (2, 3)
        assert len(set(section.section_arcs)) == 5
        assert section.diagram.clasp_marks == frozenset({(0, 1), (2, 3)})

    def test_neighbors_differ_from_k1_by_one_crossing_change(self) -> None:
        section = clasp_section(K1_BRAID, 0)
        k0, k2 = neighbor_diagrams(section)
        k1 = braid_closure(K1_BRAID)
        assert is_one_crossing_adjacent(k1, k0)
        assert is_one_crossing_adjacent(k1, k2)
        assert not is_one_crossing_adjacent(k0, k2)

    @pytest.mark.parametrize("start", [-1, 5, 2])
    def test_rejects_other_words(self, start) -> None:
        with pytest.raises(MalformedSection):
            clasp_section(K1_BRAID, start)


class TestTransport:
    def test_positive_and_negative_letters(self) -> None:
        a, b = t3(1, 2), t3(2, 3)
        assert transport([1], [a, b]) == [t3(1, 3), a]
        assert transport([-1], [a, b]) == [b, t3(1, 3)]
        assert transport([1, -1], [a, b]) == [a, b]

    @pytest.mark.parametrize("label", list(CaseLabel))
    def test_section_colors_close_up(self, label) -> None:
        word = (2, -2, 1, 1, 1, 2, 2, 2)
        bottom = list(BOTTOM_COLORS[label])
        assert transport(word, bottom) == bottom


class TestClassifyColors:
    @pytest.mark.parametrize(
        "colors, expected",
        [
            ((t5(1, 2), t5(1, 2), t5(3, 4), t5(3, 4), t5(1, 5)), CaseLabel.CASE1),
            ((t5(1, 2), t5(1, 3), t5(1, 2), t5(2, 3), t5(1, 2)), CaseLabel.CASE2A),
            ((t5(1, 2), t5(1, 3), t5(1, 2), t5(2, 3), t5(4, 5)), CaseLabel.CASE2A),
            ((t5(1, 2), t5(1, 3), t5(1, 2), t5(2, 3), t5(1, 3)), CaseLabel.CASE2B),
            ((t5(1, 2), t5(1, 3), t5(1, 2), t5(2, 3), t5(2, 3)), CaseLabel.CASE2C),
        ],
    )
    def test_labels(self, colors, expected) -> None:
        assert classify_colors(*colors) is expected

    @pytest.mark.parametrize(
        "colors",
        [
            (t5(1, 2), t5(1, 2), t5(2, 3), t5(2, 3), t5(1, 2)),
            (t5(1, 2), t5(1, 2), t5(3, 4), t5(3, 5), t5(1, 2)),
            (t5(1, 2), t5(3, 4), t5(1, 2), t5(2, 3), t5(1, 2)),
            (t5(1, 2), t5(1, 3), t5(1, 3), t5(2, 3), t5(1, 2)),
            (t5(1, 2), t5(1, 3), t5(1, 2), t5(1, 3), t5(1, 2)),
        ],
    )
    def test_contradictions(self, colors) -> None:
        with pytest.raises(MalformedSection):
            classify_colors(*colors)


class TestClassifyClaspCase:
    @pytest.mark.parametrize("label", list(CaseLabel))
    def test_fixtures(self, label) -> None:
        section = clasp_section(K1_BRAID, 0)
        col = section_coloring(label)
        assert check_coloring(section.diagram, col)
        assert classify_clasp_case(section, col) is label

    def test_case2_shares_b1_and_b3(self) -> None:
        section = clasp_section(K1_BRAID, 0)
        for label in (CaseLabel.CASE2A, CaseLabel.CASE2B, CaseLabel.CASE2C):
            col = section_coloring(label)
            b1, _, b3, _, _ = (col[arc] for arc in section.section_arcs)
            assert b1 == b3

    def test_invalid_coloring(self) -> None:
        section = clasp_section(K1_BRAID, 0)
        colors = [t3(1, 2)] * section.diagram.arc_count
        colors[0] = t3(1, 3)
        with pytest.raises(MalformedSection):
            classify_clasp_case(section, ClassColoring(S3, tuple(colors)))


class TestSynthesizeK1Tilde:
    @pytest.mark.parametrize("label", list(CaseLabel))
    def test_contracts(self, label) -> None:
        section = clasp_section(K1_BRAID, 0)
        result = synthesize_k1_tilde(section, section_coloring(label))
        assert result.label is label
        assert result.braid.letters[-4:] == K1_BRAID.letters[4:]
        assert check_coloring(result.diagram, result.coloring)
        assert is_surjective(result.coloring.colors, S3)
        assert is_one_crossing_adjacent(result.diagram, result.k0_witness)
        assert is_one_crossing_adjacent(result.diagram, result.k2_witness)

    def test_case2a_keeps_k1(self) -> None:
        section = clasp_section(K1_BRAID, 0)
        result = synthesize_k1_tilde(section, section_coloring(CaseLabel.CASE2A))
        assert result.identity
        assert result.braid == K1_BRAID

    @pytest.mark.parametrize("label", [CaseLabel.CASE1, CaseLabel.CASE2B, CaseLabel.CASE2C])
    def test_other_cases_replace_the_section(self, label) -> None:
        section = clasp_section(K1_BRAID, 0)
        assert not synthesize_k1_tilde(section, section_coloring(label)).identity

    def test_exhausted(self) -> None:
        section = clasp_section(K1_BRAID, 0)
        with pytest.raises(SynthesisExhausted):
            synthesize_k1_tilde(section, section_coloring(CaseLabel.CASE2B), SynthesisOptions(budget=2))

    def test_node_limit(self) -> None:
        section = clasp_section(K1_BRAID, 0)
        with pytest.raises(BudgetExceeded):
            synthesize_k1_tilde(section, section_coloring(CaseLabel.CASE2B), SynthesisOptions(node_limit=1))

    def test_options_validation(self) -> None:
        with pytest.raises(ValueError):
            SynthesisOptions(budget=-1)
        with pytest.raises(ValueError):
            SynthesisOptions(node_limit=0)


COMMUTING_BRAID = BraidWord(4, (2, 2, 1, 1, 2, 1, 1, 1, 2, 2, 3))
S4 = ClassSpec.symmetric(4)


def t4(a: int, b: int) -> t.Tuple[int, ...]:
    return PermutationUtils.from_cycle(4, (a, b))


def commuting_section_coloring() -> ClassColoring:
    d = clasp_section(COMMUTING_BRAID, 0).diagram
    bottom = (t4(1, 2), t4(3, 4), t4(1, 3), t4(1, 3))
    return extend_coloring(d, S4, dict(zip(d.bottom_arcs, bottom)))


class TestCommutingClaspColors:
    def test_section_colors(self) -> None:
        section = clasp_section(COMMUTING_BRAID, 0)
        col = commuting_section_coloring()
        assert check_coloring(section.diagram, col)
        assert is_surjective(col.colors, S4)
        assert tuple(col[arc] for arc in section.section_arcs) == (t4(1, 2), t4(1, 2), t4(3, 4), t4(3, 4), t4(1, 3))
        assert classify_clasp_case(section, col) is CaseLabel.CASE1

    def test_contracts(self) -> None:
        section = clasp_section(COMMUTING_BRAID, 0)
        result = synthesize_k1_tilde(section, commuting_section_coloring())
        assert result.label is CaseLabel.CASE1
        assert not result.identity
        assert result.braid.letters[-7:] == COMMUTING_BRAID.letters[4:]
        assert check_coloring(result.diagram, result.coloring)
        assert is_surjective(result.coloring.colors, S4)
        assert is_one_crossing_adjacent(result.diagram, result.k0_witness)
        assert is_one_crossing_adjacent(result.diagram, result.k2_witness)
