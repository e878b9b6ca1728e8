import json
from fractions import Fraction

import pytest

from gordian_colors.coloring import first_coloring
from gordian_colors.diagram import (
    STANDARD_BRAIDS,
    braid_closure,
    connected_sum,
    mirror,
    pretzel_diagram,
    standard_knot,
    trefoil_sum_braid,
)
from gordian_colors.errors import SchemaError
from gordian_colors.models.braid_word import BraidWord
from gordian_colors.models.class_spec import ClassSpec
from gordian_colors.models.linking_set import LinkingSet
from gordian_colors.paths import clasp_section
from gordian_colors.utils.knot_expression import KnotExpression
from gordian_colors.utils.permutation_utils import PermutationUtils
from gordian_colors.utils.serialization import SerializationUtils


TREFOIL = standard_knot("3_1")


class TestDocuments:
    def test_dumps_is_stable(self) -> None:
        text = SerializationUtils.dumps({"b": 1, "a": [1, 2]})
        assert text == '{\n  "a": [\n    1,\n    2\n  ],\n  "b": 1\n}\n'

    def test_loads(self) -> None:
        assert SerializationUtils.loads('{"strands": 2}') == {"strands": 2}

    @pytest.mark.parametrize("text", ["{", "[1, 2]", "3"])
    def test_loads_rejects(self, text) -> None:
        with pytest.raises(SchemaError) as info:
            SerializationUtils.loads(text, source="knot.json")
        assert info.value.field == "knot.json"

    @pytest.mark.parametrize("value, text", [(Fraction(2), "2"), (Fraction(-1, 2), "-1/2"), (Fraction(0), "0")])
    def test_rational(self, value, text) -> None:
        assert SerializationUtils.rational(value) == text


class TestDiagramDocuments:
    @pytest.mark.parametrize(
        "d",
        [TREFOIL, standard_knot("8_21"), clasp_section(BraidWord(3, (2, 2, 1, 1, 1, 2, 2, 2)), 0).diagram],
    )
    def test_through_json(self, d) -> None:
        document = json.loads(SerializationUtils.dumps(SerializationUtils.diagram_to_dict(d)))
        restored = SerializationUtils.diagram_from_dict(document)
        assert restored == d
        assert restored.bottom_arcs == d.bottom_arcs

    def test_braid_document(self) -> None:
        d = SerializationUtils.diagram_from_dict({"strands": 3, "word": [1, -2, 1, -2]})
        assert d == standard_knot("4_1")

    def test_writes_crossings(self) -> None:
        document = SerializationUtils.diagram_to_dict(TREFOIL)
        assert sorted(document) == ["bottom", "clasps", "crossings", "signs"]
        assert len(document["crossings"]) == 3
        assert document["clasps"] == []

    def test_reads_clockwise_table(self) -> None:
        d = SerializationUtils.diagram_from_dict(
            {"crossings": [[0, 3, 1, 4], [2, 5, 3, 0], [4, 1, 5, 2]], "signs": [1, 1, 1], "clasps": []}
        )
        assert len(d.crossings) == 3
        assert d.writhe == 3
        assert d.arc_count == 3
        assert [(c.over_in, c.over_out) for c in d.crossings] == [(3, 4), (5, 0), (1, 2)]

    @pytest.mark.parametrize(
        "document, field",
        [
            ({"crossings": [[0, 1, 1, 0]]}, "signs"),
            ({"crossings": [[0, 1, 2, 3]], "signs": [1]}, "crossings"),
            ({"crossings": [3], "signs": [1]}, "crossings"),
            ({"crossings": [], "signs": [], "clasps": [[0]]}, "clasps"),
            ({"pd": [[0, 4, 1, 3], [2, 0, 3, 5], [4, 2, 5, 1]], "signs": [1, 1, 1]}, "strands"),
            ({"strands": True, "word": []}, "strands"),
            ({"strands": 2}, "word"),
            ({"strands": 2, "word": [1, "x"]}, "word"),
            ({"strands": 2, "word": [3]}, "word"),
        ],
    )
    def test_rejects(self, document, field) -> None:
        with pytest.raises(SchemaError) as info:
            SerializationUtils.diagram_from_dict(document)
        assert info.value.field == field


class TestColoringDocuments:
    def test_read(self) -> None:
        col = SerializationUtils.coloring_from_dict(
            {"group": "S3", "class": "transpositions", "assignment": {"0": [1, 2], "1": [1, 3], "2": [2, 3]}}
        )
        assert col.spec.name == "S3"
        assert col[1] == PermutationUtils.from_cycle(3, (1, 3))

    def test_read_without_class(self) -> None:
        col = SerializationUtils.coloring_from_dict({"group": "S5", "assignment": {"1": [4, 5], "0": [1, 2]}})
        assert col.cycles() == (((1, 2),), ((4, 5),))

    def test_write(self) -> None:
        col = SerializationUtils.coloring_from_dict({"group": "A4", "assignment": {"0": [1, 2, 3], "1": [2, 3, 4]}})
        assert SerializationUtils.coloring_to_dict(col) == {
            "group": "A4",
            "class": "three_cycles",
            "assignment": {"0": [1, 2, 3], "1": [2, 3, 4]},
        }

    def test_through_json(self) -> None:
        col = first_coloring(TREFOIL, ClassSpec.symmetric(3))
        assert col is not None
        document = json.loads(SerializationUtils.dumps(SerializationUtils.coloring_to_dict(col)))
        assert SerializationUtils.coloring_from_dict(document) == col

    @pytest.mark.parametrize(
        "document, field",
        [
            ({"assignment": {}}, "group"),
            ({"group": "Q3", "assignment": {}}, "group"),
            ({"group": "S3", "class": "three_cycles", "assignment": {}}, "group"),
            ({"group": "S3"}, "assignment"),
            ({"group": "S3", "assignment": [[1, 2]]}, "assignment"),
            ({"group": "S3", "assignment": {"a": [1, 2]}}, "assignment"),
            ({"group": "S3", "assignment": {"0": [1, 2], "2": [1, 3]}}, "assignment"),
            ({"group": "S3", "assignment": {"0": [1, 7]}}, "assignment.0"),
            ({"group": "S3", "assignment": {"0": [1, 2], "1": "(12)"}}, "assignment.1"),
            ({"group": "S3", "assignment": {"0": [1, 2, 3]}}, "assignment"),
        ],
    )
    def test_rejects(self, document, field) -> None:
        with pytest.raises(SchemaError) as info:
            SerializationUtils.coloring_from_dict(document)
        assert info.value.field == field


class TestReports:
    def test_linking(self) -> None:
        linking = LinkingSet.from_results([Fraction(-2), Fraction(0), Fraction(0), Fraction(1, 2), None])
        assert SerializationUtils.linking_to_dict(linking, "4_1") == {
            "knot": "4_1",
            "lk": ["-2", "0", "1/2"],
            "orbits": {"-2": 1, "0": 2, "1/2": 1},
            "undefined": 1,
        }


class TestKnotExpression:
    @pytest.mark.parametrize(
        "text, expected",
        [
            ("3_1", TREFOIL),
            (" 4_1 ", standard_knot("4_1")),
            ("3_1 # 3_1", connected_sum(TREFOIL, TREFOIL)),
            ("3_1#m(3_1)", connected_sum(TREFOIL, mirror(TREFOIL))),
            ("m(3_1 # 4_1)", mirror(connected_sum(TREFOIL, standard_knot("4_1")))),
            ("(3_1)", TREFOIL),
            ("trefoil-sum 2", braid_closure(trefoil_sum_braid(2))),
            ("braid 3: 1 -2 1 -2", standard_knot("4_1")),
            ("braid 2: 1, 1, 1", TREFOIL),
            ("pretzel 3 3 3", pretzel_diagram(3, 3, 3)),
        ],
    )
    def test_parse(self, text, expected) -> None:
        assert KnotExpression.parse(text) == expected

    def test_whitehead(self) -> None:
        assert len(KnotExpression.parse("whitehead 1").crossings) == 24

    def test_split(self) -> None:
        assert KnotExpression.split("3_1 # m(3_1 # 4_1) # (5_1)") == ["3_1", "m(3_1 # 4_1)", "(5_1)"]

    @pytest.mark.parametrize(
        "text, expected",
        [
            ("4_1", STANDARD_BRAIDS["4_1"]),
            ("trefoil-sum 2", trefoil_sum_braid(2)),
            ("braid 2: 1 1 1", BraidWord(2, (1, 1, 1))),
            ("braid 1:", BraidWord(1, ())),
            ("whitehead 1", None),
            ("3_1 # 3_1", None),
        ],
    )
    def test_braid(self, text, expected) -> None:
        assert KnotExpression.braid(text) == expected

    @pytest.mark.parametrize("text", ["9_1", "3_1 ##", "(3_1", "3_1 # ", "unknot", "braid 2: 3", ""])
    def test_rejects(self, text) -> None:
        with pytest.raises(SchemaError) as info:
            KnotExpression.parse(text)
        assert info.value.field == "knot"
