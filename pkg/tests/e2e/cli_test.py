import json
import typing as t
from pathlib import Path

import pytest
from click.testing import CliRunner, Result

from gordian_colors import __version__
from gordian_colors.cli import main
from gordian_colors.coloring import extend_coloring
from gordian_colors.models.braid_word import BraidWord
from gordian_colors.models.class_spec import ClassSpec
from gordian_colors.paths import clasp_section
from gordian_colors.utils.permutation_utils import PermutationUtils
from gordian_colors.utils.serialization import SerializationUtils


FIXTURES = Path(__file__).parent.parent / "fixtures"


def fixture(name: str) -> str:
    return str(FIXTURES / name)


def run(*args: str, stdin: t.Optional[str] = None) -> Result:
    return CliRunner().invoke(main, list(args), input=stdin)


def run_json(*args: str) -> t.Any:
    result = run("--format", "json", *args)
    assert result.exit_code == 0, result.output
    return json.loads(result.output)


class TestCli:
    def test_version(self) -> None:
        result = run("--version")
        assert result.exit_code == 0
        assert __version__ in result.output

    def test_build(self) -> None:
        document = json.loads(run("build", "3_1", "#", "m(3_1)").output)
        assert document["knot"] == "3_1 # m(3_1)"
        assert len(document["crossings"]) == 6
        assert sorted(document["signs"]) == [-1, -1, -1, 1, 1, 1]

    def test_build_unknown_knot(self) -> None:
        result = run("build", "9_1")
        assert result.exit_code == 2
        assert "unknown knot" in result.output

    def test_color(self) -> None:
        result = run("color", "3_1")
        assert result.exit_code == 0
        lines = result.output.splitlines()
        assert lines[0] == "S3: 1 coloring(s)"
        assert sorted(lines[1].split()) == ["(1", "(1", "(2", "2)", "3)", "3)"]

    @pytest.mark.parametrize(
        "args, count",
        [
            (("color", "3_1"), 1),
            (("color", "--all", "--raw", "3_1"), 6),
            (("color", "--all", "3_1 # 3_1"), 4),
            (("color", "--group", "S4", "3_1"), 0),
            (("color", "--group", "A5", "--braid", '{"strands": 2, "word": [1, 1, 1, 1, 1]}'), 1),
        ],
    )
    def test_color_counts(self, args, count) -> None:
        assert run_json(*args)["count"] == count

    def test_color_unknown_group(self) -> None:
        assert run("color", "--group", "X3", "3_1").exit_code == 1

    def test_color_from_stdin(self) -> None:
        result = run("color", "-", stdin='{"strands": 2, "word": [1, 1, 1]}')
        assert result.exit_code == 0
        assert "S3: 1 coloring(s)" in result.output

    @pytest.mark.parametrize(
        "args, line",
        [
            (("pnum", "--pd", fixture("3_1.json")), "p = 3"),
            (("pnum", "--pd", fixture("4_1.json")), "p = 2"),
            (("pnum", "3_1 # 3_1"), "p = 4"),
            (("pnum", "--n-max", "2", "3_1"), "p = 2"),
        ],
    )
    def test_pnum(self, args, line) -> None:
        result = run(*args)
        assert result.exit_code == 0, result.output
        assert line in result.output.splitlines()

    def test_pnum_budget(self) -> None:
        result = run("--format", "json", "pnum", "--node-limit", "1", "3_1")
        assert result.exit_code == 3
        assert '"budget_exceeded": true' in result.output
        assert '"lower_bound": 2' in result.output

    @pytest.mark.parametrize("n, answer", [("3", "yes"), ("4", "no")])
    def test_gn(self, n, answer) -> None:
        result = run("gn", n, "3_1")
        assert result.exit_code == 0
        assert f"in G_{n}: {answer}" in result.output

    @pytest.mark.parametrize(
        "args, dimension",
        [
            (("fox", "--pd", fixture("4_1.json")), 1),
            (("fox", "-p", "5", "--pd", fixture("4_1.json")), 2),
            (("fox", "3_1 # m(3_1)"), 3),
        ],
    )
    def test_fox(self, args, dimension) -> None:
        assert run_json(*args)["dimension"] == dimension

    def test_fox_rejects_composite(self) -> None:
        assert run("fox", "-p", "9", "3_1").exit_code == 1

    def test_rewrite(self) -> None:
        document = run_json("rewrite", fixture("clasp_section.json"), "--start", "0")
        assert document["case"] in ("case1", "case2a", "case2b", "case2c")
        assert document["coloring"]["group"] == "S3"

    def test_rewrite_with_coloring(self, tmp_path) -> None:
        section = clasp_section(BraidWord(3, (2, 2, 1, 1, 1, 2, 2, 2)), 0)
        d = section.diagram
        bottom = [PermutationUtils.from_cycle(3, cycle) for cycle in ((1, 2), (2, 3), (2, 3))]
        col = extend_coloring(d, ClassSpec.symmetric(3), dict(zip(d.bottom_arcs, bottom)))
        path = tmp_path / "coloring.json"
        path.write_text(SerializationUtils.dumps(SerializationUtils.coloring_to_dict(col)), encoding="utf-8")
        result = run("rewrite", "braid 3: 2 2 1 1 1 2 2 2", "--start", "0", "--coloring", str(path))
        assert result.exit_code == 0, result.output
        assert "case: case2a" in result.output
        assert "(unchanged)" in result.output

    def test_rewrite_malformed_section(self) -> None:
        assert run("rewrite", fixture("clasp_section.json"), "--start", "2").exit_code == 1

    def test_homology(self) -> None:
        result = run("homology", "3_1")
        assert result.exit_code == 0
        assert "branched 0, unbranched Z^2" in result.output

    def test_homology_with_coloring_document(self, tmp_path) -> None:
        path = tmp_path / "coloring.json"
        path.write_text(
            '{"group": "S3", "class": "transpositions", "assignment": {"0": [1, 2], "1": [1, 3], "2": [2, 3]}}',
            encoding="utf-8",
        )
        result = run("homology", "3_1", "--coloring", str(path))
        assert result.exit_code == 0, result.output
        assert result.output.splitlines() == ["(1 2) (1 3) (2 3): branched 0, unbranched Z^2"]

    def test_pd_document_listed_clockwise(self, tmp_path) -> None:
        path = tmp_path / "trefoil.json"
        path.write_text(
            '{"crossings": [[0, 3, 1, 4], [2, 5, 3, 0], [4, 1, 5, 2]], "signs": [1, 1, 1], "clasps": []}',
            encoding="utf-8",
        )
        result = run("pnum", "--pd", str(path))
        assert result.exit_code == 0, result.output
        assert "p = 3" in result.output.splitlines()

    @pytest.mark.parametrize(
        "args, line",
        [
            (("lk", "3_1"), "lk = {2}"),
            (("lk", "m(3_1)"), "lk = {-2}"),
            (("lk", "--pd", fixture("3_1.json")), "lk = {2}"),
            (("lk", "3_1 # 3_1"), "lk = {2, 4}"),
            (("lk", fixture("8_20.json")), "lk = {0}"),
            (("lk", "4_1"), "lk = {}"),
        ],
    )
    def test_lk(self, args, line) -> None:
        result = run(*args)
        assert result.exit_code == 0, result.output
        assert result.output.splitlines()[0] == line

    def test_lk_8_21(self) -> None:
        document = run_json("lk", "--pd", fixture("8_21.json"))
        assert document["lk"] == ["4"]
        assert document["undefined"] == 0

    def test_obstruct(self) -> None:
        document = run_json("obstruct", "8_20", "3_1 # 3_1")
        assert document["disjoint"]
        assert document["second_twice_colorable"]
        assert document["obstructed_if_conjecture"]

    def test_obstruct_needs_twice_colorable(self) -> None:
        result = run("obstruct", "3_1", "m(3_1)")
        assert result.exit_code == 0
        assert "no obstruction applies" in result.output

    @pytest.mark.parametrize(
        "args",
        [
            ("lk", "--pd", "missing.json"),
            ("lk", '{"crossings": '),
            ("lk", '{"crossings": [[0, 1, 2, 3]], "signs": [1]}'),
            ("rewrite", "whitehead 1", "--start", "0"),
        ],
    )
    def test_input_errors(self, args) -> None:
        assert run(*args).exit_code == 2

    def test_knot_given_twice(self) -> None:
        assert run("lk", "3_1", "--pd", fixture("3_1.json")).exit_code == 2

    def test_verbose(self) -> None:
        assert run("-vv", "pnum", "3_1").exit_code == 0
