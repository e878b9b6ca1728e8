"""The ``gordian-colors`` command line."""

import json
import logging
import os
import sys
import typing as t

import click

from . import __version__
from .coloring import fox_coloring_space, gn_member, permutation_number, solve_class_colorings
from .covers import branched_homology, linking_set, lk_obstruction, reidemeister_schreier, unbranched_homology
from .diagram import wirtinger
from .enums.output_format import OutputFormat
from .errors import BudgetExceeded, GordianColorsError, SchemaError
from .models.braid_word import BraidWord
from .models.class_coloring import ClassColoring
from .models.class_spec import ClassSpec
from .models.planar_diagram import PlanarDiagram
from .models.solver_options import SolverOptions, SynthesisOptions
from .paths import clasp_section, synthesize_k1_tilde
from .utils.knot_expression import KnotExpression
from .utils.permutation_utils import PermutationUtils
from .utils.serialization import Document, SerializationUtils


log = logging.getLogger(__name__)

EXIT_DOMAIN_ERROR = 1
EXIT_INPUT_ERROR = 2
EXIT_BUDGET_EXCEEDED = 3


class _ExitCodeGroup(click.Group):
    """Map library errors to the documented exit codes."""

    def invoke(self, ctx: click.Context) -> t.Any:
        try:
            return super().invoke(ctx)
        except BudgetExceeded as e:
            click.echo(f"error: {e}", err=True)
            ctx.exit(EXIT_BUDGET_EXCEEDED)
        except (SchemaError, OSError, json.JSONDecodeError) as e:
            click.echo(f"error: {e}", err=True)
            ctx.exit(EXIT_INPUT_ERROR)
        except (GordianColorsError, ValueError) as e:
            click.echo(f"error: {e}", err=True)
            ctx.exit(EXIT_DOMAIN_ERROR)


# ---- input ------------------------------------------------------------------------------------------------


def _read(path: str) -> str:
    if path == "-":
        return click.get_text_stream("stdin").read()
    with open(path, encoding="utf-8") as f:
        return f.read()


def _document(source: str) -> t.Optional[Document]:
    """A JSON document given inline, as a path, or as ``-``; ``None`` when ``source`` is a knot expression."""
    if source.lstrip().startswith("{"):
        return SerializationUtils.loads(source, "argument")
    if source == "-" or source.endswith(".json") or os.path.isfile(source):
        return SerializationUtils.loads(_read(source), source)
    return None


def _diagram(source: t.Optional[str], pd_path: t.Optional[str], braid_text: t.Optional[str]) -> PlanarDiagram:
    given = [value for value in (source, pd_path, braid_text) if value is not None]
    if len(given) > 1:
        raise click.UsageError("give the knot once: as an argument, with --pd, or with --braid")
    if pd_path is not None:
        return SerializationUtils.diagram_from_dict(SerializationUtils.loads(_read(pd_path), pd_path))
    text = given[0] if given else "-"
    document = _document(text)
    if document is None:
        return KnotExpression.parse(text)
    return SerializationUtils.diagram_from_dict(document)


def _braid(source: str) -> BraidWord:
    document = _document(source)
    if document is not None:
        return SerializationUtils.braid_from_dict(document)
    word = KnotExpression.braid(source)
    if word is None:
        raise SchemaError(f"{source!r} is not a braid", field="braid")
    return word


def _diagram_input(f: t.Callable) -> t.Callable:
    f = click.option("--braid", "braid_text", help='Braid JSON such as {"strands": 2, "word": [1, 1, 1]}.')(f)
    f = click.option("--pd", "pd_path", type=click.Path(dir_okay=False, allow_dash=True), help="PD JSON file.")(f)
    return click.argument("source", required=False)(f)


def _node_limit(f: t.Callable) -> t.Callable:
    return click.option(
        "--node-limit", type=click.IntRange(min=1), default=None, help="Stop searching after this many nodes."
    )(f)


# ---- output -----------------------------------------------------------------------------------------------


def _emit(ctx: click.Context, document: t.Any, lines: t.Iterable[str]) -> None:
    if ctx.obj["format"] is OutputFormat.JSON:
        click.echo(SerializationUtils.dumps(document), nl=False)
    else:
        for line in lines:
            click.echo(line)


def _color_text(c: ClassColoring) -> str:
    cycles = (PermutationUtils.to_cycles(color) for color in c.assignment)
    return " ".join("".join(f"({' '.join(map(str, cycle))})" for cycle in color) for color in cycles)


def _values_text(values: t.Iterable[t.Any]) -> str:
    return "{" + ", ".join(SerializationUtils.rational(v) for v in values) + "}"


# ---- commands ---------------------------------------------------------------------------------------------


@click.group(cls=_ExitCodeGroup)
@click.version_option(__version__)
@click.option(
    "--format",
    "output_format",
    type=click.Choice([f.value for f in OutputFormat]),
    default=OutputFormat.TEXT.value,
    show_default=True,
)
@click.option("-v", "--verbose", count=True, help="Log more (repeat for debug output).")
@click.pass_context
def main(ctx: click.Context, output_format: str, verbose: int) -> None:
    """Knot colorings by permutations, dihedral covers and the linking numbers of their lifts."""
    level = logging.WARNING - 10 * min(verbose, 2)
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    logging.getLogger("gordian_colors").setLevel(level)
    ctx.obj = {"format": OutputFormat(output_format)}


@main.command()
@click.argument("expression", nargs=-1, required=True)
def build(expression: t.Tuple[str, ...]) -> None:
    """Build the diagram named by a knot expression and print it as PD JSON."""
    text = " ".join(expression)
    document = SerializationUtils.diagram_to_dict(KnotExpression.parse(text))
    document["knot"] = text
    click.echo(SerializationUtils.dumps(document), nl=False)


@main.command()
@_diagram_input
@click.option("--group", default="S3", show_default=True, help="Target group: Sn or An.")
@click.option("--all", "find_all", is_flag=True, help="List every coloring instead of the first.")
@click.option("--raw", is_flag=True, help="Do not identify colorings conjugate in the group.")
@_node_limit
@click.pass_context
def color(
    ctx: click.Context,
    source: t.Optional[str],
    pd_path: t.Optional[str],
    braid_text: t.Optional[str],
    group: str,
    find_all: bool,
    raw: bool,
    node_limit: t.Optional[int],
) -> None:
    """Find surjective colorings by transpositions (Sn) or three-cycles (An)."""
    d = _diagram(source, pd_path, braid_text)
    spec = ClassSpec.from_name(group)
    colorings = []
    for found in solve_class_colorings(d, spec, SolverOptions(up_to_conjugation=not raw, node_limit=node_limit)):
        colorings.append(found)
        if not find_all:
            break
    document = {
        "group": spec.name,
        "count": len(colorings),
        "colorings": [SerializationUtils.coloring_to_dict(c) for c in colorings],
    }
    lines = [f"{spec.name}: {len(colorings)} coloring(s)"] + [_color_text(c) for c in colorings]
    _emit(ctx, document, lines)


@main.command()
@_diagram_input
@click.option("--n-max", type=click.IntRange(min=2), default=None, help="Largest degree searched.")
@_node_limit
@click.pass_context
def pnum(
    ctx: click.Context,
    source: t.Optional[str],
    pd_path: t.Optional[str],
    braid_text: t.Optional[str],
    n_max: t.Optional[int],
    node_limit: t.Optional[int],
) -> None:
    """Compute the permutation number."""
    d = _diagram(source, pd_path, braid_text)
    try:
        result = permutation_number(d, n_max, SolverOptions(node_limit=node_limit))
    except BudgetExceeded as e:
        document = {"p": None, "lower_bound": e.lower_bound, "budget_exceeded": True, "nodes": e.nodes}
        _emit(ctx, document, [f"p >= {e.lower_bound} (node limit reached after {e.nodes} nodes)"])
        raise
    document = SerializationUtils.permutation_number_to_dict(result)
    _emit(ctx, document, [f"p = {result.value}", f"degrees with colorings: {list(result.degrees)}"])


@main.command()
@click.argument("n", type=click.IntRange(min=1))
@_diagram_input
@_node_limit
@click.pass_context
def gn(
    ctx: click.Context,
    n: int,
    source: t.Optional[str],
    pd_path: t.Optional[str],
    braid_text: t.Optional[str],
    node_limit: t.Optional[int],
) -> None:
    """Decide whether the knot is (m choose 2)-colorable for some m >= N."""
    member = gn_member(_diagram(source, pd_path, braid_text), n, SolverOptions(node_limit=node_limit))
    _emit(ctx, {"n": n, "member": member}, [f"in G_{n}: {'yes' if member else 'no'}"])


@main.command()
@_diagram_input
@click.option("-p", "p", type=int, default=3, show_default=True, help="An odd prime.")
@click.pass_context
def fox(
    ctx: click.Context, source: t.Optional[str], pd_path: t.Optional[str], braid_text: t.Optional[str], p: int
) -> None:
    """Compute the space of Fox p-colorings."""
    space = fox_coloring_space(_diagram(source, pd_path, braid_text), p)
    lines = [f"dim over F_{p}: {space.dimension}"] + [" ".join(map(str, v)) for v in space.basis]
    _emit(ctx, SerializationUtils.fox_to_dict(space), lines)


@main.command()
@click.argument("braid")
@click.option("--start", type=click.IntRange(min=0), required=True, help="Index of the section's first letter.")
@click.option("--coloring", "coloring_path", type=click.Path(dir_okay=False, allow_dash=True), default=None)
@click.option("--group", default="S3", show_default=True, help="Transposition group when no coloring is given.")
@click.option("--budget", type=click.IntRange(min=0), default=8, show_default=True, help="Longest replacement word.")
@_node_limit
@click.pass_context
def rewrite(
    ctx: click.Context,
    braid: str,
    start: int,
    coloring_path: t.Optional[str],
    group: str,
    budget: int,
    node_limit: t.Optional[int],
) -> None:
    """Replace the clasp section of BRAID at --start so that a coloring of the undone clasp survives."""
    section = clasp_section(_braid(braid), start)
    if coloring_path is not None:
        col = SerializationUtils.coloring_from_dict(SerializationUtils.loads(_read(coloring_path), coloring_path))
    else:
        found = next(iter(solve_class_colorings(section.diagram, ClassSpec.from_name(group))), None)
        if found is None:
            raise GordianColorsError(f"The section's diagram has no surjective {group} coloring")
        col = found
    result = synthesize_k1_tilde(section, col, SynthesisOptions(budget=budget, node_limit=node_limit))
    lines = [
        f"case: {result.label.label}",
        f"braid: {list(result.braid.letters)}" + (" (unchanged)" if result.identity else ""),
        f"coloring: {_color_text(result.coloring)}",
    ]
    _emit(ctx, SerializationUtils.synthesis_to_dict(result), lines)


@main.command()
@_diagram_input
@click.option("--coloring", "coloring_path", type=click.Path(dir_okay=False, allow_dash=True), default=None)
@_node_limit
@click.pass_context
def homology(
    ctx: click.Context,
    source: t.Optional[str],
    pd_path: t.Optional[str],
    braid_text: t.Optional[str],
    coloring_path: t.Optional[str],
    node_limit: t.Optional[int],
) -> None:
    """Present the three-fold dihedral covers and compute their first homology."""
    d = _diagram(source, pd_path, braid_text)
    if coloring_path is not None:
        document = SerializationUtils.loads(_read(coloring_path), coloring_path)
        colorings = [SerializationUtils.coloring_from_dict(document)]
    else:
        colorings = list(solve_class_colorings(d, ClassSpec.symmetric(3), SolverOptions(node_limit=node_limit)))
    w = wirtinger(d)
    covers, lines = [], []
    for col in colorings:
        cp = reidemeister_schreier(w, col)
        branched, unbranched = branched_homology(cp), unbranched_homology(cp)
        covers.append(
            {
                "coloring": SerializationUtils.coloring_to_dict(col),
                "presentation": SerializationUtils.cover_to_dict(cp),
                "branched": SerializationUtils.homology_to_dict(branched),
                "unbranched": SerializationUtils.homology_to_dict(unbranched),
            }
        )
        lines.append(f"{_color_text(col)}: branched {branched}, unbranched {unbranched}")
    _emit(ctx, {"covers": covers}, lines or ["no surjective 3-colorings"])


@main.command()
@_diagram_input
@_node_limit
@click.pass_context
def lk(
    ctx: click.Context,
    source: t.Optional[str],
    pd_path: t.Optional[str],
    braid_text: t.Optional[str],
    node_limit: t.Optional[int],
) -> None:
    """Compute the set of linking numbers of the lifts over all 3-colorings."""
    linking = linking_set(_diagram(source, pd_path, braid_text), SolverOptions(node_limit=node_limit))
    lines = [f"lk = {_values_text(linking.values)}"]
    if linking.undefined_count:
        lines.append(f"undefined for {linking.undefined_count} coloring(s)")
    _emit(ctx, SerializationUtils.linking_to_dict(linking, source or pd_path or braid_text), lines)


@main.command()
@click.argument("first")
@click.argument("second")
@_node_limit
@click.pass_context
def obstruct(ctx: click.Context, first: str, second: str, node_limit: t.Optional[int]) -> None:
    """Compare the linking sets of FIRST and SECOND (knot expressions or JSON files)."""
    opts = SolverOptions(node_limit=node_limit)
    report = lk_obstruction(_diagram(first, None, None), _diagram(second, None, None), opts)
    lines = [
        f"{first}: {_values_text(report.first.values)}",
        f"{second}: {_values_text(report.second.values)}",
        f"common: {_values_text(report.common)}",
    ]
    if not report.second_twice_colorable:
        lines.append(f"{second} is not twice 3-colorable; no obstruction applies")
    elif report.obstructed:
        lines.append("disjoint: not one crossing change apart, if monochromatic changes keep linking numbers")
    _emit(ctx, SerializationUtils.obstruction_to_dict(report, first, second), lines)
