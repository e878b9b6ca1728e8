"""Irregular three-fold dihedral covers of knots and the linking numbers of the branch curve's lifts.

A surjective coloring by the transpositions of ``S_3`` sends each Wirtinger generator to a permutation of three
sheets. Rewriting the knot group's presentation along the cosets of a point stabilizer presents the cover; filling
in the lifts of the meridians gives its branched version, in which the knot lifts to a degree-one and a degree-two
curve.
"""

import logging
import typing as t
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from functools import lru_cache

import networkx as nx

from .coloring import check_coloring, fox_coloring_space, first_coloring, is_surjective, solve_class_colorings
from .diagram import braid_closure, longitude_word, torus_braid, wirtinger
from .errors import CoverError, NotSurjective
from .models.class_coloring import ClassColoring
from .models.class_spec import ClassSpec
from .models.cover_presentation import CoverPresentation, MeridianLift
from .models.group_presentation import GroupPresentation
from .models.homology_decomposition import HomologyDecomposition
from .models.linking_set import LinkingObstruction, LinkingSet
from .models.planar_diagram import PlanarDiagram
from .models.smith_form import SmithForm
from .models.solver_options import SolverOptions
from .models.undefined import Undefined
from .utils.linear_algebra import LinearAlgebra, Matrix
from .utils.permutation_utils import Perm, PermutationUtils
from .utils.word_utils import Word, WordUtils


log = logging.getLogger(__name__)

SHEETS = 3

CALIBRATION_VALUE = Fraction(2)
"""The linking number reported for the closure of ``σ_1^3``."""

LinkingNumber = t.Union[Fraction, Undefined]


def smith_normal_form(m: Matrix, cols: t.Optional[int] = None) -> SmithForm:
    """Return the certified Smith normal form of an integer matrix.

    ``cols`` is only needed when ``m`` has no rows.
    """
    if cols is None:
        if not m:
            raise ValueError("cols is required for a matrix without rows")
        cols = len(m[0])
    return LinearAlgebra.smith(m, cols)


def _homology(rows: Matrix, cols: int) -> HomologyDecomposition:
    smith = smith_normal_form(rows, cols)
    return HomologyDecomposition(
        free_rank=cols - smith.rank,
        invariant_factors=tuple(d for d in smith.invariant_factors if d > 1),
    )


class _SheetAction:
    """The right action of the knot group on the sheets ``0, 1, 2`` through a coloring.

    ``s · x = φ(x)⁻¹(s)``, so words act letter by letter from the left.
    """

    def __init__(self, colors: t.Sequence[Perm]) -> None:
        self.colors = colors
        self.inverses = [PermutationUtils.inverse(color) for color in colors]

    def step(self, sheet: int, letter: int) -> int:
        generator = abs(letter) - 1
        return (self.inverses[generator] if letter > 0 else self.colors[generator])[sheet]

    def fixed_sheet(self, generator: int) -> int:
        return next(s for s in range(SHEETS) if self.colors[generator][s] == s)

    def moved_sheet(self, generator: int) -> int:
        return next(s for s in range(SHEETS) if self.colors[generator][s] != s)


class _Rewriter:
    """Reidemeister–Schreier rewriting along the breadth-first coset tree rooted at sheet ``0``."""

    def __init__(self, generator_count: int, action: _SheetAction) -> None:
        self.action = action
        graph = nx.DiGraph()
        graph.add_nodes_from(range(SHEETS))
        for sheet in range(SHEETS):
            for generator in range(generator_count):
                target = action.step(sheet, generator + 1)
                if not graph.has_edge(sheet, target):
                    graph.add_edge(sheet, target, generator=generator)
        tree = list(nx.bfs_edges(graph, 0))
        if len(tree) != SHEETS - 1:
            raise NotSurjective(f"The coloring reaches only {len(tree) + 1} of {SHEETS} sheets")

        transversal: t.Dict[int, Word] = {0: ()}
        self.tree_edges: t.Set[t.Tuple[int, int]] = set()
        for source, target in tree:
            generator = graph[source][target]["generator"]
            self.tree_edges.add((source, generator))
            transversal[target] = transversal[source] + (generator + 1,)
        self.transversal = tuple(transversal[s] for s in range(SHEETS))
        self.generators = tuple(
            (sheet, generator)
            for sheet in range(SHEETS)
            for generator in range(generator_count)
            if (sheet, generator) not in self.tree_edges
        )
        self.index = {pair: k for k, pair in enumerate(self.generators)}

    def rewrite(self, word: t.Iterable[int], sheet: int) -> t.Tuple[Word, int]:
        """Rewrite ``word`` read from ``sheet``; return the Schreier word and the sheet it ends on."""
        letters: t.List[int] = []
        for letter in word:
            generator = abs(letter) - 1
            if letter > 0:
                if (sheet, generator) not in self.tree_edges:
                    letters.append(self.index[(sheet, generator)] + 1)
                sheet = self.action.step(sheet, letter)
            else:
                sheet = self.action.step(sheet, letter)
                if (sheet, generator) not in self.tree_edges:
                    letters.append(-(self.index[(sheet, generator)] + 1))
        return tuple(letters), sheet

    def lift(self, word: t.Iterable[int], sheet: int) -> Word:
        """Rewrite a word that must close up on ``sheet``."""
        rewritten, end = self.rewrite(word, sheet)
        if end != sheet:
            raise CoverError(f"The word does not lift to a closed loop from sheet {sheet + 1}")
        return rewritten


def _check_three_coloring(col: ClassColoring) -> None:
    if col.spec.name != f"S{SHEETS}":
        raise NotSurjective(f"Covers need a coloring by the transpositions of S_3, got {col.spec.name}")
    if not is_surjective(col.colors, col.spec):
        raise NotSurjective("The coloring does not generate S_3")


def reidemeister_schreier(
    w: GroupPresentation, col: ClassColoring, longitude: t.Optional[Word] = None
) -> CoverPresentation:
    """Present the subgroup of ``w`` fixing sheet ``0`` under the coloring ``col`` of its generators.

    There is one Schreier generator for every (sheet, generator) pair off the coset tree, ``3G - 2`` in all,
    ordered by sheet then generator, and one rewritten relator per (relator, sheet) pair. When ``longitude`` is
    given, its lift from every sheet is recorded.
    """
    if len(col) != w.generator_count:
        raise CoverError(f"{len(col)} colors for {w.generator_count} generators")
    _check_three_coloring(col)
    action = _SheetAction(col.assignment)
    rewriter = _Rewriter(w.generator_count, action)
    relators = tuple(rewriter.lift(relator, sheet) for relator in w.relators for sheet in range(SHEETS))

    lifts = []
    for arc in range(w.generator_count):
        fixed, moved = action.fixed_sheet(arc), action.moved_sheet(arc)
        lifts.append(
            MeridianLift(
                arc=arc,
                fixed_sheet=fixed,
                degree_one=rewriter.lift((arc + 1,), fixed),
                moved_sheet=moved,
                degree_two=rewriter.lift((arc + 1, arc + 1), moved),
            )
        )
    longitude_lifts = {}
    if longitude is not None:
        longitude_lifts = {sheet: rewriter.lift(longitude, sheet) for sheet in range(SHEETS)}

    labels = tuple(f"x{generator}.{sheet + 1}" for sheet, generator in rewriter.generators)
    log.debug("cover presentation: %d generators, %d relators", len(rewriter.generators), len(relators))
    return CoverPresentation(
        presentation=GroupPresentation(generator_count=len(rewriter.generators), relators=relators, labels=labels),
        transversal=rewriter.transversal,
        generators=rewriter.generators,
        meridian_lifts=tuple(lifts),
        longitude_lifts=longitude_lifts,
        sheets=SHEETS,
    )


def _lift_rows(cp: CoverPresentation, degree_one: bool) -> t.List[t.List[int]]:
    rows = cp.presentation.relation_matrix()
    for lift in cp.meridian_lifts:
        if degree_one:
            rows.append(WordUtils.abelianize(lift.degree_one, cp.generator_count))
        rows.append(WordUtils.abelianize(lift.degree_two, cp.generator_count))
    return rows


def branched_homology(cp: CoverPresentation) -> HomologyDecomposition:
    """First homology of the branched cover: the cover's relators plus every meridian lift killed."""
    return _homology(_lift_rows(cp, degree_one=True), cp.generator_count)


def unbranched_homology(cp: CoverPresentation) -> HomologyDecomposition:
    """First homology of the unbranched cover."""
    return _homology(cp.presentation.relation_matrix(), cp.generator_count)


def _raw_linking(d: PlanarDiagram, col: ClassColoring, base_arc: int = 0) -> t.Optional[Fraction]:
    """Linking number before the orientation calibration, ``None`` when undefined.

    In the cover with only the degree-two lift filled in, the lifted longitude from a moved sheet is a push-off of
    the degree-two curve; it is compared with the meridian of the degree-one curve on the free part of homology.
    """
    check = check_coloring(d, col)
    if not check:
        raise CoverError(f"The coloring fails at crossing {check.crossing}")
    cp = reidemeister_schreier(wirtinger(d), col, longitude_word(d, base_arc))
    smith = smith_normal_form(_lift_rows(cp, degree_one=False), cp.generator_count)
    free = smith.free_columns
    lift = cp.meridian_lifts[base_arc]

    def free_part(word: Word) -> t.List[int]:
        coordinates = smith.coordinates(WordUtils.abelianize(word, cp.generator_count))
        return [coordinates[j] for j in free]

    meridian = free_part(lift.degree_one)
    longitude = free_part(cp.longitude_lifts[lift.moved_sheet])
    ratio = LinearAlgebra.proportion(longitude, meridian)
    log.debug("lifted meridian %s, lifted longitude %s, ratio %s", meridian, longitude, ratio)
    return ratio


@lru_cache(maxsize=None)
def _orientation() -> int:
    """``±1`` so that the closure of ``σ_1^3`` reports :data:`CALIBRATION_VALUE`."""
    trefoil = braid_closure(torus_braid(3))
    col = first_coloring(trefoil, ClassSpec.symmetric(SHEETS))
    raw = _raw_linking(trefoil, t.cast(ClassColoring, col))
    if raw is None or abs(raw) != CALIBRATION_VALUE:
        raise ArithmeticError(f"Calibration on the trefoil gave {raw}, expected ±{CALIBRATION_VALUE}")
    sign = 1 if raw > 0 else -1
    log.debug("linking orientation calibrated to %+d", sign)
    return sign


def dihedral_linking(d: PlanarDiagram, col: ClassColoring) -> LinkingNumber:
    """Return the linking number of the two lifts of the knot, or :class:`Undefined` if either is not torsion."""
    _check_three_coloring(col)
    raw = _raw_linking(d, col)
    if raw is None:
        return Undefined()
    return raw * _orientation()


def linking_set(d: PlanarDiagram, opts: t.Optional[SolverOptions] = None) -> LinkingSet:
    """Collect :func:`dihedral_linking` over the surjective three-colorings, one per color permutation orbit."""
    opts = opts or SolverOptions()
    colorings = list(solve_class_colorings(d, ClassSpec.symmetric(SHEETS), opts))

    def one(col: ClassColoring) -> t.Optional[Fraction]:
        value = dihedral_linking(d, col)
        return value if isinstance(value, Fraction) else None

    if opts.threads <= 1 or len(colorings) <= 1:
        results = [one(col) for col in colorings]
    else:
        _orientation()
        with ThreadPoolExecutor(max_workers=opts.threads) as executor:
            results = list(executor.map(one, colorings))
    linking = LinkingSet.from_results(results)
    log.debug("linking set over %d colorings: %s", len(colorings), linking)
    return linking


def lk_obstruction(d1: PlanarDiagram, d2: PlanarDiagram, opts: t.Optional[SolverOptions] = None) -> LinkingObstruction:
    """Compare the linking sets of two knots.

    Disjoint sets are only reported as obstructed when the second knot is twice 3-colorable, and even then the
    verdict rests on the conjecture that monochromatic crossing changes keep linking numbers.
    """
    first, second = linking_set(d1, opts), linking_set(d2, opts)
    common = tuple(sorted(set(first.values) & set(second.values)))
    return LinkingObstruction(
        first=first,
        second=second,
        common=common,
        second_twice_colorable=fox_coloring_space(d2, 3).twice_three_colorable,
    )
