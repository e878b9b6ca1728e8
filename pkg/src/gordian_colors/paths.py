"""Rewriting a pair of neighbouring clasps while keeping a transposition coloring."""

import dataclasses
import itertools
import logging
import typing as t

from .coloring import check_coloring, extend_coloring, is_surjective
from .diagram import braid_closure, close_braid
from .enums.case_label import CaseLabel
from .errors import BudgetExceeded, ColoringError, MalformedSection, SynthesisExhausted
from .models.braid_word import BraidWord
from .models.clasp_section import ClaspSection
from .models.class_coloring import ClassColoring
from .models.planar_diagram import PlanarDiagram
from .models.solver_options import SynthesisOptions
from .models.synthesis_result import SynthesisResult
from .utils.permutation_utils import Perm, PermutationUtils
from .utils.word_utils import WordUtils


log = logging.getLogger(__name__)


def _flip(letters: t.Sequence[int], index: int) -> t.Tuple[int, ...]:
    return tuple(-letter if k == index else letter for k, letter in enumerate(letters))


def clasp_section(braid: BraidWord, start: int) -> ClaspSection:
    """Locate the section starting at letter ``start`` of ``braid`` and derive its arcs."""
    letters = braid.letters
    window = letters[start : start + 4]
    if start < 0 or len(window) != 4:
        raise MalformedSection(f"No four letters at index {start} of a word of length {len(letters)}")
    s = window[2]
    if s < 1 or window != (s + 1, s + 1, s, s):
        raise MalformedSection(f"Letters {window} at index {start} are not of the form σ_(s+1)² σ_s²")
    hooked = BraidWord(braid.strands, _flip(letters, start + 1))
    diagram, builder, handle = close_braid(hooked)
    assert builder is not None and handle is not None

    def arc(height: int, position: int) -> int:
        return diagram.edge_arc[builder.edge_at(handle.levels[height][position])]

    arcs = (
        arc(start + 4, s - 1),
        arc(start + 2, s - 1),
        arc(start + 2, s),
        arc(start + 4, s),
        arc(start, s + 1),
    )
    if len(set(arcs)) != 5:
        raise MalformedSection(f"Section arcs {arcs} are not pairwise distinct")
    clasp_a, clasp_b = (start, start + 1), (start + 2, start + 3)
    return ClaspSection(
        braid=braid,
        start=start,
        diagram=dataclasses.replace(diagram, clasp_marks=frozenset((clasp_a, clasp_b))),
        clasp_a=clasp_a,
        clasp_b=clasp_b,
        section_arcs=arcs,
    )


def neighbor_diagrams(section: ClaspSection) -> t.Tuple[PlanarDiagram, PlanarDiagram]:
    """Return the diagrams with ``clasp_a`` undone and with ``clasp_b`` undone."""
    undone_b = BraidWord(section.braid.strands, _flip(section.braid.letters, section.start + 3))
    return section.diagram, braid_closure(undone_b)


def classify_colors(b1: Perm, b2: Perm, b3: Perm, b4: Perm, b5: Perm) -> CaseLabel:
    """Classify the transpositions on ``b_1 … b_5``; subcase ties go to the lowest precedence."""
    if b1 == b2:
        if b3 != b4 or not PermutationUtils.commute(b3, b2):
            raise MalformedSection(
                f"b_1 = b_2 = {PermutationUtils.to_cycles(b1)} needs b_3 = b_4 commuting with it, "
                f"got {PermutationUtils.to_cycles(b3)} and {PermutationUtils.to_cycles(b4)}"
            )
        return CaseLabel.CASE1
    first, second = PermutationUtils.support(b1), PermutationUtils.support(b2)
    shared = first & second
    if len(first) != 2 or len(second) != 2 or len(shared) != 1:
        raise MalformedSection(
            f"b_1 = {PermutationUtils.to_cycles(b1)} and b_2 = {PermutationUtils.to_cycles(b2)} "
            "must be transpositions sharing one point"
        )
    (j,) = shared
    (i,) = second - shared
    (k,) = first - shared
    n = len(b1)
    jk, ij, ik = (PermutationUtils.from_cycle(n, (x + 1, y + 1)) for x, y in ((j, k), (i, j), (i, k)))
    if b3 != jk or b4 != ik:
        raise MalformedSection(
            f"Expected b_3 = {PermutationUtils.to_cycles(jk)} and b_4 = {PermutationUtils.to_cycles(ik)}, "
            f"got {PermutationUtils.to_cycles(b3)} and {PermutationUtils.to_cycles(b4)}"
        )
    for label, partner in ((CaseLabel.CASE2A, jk), (CaseLabel.CASE2B, ij), (CaseLabel.CASE2C, ik)):
        if PermutationUtils.commute(b5, partner):
            return label
    raise MalformedSection(f"b_5 = {PermutationUtils.to_cycles(b5)} commutes with none of (jk), (ij), (ik)")


def classify_clasp_case(section: ClaspSection, col: ClassColoring) -> CaseLabel:
    """Classify a coloring of the section's diagram."""
    check = check_coloring(section.diagram, col)
    if not check:
        raise MalformedSection(f"The coloring fails at crossing {check.crossing}")
    b1, b2, b3, b4, b5 = (col[arc] for arc in section.section_arcs)
    return classify_colors(b1, b2, b3, b4, b5)


def is_one_crossing_adjacent(d1: PlanarDiagram, d2: PlanarDiagram) -> bool:
    """Return ``True`` when the labelled diagrams differ by a crossing change at exactly one crossing."""
    if len(d1.crossings) != len(d2.crossings):
        return False
    differing = [(a, b) for a, b in zip(d1.crossings, d2.crossings) if a != b]
    return len(differing) == 1 and differing[0][0].changed() == differing[0][1]


def transport(letters: t.Iterable[int], colors: t.Sequence[Perm]) -> t.List[Perm]:
    """Carry colors from the bottom of a braid to its top.

    A positive ``σ_i`` sends ``(a, b)`` to ``(a b a⁻¹, a)``; a negative one sends it to ``(b, b⁻¹ a b)``.
    """
    current = list(colors)
    for letter in letters:
        i = abs(letter) - 1
        a, b = current[i], current[i + 1]
        if letter > 0:
            current[i], current[i + 1] = PermutationUtils.conjugate(a, b), a
        else:
            current[i], current[i + 1] = b, PermutationUtils.conjugate(PermutationUtils.inverse(b), a)
    return current


def _candidates(s: int, budget: int) -> t.Iterator[t.Tuple[int, ...]]:
    """The unchanged section first, then every word on positions ``s..s+2`` by length and lexicographic order."""
    yield (s + 1, s + 1, s, s)
    alphabet = (s, -s, s + 1, -(s + 1))
    for length in range(budget + 1):
        yield from itertools.product(alphabet, repeat=length)


def _flip_to(word: t.Tuple[int, ...], target: t.Tuple[int, ...]) -> t.Optional[int]:
    """Index of the first letter whose reversal makes ``word`` freely equal to ``target``."""
    for index in range(len(word)):
        if WordUtils.free_reduce(_flip(word, index)) == target:
            return index
    return None


def synthesize_k1_tilde(
    section: ClaspSection, col: ClassColoring, opts: t.Optional[SynthesisOptions] = None
) -> SynthesisResult:
    """Replace the section by a short word so the coloring survives and both neighbours stay one change away.

    A candidate is accepted when one letter reversal makes it freely equal to the ``clasp_a``-undone section, one
    makes it freely equal to the ``clasp_b``-undone section, and the coloring of the section's diagram, carried
    from the bottom of the braid, closes up and stays surjective.
    """
    opts = opts or SynthesisOptions()
    label = classify_clasp_case(section, col)
    s, start = section.position, section.start
    letters = section.braid.letters
    prefix, suffix = letters[:start], letters[start + 4 :]
    undone_a = WordUtils.free_reduce((s + 1, -(s + 1), s, s))
    undone_b = WordUtils.free_reduce((s + 1, s + 1, s, -s))
    bottom = [col[arc] for arc in section.diagram.bottom_arcs]
    spec = col.spec

    for tried, word in enumerate(_candidates(s, opts.budget), start=1):
        if opts.node_limit is not None and tried > opts.node_limit:
            raise BudgetExceeded(f"Tangle search exceeded {opts.node_limit} candidates", tried - 1)
        flip_a = _flip_to(word, undone_a)
        flip_b = _flip_to(word, undone_b)
        if flip_a is None or flip_b is None:
            continue
        full = prefix + word + suffix
        if transport(full, bottom) != bottom:
            continue
        braid = BraidWord(section.braid.strands, full)
        diagram = braid_closure(braid)
        try:
            coloring = extend_coloring(diagram, spec, dict(zip(diagram.bottom_arcs, bottom)))
        except ColoringError:
            continue
        if not check_coloring(diagram, coloring) or not is_surjective(coloring.colors, spec):
            continue
        identity = word == letters[start : start + 4]
        log.info("%s: replacement %s after %d candidates", label.label, word, tried)
        return SynthesisResult(
            label=label,
            braid=braid,
            diagram=diagram,
            coloring=coloring,
            k0_witness=braid_closure(BraidWord(braid.strands, _flip(full, start + flip_a))),
            k2_witness=braid_closure(BraidWord(braid.strands, _flip(full, start + flip_b))),
            identity=identity,
        )
    raise SynthesisExhausted(f"No word of at most {opts.budget} letters satisfies the contracts for {label.label}")
