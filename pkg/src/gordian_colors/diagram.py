"""Knot diagrams: builders, structural edits and the Wirtinger presentation."""

import logging
import typing as t
from dataclasses import replace

from .errors import DiagramError, InvalidArc, MultiComponentClosure
from .models.braid_word import BraidWord
from .models.group_presentation import GroupPresentation
from .models.planar_diagram import Crossing, PlanarDiagram
from .utils.diagram_builder import BraidHandle, DiagramBuilder, Port
from .utils.word_utils import Word


log = logging.getLogger(__name__)

STANDARD_BRAIDS: t.Dict[str, BraidWord] = {
    "3_1": BraidWord(2, (1, 1, 1)),
    "4_1": BraidWord(3, (1, -2, 1, -2)),
    "5_1": BraidWord(2, (1, 1, 1, 1, 1)),
    "8_20": BraidWord(3, (1, 1, 1, -2, -1, -1, -1, -2)),
    "8_21": BraidWord(3, (1, 1, 1, 2, -1, -1, 2, 2)),
}
"""Braid words of the table knots used as fixtures."""


def _entry_port(word: BraidWord) -> Port:
    """The port where the closure of ``word`` is entered: the first crossing on position 1, from below."""
    for slot, letter in enumerate(word.letters):
        if abs(letter) == 1:
            return Port(slot, "o" if letter > 0 else "u", 0)
    raise MultiComponentClosure(f"Position 1 of a braid on {word.strands} strands is never crossed")


def close_braid(word: BraidWord) -> t.Tuple[PlanarDiagram, t.Optional[DiagramBuilder], t.Optional[BraidHandle]]:
    """Close ``word`` and also return the builder and braid handle, which locate edges by braid height."""
    if not word.is_knot():
        raise MultiComponentClosure(f"The closure of {word.letters} in B_{word.strands} has several components")
    if not word.letters:
        return PlanarDiagram(bottom_edges=(0,)), None, None
    builder = DiagramBuilder()
    handle = builder.add_braid(word.strands, word.letters)
    for top, bottom in zip(handle.top, handle.bottom):
        builder.connect(top, bottom)
    diagram = builder.build(_entry_port(word), bottom=handle.bottom)
    return diagram, builder, handle


def braid_closure(word: BraidWord) -> PlanarDiagram:
    """Return the diagram of the closure of a braid.

    Crossing ``k`` is letter ``k`` with the letter's sign. Edge ``0`` crosses the bottom of position 1 and
    :attr:`PlanarDiagram.bottom_arcs` lists the arcs met along the bottom of the braid.
    """
    return close_braid(word)[0]


def trefoil_sum_braid(k: int) -> BraidWord:
    """Return ``σ_1^3 σ_2^3 ⋯ σ_k^3`` in ``B_{k+1}``, whose closure is the sum of ``k`` trefoils."""
    if k < 1:
        raise DiagramError(f"Need at least one summand, got {k}")
    return BraidWord(k + 1, tuple(i for i in range(1, k + 1) for _ in range(3)))


def torus_braid(p: int) -> BraidWord:
    """Return ``σ_1^p`` in ``B_2``; its closure is the torus knot ``T(2, p)`` for odd ``p``."""
    if p % 2 == 0:
        raise MultiComponentClosure(f"T(2, {p}) is a link")
    return BraidWord(2, (1 if p > 0 else -1,) * abs(p))


def whitehead_braid(m: int) -> BraidWord:
    """Return ``β_m``: blocks ``(σ_{2j} σ_{2j-1} σ_{2j+1} σ_{2j})^5 σ_{2j+1}`` for ``j = 1..m``, then ``σ_1``."""
    if m < 1:
        raise DiagramError(f"m must be positive, got {m}")
    letters: t.List[int] = []
    for j in range(1, m + 1):
        letters.extend((2 * j, 2 * j - 1, 2 * j + 1, 2 * j) * 5)
        letters.append(2 * j + 1)
    letters.append(1)
    return BraidWord(2 * m + 2, tuple(letters))


def whitehead_double_diagram(m: int) -> PlanarDiagram:
    """Close ``β_m`` on positions ``3..2m+2`` and join positions 1 and 2 by a clasp above the braid.

    The tops of positions 1 and 2 are joined by a cap and the bottoms by a cup; the cap passes over then under
    the cup. The two clasp crossings come last and are recorded in ``clasp_marks``.
    """
    word = whitehead_braid(m)
    builder = DiagramBuilder()
    handle = builder.add_braid(word.strands, word.letters)
    for top, bottom in list(zip(handle.top, handle.bottom))[2:]:
        builder.connect(top, bottom)
    left, right = builder.add_slot(-1), builder.add_slot(-1)
    # cap: over at the left crossing, under at the right one
    builder.connect(handle.top[0], Port(left, "o", 0))
    builder.connect(Port(left, "o", 1), Port(right, "u", 0))
    builder.connect(Port(right, "u", 1), handle.top[1])
    # cup: under at the left crossing, over at the right one
    builder.connect(handle.bottom[0], Port(left, "u", 0))
    builder.connect(Port(left, "u", 1), Port(right, "o", 0))
    builder.connect(Port(right, "o", 1), handle.bottom[1])
    diagram = builder.build(_entry_port(word), bottom=handle.bottom, clasps=[(left, right)])
    log.debug("whitehead double m=%d: %d crossings", m, len(diagram.crossings))
    return diagram


def pretzel_diagram(p: int, q: int, r: int) -> PlanarDiagram:
    """Return the pretzel diagram ``P(p, q, r)``: three twisted columns joined side by side.

    Column ``j`` carries ``|p_j|`` half twists, right-handed for positive ``p_j``. It is a knot when at most one
    of ``p, q, r`` is even.
    """
    builder = DiagramBuilder()
    columns = [
        builder.add_braid(2, (1 if twists > 0 else -1,) * abs(twists), prefix=f"c{j}")
        for j, twists in enumerate((p, q, r))
    ]
    for j, column in enumerate(columns):
        following = columns[(j + 1) % 3]
        builder.connect(column.top[1], following.top[0])
        builder.connect(column.bottom[1], following.bottom[0])
    if not any((p, q, r)):
        raise MultiComponentClosure("P(0, 0, 0) is a link")
    first = next(j for j, twists in enumerate((p, q, r)) if twists)
    slot = sum(abs(twists) for twists in (p, q, r)[:first])
    return builder.build(Port(slot, "o", 0))


def standard_knot(name: str) -> PlanarDiagram:
    """Return the closure of the table braid for ``name`` (``3_1``, ``4_1``, ``5_1``, ``8_20``, ``8_21``)."""
    try:
        return braid_closure(STANDARD_BRAIDS[name])
    except KeyError:
        raise DiagramError(f"Unknown knot {name!r}; known: {', '.join(sorted(STANDARD_BRAIDS))}") from None


def _first_edge(d: PlanarDiagram, arc: int) -> int:
    """The edge where ``arc`` begins, right after an undercrossing."""
    for edge in d.traversal:
        if d.edge_arc[edge] == arc:
            previous = next(e for e, (following, _) in d.next_edge.items() if following == edge)
            if d.next_edge[previous][1]:
                return edge
    raise InvalidArc(f"Arc {arc} does not exist")


def _check_arc(d: PlanarDiagram, arc: int) -> None:
    if not 0 <= arc < d.arc_count:
        raise InvalidArc(f"Arc {arc} does not exist (diagram has {d.arc_count} arcs)")


def connected_sum(d1: PlanarDiagram, d2: PlanarDiagram, a1: int = 0, a2: int = 0) -> PlanarDiagram:
    """Splice ``d2`` into ``d1`` by cutting the first edge of arc ``a1`` and of arc ``a2``.

    Crossing ids of ``d2`` are shifted past those of ``d1``. A trivial summand is absorbed, otherwise the sum has
    ``C1 + C2`` crossings and as many arcs.
    """
    _check_arc(d1, a1)
    _check_arc(d2, a2)
    if not d2.crossings:
        return d1
    if not d1.crossings:
        return d2
    offset = len(d1.crossings)
    shift = 2 * offset
    cut1 = _first_edge(d1, a1)
    cut2 = _first_edge(d2, a2) + shift

    def rewire(crossing: Crossing, from_edge: int, to_edge: int) -> Crossing:
        if crossing.under_in == from_edge:
            return replace(crossing, under_in=to_edge)
        if crossing.over_in == from_edge:
            return replace(crossing, over_in=to_edge)
        return crossing

    left = [rewire(c, cut1, cut2) for c in d1.crossings]
    right = [
        rewire(
            Crossing(
                c.index + offset,
                c.sign,
                c.under_in + shift,
                c.under_out + shift,
                c.over_in + shift,
                c.over_out + shift,
            ),
            cut2,
            cut1,
        )
        for c in d2.crossings
    ]
    return PlanarDiagram(
        crossings=tuple(left + right),
        clasp_marks=d1.clasp_marks | frozenset((a + offset, b + offset) for a, b in d2.clasp_marks),
    )


def mirror(d: PlanarDiagram) -> PlanarDiagram:
    """Reflect the diagram in a line of the projection plane: every sign flips and no arc changes."""
    return replace(d, crossings=tuple(c.mirrored() for c in d.crossings))


def crossing_change(d: PlanarDiagram, c: int) -> PlanarDiagram:
    """Exchange over and under at crossing ``c``."""
    changed = d.crossing(c).changed()
    return replace(d, crossings=d.crossings[:c] + (changed,) + d.crossings[c + 1 :])


def wirtinger(d: PlanarDiagram) -> GroupPresentation:
    """Return the Wirtinger presentation: one meridian per arc, one relator per crossing.

    The relator of a crossing with sign ``ε`` is ``x_out · x_over^ε · x_in⁻¹ · x_over^-ε``, that is
    ``x_out = x_over^ε x_in x_over^-ε``.
    """
    relators = []
    for _, sign, over, arc_in, arc_out in d.arc_crossings():
        relators.append((arc_out + 1, sign * (over + 1), -(arc_in + 1), -sign * (over + 1)))
    return GroupPresentation(
        generator_count=d.arc_count,
        relators=tuple(relators),
        meridian_flags=frozenset(range(d.arc_count)),
    )


def longitude_word(d: PlanarDiagram, base_arc: int = 0) -> Word:
    """Return the preferred longitude based at ``base_arc`` as a word in the Wirtinger generators.

    Walking the knot from the start of ``base_arc``, the over-arc generators ``o_1, …, o_C`` met at
    undercrossings (raised to the crossing signs) give ``o_C^ε_C ⋯ o_1^ε_1``, which commutes with the base
    meridian; ``x_base^-w`` is appended so the exponent sum is zero.
    """
    _check_arc(d, base_arc)
    if not d.crossings:
        return ()
    arcs = {c.index: (c.sign, d.edge_arc[c.over_in]) for c in d.crossings}
    under_at = {c.under_in: c.index for c in d.crossings}
    start = _first_edge(d, base_arc)
    position = d.traversal.index(start)
    walk = d.traversal[position:] + d.traversal[:position]
    letters: t.List[int] = []
    for edge in walk:
        if edge in under_at:
            sign, over = arcs[under_at[edge]]
            letters.append(sign * (over + 1))
    writhe = d.writhe
    correction = (-(base_arc + 1) if writhe > 0 else base_arc + 1,) * abs(writhe)
    return tuple(reversed(letters)) + correction
