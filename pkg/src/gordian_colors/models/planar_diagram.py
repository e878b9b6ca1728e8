"""Oriented knot diagrams stored as signed crossings over edges."""

import typing as t
from dataclasses import dataclass, field, replace
from functools import cached_property

from ..errors import InvalidCrossing, InvalidDiagram, MultiComponentClosure


@dataclass(frozen=True)
class Crossing:
    """A signed crossing.

    The four strand ends are edge ids: an edge is the piece of the knot between two consecutive crossings.
    Arcs (maximal pieces between undercrossings) are derived from the edges by :class:`PlanarDiagram`.
    """

    index: int
    sign: int
    under_in: int
    under_out: int
    over_in: int
    over_out: int

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise InvalidDiagram(f"Crossing {self.index} has sign {self.sign}, expected +1 or -1")

    @property
    def pd(self) -> t.Tuple[int, int, int, int]:
        """The PD 4-tuple, counterclockwise from the incoming under-edge."""
        if self.sign > 0:
            return self.under_in, self.over_out, self.under_out, self.over_in
        return self.under_in, self.over_in, self.under_out, self.over_out

    def changed(self) -> "Crossing":
        """Exchange the over and under strands; the sign flips with them."""
        return Crossing(
            self.index,
            -self.sign,
            under_in=self.over_in,
            under_out=self.over_out,
            over_in=self.under_in,
            over_out=self.under_out,
        )

    def mirrored(self) -> "Crossing":
        """Reflect the crossing in a line of the projection plane: same strands, opposite sign."""
        return replace(self, sign=-self.sign)


@dataclass(frozen=True)
class PlanarDiagram:
    """A single-component oriented knot diagram.

    Edge ids run over ``0..2C-1``. Every edge occurs once as an incoming and once as an outgoing strand end,
    and following the strands from crossing to crossing visits all of them in one cycle. The diagram with no
    crossings is the trivial diagram with a single arc.
    """

    crossings: t.Tuple[Crossing, ...] = ()
    """Crossing records; ``crossings[i].index == i``."""

    clasp_marks: t.FrozenSet[t.Tuple[int, int]] = field(default_factory=frozenset)
    """Pairs of crossing ids that form a clasp."""

    bottom_edges: t.Tuple[int, ...] = ()
    """For braid closures: the edge crossing the bottom of each braid position."""

    def __post_init__(self) -> None:
        object.__setattr__(self, "crossings", tuple(self.crossings))
        object.__setattr__(
            self, "clasp_marks", frozenset(tuple(sorted((int(a), int(b)))) for a, b in self.clasp_marks)
        )
        object.__setattr__(self, "bottom_edges", tuple(self.bottom_edges))
        self._validate()

    # ---- validation -------------------------------------------------------------------------------------

    def _validate(self) -> None:
        for i, crossing in enumerate(self.crossings):
            if crossing.index != i:
                raise InvalidDiagram(f"Crossing at position {i} carries index {crossing.index}")
        edges = 2 * len(self.crossings)
        ins: t.Dict[int, int] = {}
        outs: t.Dict[int, int] = {}
        for crossing in self.crossings:
            for edge in (crossing.under_in, crossing.over_in):
                if edge in ins:
                    raise InvalidDiagram(f"Edge {edge} enters crossings {ins[edge]} and {crossing.index}")
                ins[edge] = crossing.index
            for edge in (crossing.under_out, crossing.over_out):
                if edge in outs:
                    raise InvalidDiagram(f"Edge {edge} leaves crossings {outs[edge]} and {crossing.index}")
                outs[edge] = crossing.index
        if set(ins) != set(range(edges)) or set(outs) != set(range(edges)):
            raise InvalidDiagram(f"Edge ids must be exactly 0..{edges - 1}, each entering and leaving once")
        if len(self.traversal) != edges:
            raise MultiComponentClosure(f"Diagram has more than one component ({len(self.traversal)} of {edges} edges)")
        for edge in self.bottom_edges:
            if not 0 <= edge < max(edges, 1):
                raise InvalidDiagram(f"Bottom edge {edge} does not exist")
        for a, b in self.clasp_marks:
            self._validate_clasp(a, b)

    def _validate_clasp(self, a: int, b: int) -> None:
        count = len(self.crossings)
        if a == b or not (0 <= a < count and 0 <= b < count):
            raise InvalidDiagram(f"Clasp mark ({a}, {b}) does not name two crossings")
        joining = [
            edge for edge in range(2 * count) if {self.edge_source[edge], self.edge_target[edge]} == {a, b}
        ]
        if len(joining) < 2:
            raise InvalidDiagram(f"Crossings {a} and {b} are not joined by two parallel edges")

    # ---- edge structure ---------------------------------------------------------------------------------

    @cached_property
    def edge_target(self) -> t.Dict[int, int]:
        """Map an edge to the crossing it runs into."""
        return {edge: c.index for c in self.crossings for edge in (c.under_in, c.over_in)}

    @cached_property
    def edge_source(self) -> t.Dict[int, int]:
        """Map an edge to the crossing it leaves."""
        return {edge: c.index for c in self.crossings for edge in (c.under_out, c.over_out)}

    @cached_property
    def next_edge(self) -> t.Dict[int, t.Tuple[int, bool]]:
        """Map an edge to the edge that follows it and whether the crossing between them is passed under."""
        following: t.Dict[int, t.Tuple[int, bool]] = {}
        for c in self.crossings:
            following[c.under_in] = (c.under_out, True)
            following[c.over_in] = (c.over_out, False)
        return following

    @cached_property
    def traversal(self) -> t.Tuple[int, ...]:
        """Edges in the order met when walking the knot from edge ``0``."""
        if not self.crossings:
            return ()
        order = [0]
        edge = self.next_edge[0][0]
        while edge != 0 and len(order) <= len(self.next_edge):
            order.append(edge)
            edge = self.next_edge[edge][0]
        return tuple(order)

    # ---- arcs -------------------------------------------------------------------------------------------

    @cached_property
    def edge_arc(self) -> t.Tuple[int, ...]:
        """Map each edge to its arc; arcs are numbered in traversal order from the arc of edge ``0``."""
        if not self.crossings:
            return ()
        arc_of = [0] * (2 * len(self.crossings))
        current = 0
        previous = self.traversal[0]
        for edge in self.traversal[1:]:
            if self.next_edge[previous][1]:
                current += 1
            arc_of[edge] = current
            previous = edge
        if not self.next_edge[previous][1]:
            # the last arc runs through edge 0 and is the same arc as the first one
            arc_of = [0 if arc == current else arc for arc in arc_of]
        return tuple(arc_of)

    @property
    def arc_count(self) -> int:
        """Number of arcs; equal to the crossing count for a nontrivial diagram and ``1`` otherwise."""
        return max(self.edge_arc, default=0) + 1

    @property
    def component_count(self) -> int:
        """Always ``1``: validation rejects links."""
        return 1

    @property
    def bottom_arcs(self) -> t.Tuple[int, ...]:
        """The arcs crossing the bottom of a braid closure, in position order."""
        if not self.crossings:
            return (0,) * len(self.bottom_edges)
        return tuple(self.edge_arc[edge] for edge in self.bottom_edges)

    def arc_crossings(self) -> t.Tuple[t.Tuple[int, int, int, int, int], ...]:
        """Return ``(index, sign, over_arc, in_arc, out_arc)`` for every crossing."""
        arc = self.edge_arc
        return tuple((c.index, c.sign, arc[c.over_in], arc[c.under_in], arc[c.under_out]) for c in self.crossings)

    def crossing(self, index: int) -> Crossing:
        """Return crossing ``index`` or raise :class:`InvalidCrossing`."""
        if not 0 <= index < len(self.crossings):
            raise InvalidCrossing(f"Crossing {index} does not exist (diagram has {len(self.crossings)})")
        return self.crossings[index]

    @property
    def writhe(self) -> int:
        """Sum of the crossing signs."""
        return sum(c.sign for c in self.crossings)

    @property
    def pd_code(self) -> t.Tuple[t.Tuple[int, int, int, int], ...]:
        """All PD 4-tuples in crossing order."""
        return tuple(c.pd for c in self.crossings)

    @property
    def signs(self) -> t.Tuple[int, ...]:
        """All crossing signs in crossing order."""
        return tuple(c.sign for c in self.crossings)

    @classmethod
    def from_pd(
        cls,
        pd: t.Sequence[t.Sequence[int]],
        signs: t.Sequence[int],
        clasps: t.Iterable[t.Tuple[int, int]] = (),
    ) -> "PlanarDiagram":
        """Build a diagram from PD 4-tuples and an explicit sign list.

        Each tuple starts at the incoming under-edge. The direction of the over strand is read off the edge
        labels where they force it, so tables listing the ends clockwise are accepted too; only crossings left
        undetermined fall back to the counterclockwise reading of their sign.
        """
        if len(pd) != len(signs):
            raise InvalidDiagram(f"{len(pd)} PD tuples but {len(signs)} signs")
        for i, entry in enumerate(pd):
            if len(entry) != 4:
                raise InvalidDiagram(f"PD tuple {i} has {len(entry)} entries, expected 4")
        b_incoming = cls._over_directions(pd, signs)
        crossings = []
        for i, ((a, b, c, d), sign) in enumerate(zip(pd, signs)):
            over_in, over_out = (b, d) if b_incoming[i] else (d, b)
            crossings.append(Crossing(i, sign, under_in=a, under_out=c, over_in=over_in, over_out=over_out))
        return cls(crossings=tuple(crossings), clasp_marks=frozenset((a, b) for a, b in clasps))

    @staticmethod
    def _over_directions(pd: t.Sequence[t.Sequence[int]], signs: t.Sequence[int]) -> t.List[bool]:
        """For every crossing, whether the over strand enters through the second PD entry."""
        defaults = [sign < 0 for sign in signs]
        under_in = {entry[0] for entry in pd}
        under_out = {entry[2] for entry in pd}
        over_ends: t.Dict[int, t.List[t.Tuple[int, int]]] = {}
        for i, entry in enumerate(pd):
            for slot in (1, 3):
                over_ends.setdefault(entry[slot], []).append((i, slot))
        decided: t.Dict[int, bool] = {}
        queue: t.List[t.Tuple[int, int, bool]] = []
        for edge, ends in over_ends.items():
            if edge in under_out and edge not in under_in:
                queue.extend((i, slot, True) for i, slot in ends)
            elif edge in under_in and edge not in under_out:
                queue.extend((i, slot, False) for i, slot in ends)
        while queue:
            i, slot, incoming = queue.pop()
            b_in = incoming if slot == 1 else not incoming
            if i in decided:
                if decided[i] != b_in:
                    return defaults
                continue
            decided[i] = b_in
            for other_slot in (1, 3):
                edge = pd[i][other_slot]
                role = b_in if other_slot == 1 else not b_in
                queue.extend((j, s, not role) for j, s in over_ends[edge] if (j, s) != (i, other_slot))
        return [decided.get(i, default) for i, default in enumerate(defaults)]
