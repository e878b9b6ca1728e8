"""Assemble knot diagrams from crossing slots wired together by strands."""

import logging
import typing as t
from dataclasses import dataclass, field

from ..errors import InvalidDiagram, MultiComponentClosure
from ..models.planar_diagram import Crossing, PlanarDiagram


log = logging.getLogger(__name__)


class Port(t.NamedTuple):
    """One end of one strand of a crossing slot.

    ``strand`` is ``"o"`` (over) or ``"u"`` (under). End ``0`` to end ``1`` is the reference direction
    against which the slot's ``base_sign`` is stated.
    """

    slot: int
    strand: str
    end: int

    @property
    def other(self) -> "Port":
        return Port(self.slot, self.strand, 1 - self.end)


Node = t.Union[Port, str]
"""A port or a named terminal (a point on a strand without a crossing)."""


@dataclass
class BraidHandle:
    """Terminals and level nodes of a braid placed into a :class:`DiagramBuilder`."""

    bottom: t.List[str]
    """Bottom terminal of each position."""

    top: t.List[str]
    """Top terminal of each position."""

    levels: t.List[t.List[Node]] = field(default_factory=list)
    """``levels[h][p]`` is the node just below letter ``h`` at position ``p`` (``h == len(word)`` is the top)."""


class DiagramBuilder:
    """Wire crossing slots and terminals, then walk the result into a :class:`PlanarDiagram`.

    Every port is linked to exactly one node and every terminal to exactly two. Edges are numbered in the
    order the walk meets them; the edge running into the starting port is edge ``0``. The sign of a slot is
    its ``base_sign`` times the direction factor of both strands (``+1`` when walked from end ``0``).
    """

    def __init__(self) -> None:
        self._base_signs: t.List[int] = []
        self._links: t.Dict[Node, t.List[Node]] = {}
        self._terminals: t.List[str] = []
        self._node_edge: t.Dict[Node, int] = {}

    # ---- wiring -----------------------------------------------------------------------------------------

    def add_slot(self, base_sign: int) -> int:
        """Create a crossing slot; slots are numbered in creation order and become crossing ids."""
        if base_sign not in (1, -1):
            raise InvalidDiagram(f"Base sign must be +1 or -1, got {base_sign}")
        self._base_signs.append(base_sign)
        return len(self._base_signs) - 1

    def add_terminal(self, name: str) -> str:
        if name in self._links:
            raise InvalidDiagram(f"Terminal {name!r} already exists")
        self._links[name] = []
        self._terminals.append(name)
        return name

    def connect(self, a: Node, b: Node) -> None:
        """Join two nodes by a piece of strand."""
        for node in (a, b):
            links = self._links.setdefault(node, [])
            limit = 1 if isinstance(node, Port) else 2
            if len(links) >= limit:
                raise InvalidDiagram(f"Node {node!r} is already fully connected")
        self._links[a].append(b)
        self._links[b].append(a)

    def add_braid(self, strands: int, letters: t.Sequence[int], prefix: str = "") -> BraidHandle:
        """Place a braid, strands running upward; letter ``k`` of the word becomes the ``k``-th new slot."""
        bottom = [self.add_terminal(f"{prefix}bottom{p}") for p in range(strands)]
        current: t.List[Node] = list(bottom)
        levels: t.List[t.List[Node]] = [list(current)]
        for letter in letters:
            i = abs(letter) - 1
            slot = self.add_slot(1 if letter > 0 else -1)
            # the strand starting on the left goes over for a positive letter and under for a negative one
            left, right = ("o", "u") if letter > 0 else ("u", "o")
            self.connect(current[i], Port(slot, left, 0))
            self.connect(current[i + 1], Port(slot, right, 0))
            current[i], current[i + 1] = Port(slot, right, 1), Port(slot, left, 1)
            levels.append(list(current))
        top = [self.add_terminal(f"{prefix}top{p}") for p in range(strands)]
        for node, terminal in zip(current, top):
            self.connect(node, terminal)
        return BraidHandle(bottom=bottom, top=top, levels=levels)

    # ---- walking ----------------------------------------------------------------------------------------

    def _follow(self, start: Node, previous: t.Optional[Node]) -> t.Tuple[Port, t.List[Node]]:
        """Walk from ``start`` through terminals to the next port; return it and the nodes passed."""
        passed: t.List[Node] = [start]
        node, came_from = start, previous
        while True:
            links = list(self._links.get(node, ()))
            if came_from is not None:
                links.remove(came_from)
            if not links:
                raise InvalidDiagram(f"Strand ends at {node!r}")
            came_from, node = node, links[0]
            if isinstance(node, Port):
                return node, passed
            passed.append(node)
            if len(passed) > len(self._links):
                raise MultiComponentClosure("A closed strand without crossings")

    def build(
        self,
        start: Port,
        bottom: t.Sequence[str] = (),
        clasps: t.Iterable[t.Tuple[int, int]] = (),
    ) -> PlanarDiagram:
        """Walk the knot from ``start`` (entered there) and return the diagram."""
        slots = len(self._base_signs)
        for slot in range(slots):
            for strand in ("o", "u"):
                for end in (0, 1):
                    if len(self._links.get(Port(slot, strand, end), ())) != 1:
                        raise InvalidDiagram(f"Port {Port(slot, strand, end)!r} is not connected")

        passages: t.Dict[t.Tuple[int, str], t.Tuple[int, int, int]] = {}
        self._node_edge = {}
        next_edge = 1
        entry, entry_edge = start, 0
        while True:
            key = (entry.slot, entry.strand)
            if key in passages:
                raise InvalidDiagram(f"Strand {key!r} is walked twice")
            exit_port = entry.other
            target, passed = self._follow(exit_port, None)
            edge = 0 if target == start else next_edge
            if edge:
                next_edge += 1
            for node in passed:
                self._node_edge[node] = edge
            self._node_edge[target] = edge
            passages[key] = (entry_edge, edge, 1 if entry.end == 0 else -1)
            if target == start:
                break
            entry, entry_edge = target, edge

        if len(passages) != 2 * slots or len(self._node_edge) != len(self._links):
            raise MultiComponentClosure(
                f"Walk from {start!r} covered {len(passages)} of {2 * slots} strands; "
                "the diagram has several components"
            )

        crossings = []
        for slot, base in enumerate(self._base_signs):
            over_in, over_out, over_dir = passages[(slot, "o")]
            under_in, under_out, under_dir = passages[(slot, "u")]
            crossings.append(Crossing(slot, base * over_dir * under_dir, under_in, under_out, over_in, over_out))
        log.debug("built diagram with %d crossings", slots)
        return PlanarDiagram(
            crossings=tuple(crossings),
            clasp_marks=frozenset(clasps),
            bottom_edges=tuple(self._node_edge[terminal] for terminal in bottom),
        )

    def edge_at(self, node: Node) -> int:
        """Return the edge attached to ``node`` on its outer side; valid after :meth:`build`."""
        try:
            return self._node_edge[node]
        except KeyError:
            raise InvalidDiagram(f"Node {node!r} was not reached by the walk") from None
