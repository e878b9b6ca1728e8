"""A pair of neighbouring clasps inside a braid closure."""

import typing as t
from dataclasses import dataclass

from .braid_word import BraidWord
from .planar_diagram import PlanarDiagram


@dataclass(frozen=True)
class ClaspSection:
    """Two clasps on three consecutive braid positions ``s, s+1, s+2``.

    ``braid`` reads ``σ_{s+1} σ_{s+1} σ_s σ_s`` from letter ``start`` on: ``clasp_a`` then ``clasp_b``.
    ``diagram`` is the closure with the second letter of ``clasp_a`` reversed (the hooked clasp undone), and
    ``section_arcs`` are its arcs ``b_1 … b_5``: ``b_2``, ``b_3`` enter ``clasp_b`` at positions ``s``, ``s+1``,
    ``b_1``, ``b_4`` leave it there, and ``b_5`` enters ``clasp_a`` at position ``s+2``.
    """

    braid: BraidWord
    start: int
    diagram: PlanarDiagram
    clasp_a: t.Tuple[int, int]
    clasp_b: t.Tuple[int, int]
    section_arcs: t.Tuple[int, int, int, int, int]

    @property
    def position(self) -> int:
        """The 1-based position ``s``."""
        return abs(self.braid.letters[self.start + 2])
