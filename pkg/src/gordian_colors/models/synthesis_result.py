"""The outcome of rewriting a clasp section."""

from dataclasses import dataclass

from ..enums.case_label import CaseLabel
from .braid_word import BraidWord
from .class_coloring import ClassColoring
from .planar_diagram import PlanarDiagram


@dataclass(frozen=True)
class SynthesisResult:
    """A replacement knot together with its coloring and its two one-crossing neighbours."""

    label: CaseLabel
    braid: BraidWord
    """The braid whose closure is the replacement."""

    diagram: PlanarDiagram
    coloring: ClassColoring

    k0_witness: PlanarDiagram
    """One crossing change away from ``diagram``; equal to the undone-``clasp_a`` knot up to cancelling pairs."""

    k2_witness: PlanarDiagram
    """One crossing change away from ``diagram``; equal to the undone-``clasp_b`` knot up to cancelling pairs."""

    identity: bool = False
    """``True`` when the original section was kept."""
