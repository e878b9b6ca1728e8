"""Exceptions raised by the library."""

import typing as t


class GordianColorsError(Exception):
    """Base class of every error raised by ``gordian_colors``."""


class DiagramError(GordianColorsError, ValueError):
    """A knot diagram or braid word is malformed."""


class MultiComponentClosure(DiagramError):
    """The closure of a braid (or a built diagram) has more than one component."""


class InvalidArc(DiagramError):
    """An arc id does not exist in the diagram."""


class InvalidCrossing(DiagramError):
    """A crossing id does not exist in the diagram."""


class InvalidDiagram(DiagramError):
    """The crossing records do not describe a single closed, oriented curve."""


class ColoringError(GordianColorsError, ValueError):
    """A coloring does not fit its diagram or class."""


class SpecMismatch(ColoringError):
    """A coloring uses values outside its conjugacy class."""


class BudgetExceeded(GordianColorsError):
    """A search visited more nodes than its ``node_limit`` allows."""

    def __init__(self, message: str, nodes: int, lower_bound: t.Optional[int] = None) -> None:
        super().__init__(message)
        self.nodes = nodes
        """Number of search nodes visited before giving up."""
        self.lower_bound = lower_bound
        """Best value proven before the budget ran out, if the search has one."""


class SectionError(GordianColorsError, ValueError):
    """Base class of clasp-section errors."""


class MalformedSection(SectionError):
    """The colors around a clasp section contradict its Wirtinger relations."""


class SynthesisExhausted(SectionError):
    """No replacement tangle within the budget satisfies all contracts."""


class CoverError(GordianColorsError, ValueError):
    """Base class of branched-cover errors."""


class NotSurjective(CoverError):
    """The coloring does not surject onto the symmetric group on three letters."""


class SchemaError(GordianColorsError, ValueError):
    """A JSON document does not match its schema."""

    def __init__(self, message: str, field: t.Optional[str] = None) -> None:
        super().__init__(f"{field}: {message}" if field else message)
        self.field = field
