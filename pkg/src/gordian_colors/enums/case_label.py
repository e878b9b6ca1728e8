"""An enum of the coloring patterns at a clasp section."""

from dataclasses import dataclass
from enum import Enum


@dataclass(frozen=True)
class _CaseLabelDataMixin:
    """Case label data mixin."""

    label: str
    precedence: int


class CaseLabel(_CaseLabelDataMixin, Enum):
    """An enum of the coloring patterns at a clasp section.

    When a color satisfies several subcases, the one with the lowest ``precedence`` wins.
    """

    CASE1 = "case1", 0
    """``b_1`` and ``b_2`` carry the same transposition."""

    CASE2A = "case2a", 1
    """``b_5`` commutes with ``(jk)``; the original knot keeps the coloring."""

    CASE2B = "case2b", 2
    """``b_5`` commutes with ``(ij)``."""

    CASE2C = "case2c", 3
    """``b_5`` commutes with ``(ik)``."""
