"""A small language naming the knots the command line builds."""

import typing as t

from regex import regex

from ..diagram import (
    STANDARD_BRAIDS,
    braid_closure,
    connected_sum,
    mirror,
    pretzel_diagram,
    trefoil_sum_braid,
    whitehead_double_diagram,
)
from ..errors import DiagramError, SchemaError
from ..models.braid_word import BraidWord
from ..models.planar_diagram import PlanarDiagram


class KnotExpression:
    """Parse knot expressions.

    ::

        expr     := summand ("#" summand)*
        summand  := "(" expr ")" | "m(" expr ")" | NAME | "trefoil-sum" K | "whitehead" M
                  | "pretzel" P Q R | "braid" N ":" LETTERS

    ``NAME`` is a table knot such as ``3_1``; ``LETTERS`` are signed generator indices separated by spaces or
    commas.
    """

    SUMMAND = regex.compile(r"(?:[^#()]++|(?P<group>\((?:[^()]++|(?&group))*\)))+")
    MIRROR = regex.compile(r"m\s*\((?P<inner>.*)\)", regex.DOTALL)
    GROUPED = regex.compile(r"\((?P<inner>.*)\)", regex.DOTALL)
    NAMED = regex.compile(r"(?P<name>\d+_\d+)")
    TREFOIL_SUM = regex.compile(r"trefoil-sum\s+(?P<k>\d+)")
    WHITEHEAD = regex.compile(r"whitehead\s+(?P<m>\d+)")
    PRETZEL = regex.compile(r"pretzel\s+(?P<p>-?\d+)\s+(?P<q>-?\d+)\s+(?P<r>-?\d+)")
    BRAID = regex.compile(r"braid\s+(?P<n>\d+)\s*:\s*(?P<letters>-?\d+(?:[\s,]+-?\d+)*)?")

    @classmethod
    def parse(cls, text: str) -> PlanarDiagram:
        """Build the diagram named by ``text``; syntax errors raise :class:`SchemaError`."""
        summands = cls.split(text)
        diagram = cls._summand(summands[0])
        for summand in summands[1:]:
            diagram = connected_sum(diagram, cls._summand(summand))
        return diagram

    @classmethod
    def split(cls, text: str) -> t.List[str]:
        """Split at the ``#`` signs outside parentheses."""
        summands = [match.group(0) for match in cls.SUMMAND.finditer(text)]
        rest = cls.SUMMAND.sub("", text)
        if not summands or rest.strip() != "#" * (len(summands) - 1) or any(not s.strip() for s in summands):
            raise SchemaError(f"cannot split {text!r} into summands", field="knot")
        return [summand.strip() for summand in summands]

    @classmethod
    def braid(cls, text: str) -> t.Optional[BraidWord]:
        """Return the braid word of a ``braid`` or ``trefoil-sum`` expression, ``None`` for other expressions."""
        text = text.strip()
        if match := cls.BRAID.fullmatch(text):
            letters = regex.split(r"[\s,]+", match.group("letters") or "")
            try:
                return BraidWord(int(match.group("n")), tuple(int(letter) for letter in letters if letter))
            except DiagramError as e:
                raise SchemaError(str(e), field="knot") from e
        if match := cls.TREFOIL_SUM.fullmatch(text):
            return trefoil_sum_braid(int(match.group("k")))
        if match := cls.NAMED.fullmatch(text):
            return STANDARD_BRAIDS.get(match.group("name"))
        return None

    @classmethod
    def _summand(cls, text: str) -> PlanarDiagram:
        if match := cls.MIRROR.fullmatch(text):
            return mirror(cls.parse(match.group("inner")))
        if match := cls.GROUPED.fullmatch(text):
            return cls.parse(match.group("inner"))
        if match := cls.NAMED.fullmatch(text):
            if match.group("name") not in STANDARD_BRAIDS:
                raise SchemaError(f"unknown knot {text!r}; known: {', '.join(sorted(STANDARD_BRAIDS))}", field="knot")
        if match := cls.WHITEHEAD.fullmatch(text):
            return whitehead_double_diagram(int(match.group("m")))
        if match := cls.PRETZEL.fullmatch(text):
            return pretzel_diagram(int(match.group("p")), int(match.group("q")), int(match.group("r")))
        word = cls.braid(text)
        if word is None:
            raise SchemaError(f"unrecognised knot expression {text!r}", field="knot")
        return braid_closure(word)
