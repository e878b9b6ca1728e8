"""JSON documents read and written by the command line."""

import json
import typing as t
from dataclasses import replace
from fractions import Fraction

from ..diagram import braid_closure
from ..errors import ColoringError, DiagramError, SchemaError
from ..models.braid_word import BraidWord
from ..models.class_coloring import ClassColoring
from ..models.class_spec import ClassSpec
from ..models.cover_presentation import CoverPresentation
from ..models.fox_space import FoxSpace
from ..models.homology_decomposition import HomologyDecomposition
from ..models.linking_set import LinkingObstruction, LinkingSet
from ..models.permutation_number import PermutationNumber
from ..models.planar_diagram import PlanarDiagram
from ..models.synthesis_result import SynthesisResult
from .permutation_utils import PermutationUtils


Document = t.Dict[str, t.Any]


class SerializationUtils:
    """Conversions between the library's models and plain JSON documents."""

    @staticmethod
    def dumps(document: t.Any) -> str:
        """Serialize with sorted keys, two-space indentation and a trailing newline."""
        return json.dumps(document, sort_keys=True, indent=2, ensure_ascii=False) + "\n"

    @staticmethod
    def loads(text: str, source: str = "<input>") -> Document:
        """Parse a JSON object; anything else raises :class:`SchemaError` naming ``source``."""
        try:
            document = json.loads(text)
        except json.JSONDecodeError as e:
            raise SchemaError(f"invalid JSON: {e}", field=source) from e
        if not isinstance(document, dict):
            raise SchemaError("expected a JSON object", field=source)
        return document

    @staticmethod
    def rational(value: Fraction) -> str:
        """``"p/q"``, or ``"p"`` for integers."""
        return str(value)

    @staticmethod
    def _require(document: Document, key: str, kind: t.Union[type, t.Tuple[type, ...]]) -> t.Any:
        if key not in document:
            raise SchemaError("missing", field=key)
        value = document[key]
        if not isinstance(value, kind) or isinstance(value, bool):
            raise SchemaError(f"unexpected value {value!r}", field=key)
        return value

    @classmethod
    def _int_list(cls, document: Document, key: str) -> t.List[int]:
        values = cls._require(document, key, list)
        if not all(isinstance(v, int) and not isinstance(v, bool) for v in values):
            raise SchemaError("expected a list of integers", field=key)
        return values

    # ---- diagrams ---------------------------------------------------------------------------------------

    @staticmethod
    def diagram_to_dict(d: PlanarDiagram) -> Document:
        return {
            "crossings": [list(entry) for entry in d.pd_code],
            "signs": list(d.signs),
            "clasps": sorted(list(pair) for pair in d.clasp_marks),
            "bottom": list(d.bottom_edges),
        }

    @staticmethod
    def braid_to_dict(word: BraidWord) -> Document:
        return {"strands": word.strands, "word": list(word.letters)}

    @classmethod
    def braid_from_dict(cls, document: Document) -> BraidWord:
        strands = cls._require(document, "strands", int)
        letters = cls._int_list(document, "word")
        try:
            return BraidWord(strands, tuple(letters))
        except DiagramError as e:
            raise SchemaError(str(e), field="word") from e

    @classmethod
    def diagram_from_dict(cls, document: Document) -> PlanarDiagram:
        """Read a PD document, or a braid document whose closure is taken.

        A PD document is ``{"crossings": [[a, b, c, d], …], "signs": [±1, …], "clasps": [[i, j], …]}``;
        ``clasps`` and ``bottom`` are optional.
        """
        if "crossings" not in document:
            return braid_closure(cls.braid_from_dict(document))
        crossings = cls._require(document, "crossings", list)
        if not all(isinstance(entry, list) for entry in crossings):
            raise SchemaError("expected a list of 4-tuples", field="crossings")
        signs = cls._int_list(document, "signs")
        clasps = document.get("clasps", [])
        if not isinstance(clasps, list) or not all(isinstance(c, list) and len(c) == 2 for c in clasps):
            raise SchemaError("expected a list of crossing pairs", field="clasps")
        try:
            d = PlanarDiagram.from_pd(crossings, signs, [(a, b) for a, b in clasps])
            if "bottom" in document:
                d = replace(d, bottom_edges=tuple(cls._int_list(document, "bottom")))
        except (DiagramError, TypeError) as e:
            raise SchemaError(str(e), field="crossings") from e
        return d

    # ---- colorings --------------------------------------------------------------------------------------

    @classmethod
    def coloring_to_dict(cls, c: ClassColoring) -> Document:
        return {
            "group": c.spec.name,
            "class": c.spec.kind.class_name,
            "assignment": {
                str(arc): list(PermutationUtils.to_cycles(color)[0]) for arc, color in enumerate(c.assignment)
            },
        }

    @classmethod
    def coloring_from_dict(cls, document: Document) -> ClassColoring:
        """Read ``{"group": "S5", "class": "transpositions", "assignment": {"0": [1, 2], …}}``.

        Each color is one 1-based cycle and the keys must name the arcs ``0..A-1``.
        """
        group = cls._require(document, "group", str)
        assignment = cls._require(document, "assignment", dict)
        try:
            spec = ClassSpec.from_name(group, document.get("class"))
        except ColoringError as e:
            raise SchemaError(str(e), field="group") from e
        try:
            by_arc = {int(key): cycle for key, cycle in assignment.items()}
        except ValueError as e:
            raise SchemaError("keys must be arc ids", field="assignment") from e
        if sorted(by_arc) != list(range(len(assignment))):
            raise SchemaError(f"arc ids {sorted(by_arc)} are not 0..{len(assignment) - 1}", field="assignment")
        colors = []
        for arc, cycle in sorted(by_arc.items()):
            try:
                if not isinstance(cycle, list):
                    raise TypeError(f"expected a cycle, got {cycle!r}")
                colors.append(PermutationUtils.from_cycle(spec.degree, cycle))
            except (TypeError, ValueError) as e:
                raise SchemaError(str(e), field=f"assignment.{arc}") from e
        try:
            return ClassColoring(spec, tuple(colors))
        except ColoringError as e:
            raise SchemaError(str(e), field="assignment") from e

    # ---- reports ----------------------------------------------------------------------------------------

    @staticmethod
    def fox_to_dict(space: FoxSpace) -> Document:
        return {"p": space.p, "dimension": space.dimension, "basis": [list(v) for v in space.basis]}

    @classmethod
    def permutation_number_to_dict(cls, result: PermutationNumber) -> Document:
        witness = result.witnesses.get(result.value)
        return {
            "p": result.value,
            "n_max": result.n_max,
            "degrees": list(result.degrees),
            "witness": cls.coloring_to_dict(witness) if witness is not None else None,
        }

    @staticmethod
    def homology_to_dict(h: HomologyDecomposition) -> Document:
        return {"free_rank": h.free_rank, "invariant_factors": list(h.invariant_factors)}

    @staticmethod
    def cover_to_dict(cp: CoverPresentation) -> Document:
        return {
            "generators": cp.generator_count,
            "labels": list(cp.presentation.labels or ()),
            "relators": [list(relator) for relator in cp.relators],
            "transversal": [list(word) for word in cp.transversal],
        }

    @classmethod
    def linking_to_dict(cls, linking: LinkingSet, knot: t.Optional[str] = None) -> Document:
        return {
            "knot": knot,
            "lk": [cls.rational(v) for v in linking.values],
            "orbits": {cls.rational(v): n for v, n in linking.orbits},
            "undefined": linking.undefined_count,
        }

    @classmethod
    def obstruction_to_dict(
        cls, report: LinkingObstruction, first: t.Optional[str] = None, second: t.Optional[str] = None
    ) -> Document:
        return {
            "first": cls.linking_to_dict(report.first, first),
            "second": cls.linking_to_dict(report.second, second),
            "common": [cls.rational(v) for v in report.common],
            "disjoint": report.disjoint,
            "second_twice_colorable": report.second_twice_colorable,
            "obstructed_if_conjecture": report.obstructed,
        }

    @classmethod
    def synthesis_to_dict(cls, result: SynthesisResult) -> Document:
        return {
            "case": result.label.label,
            "braid": cls.braid_to_dict(result.braid),
            "identity": result.identity,
            "coloring": cls.coloring_to_dict(result.coloring),
            "diagram": cls.diagram_to_dict(result.diagram),
        }
