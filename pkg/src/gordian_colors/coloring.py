"""Colorings of knot diagrams by conjugacy classes, the permutation number, and Fox colorings."""

import logging
import threading
import typing as t
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache
from math import factorial

import networkx as nx
from sympy import isprime
from sympy.combinatorics import Permutation, PermutationGroup
from sympy.combinatorics.named_groups import AlternatingGroup, SymmetricGroup

from .diagram import whitehead_braid, whitehead_double_diagram
from .enums.class_kind import ClassKind
from .enums.group_kind import GroupKind
from .errors import BudgetExceeded, ColoringError
from .models.class_coloring import ClassColoring
from .models.class_spec import ClassSpec
from .models.coloring_check import ColoringCheck
from .models.fox_space import FoxSpace
from .models.permutation_number import MeridionalRankCertificate, PermutationNumber
from .models.planar_diagram import PlanarDiagram
from .models.solver_options import SolverOptions
from .utils.linear_algebra import LinearAlgebra
from .utils.permutation_utils import Perm, PermutationUtils


log = logging.getLogger(__name__)

MONOCHROMATIC_COMBINATIONS: t.Tuple[t.Tuple[int, int], ...] = ((1, 0), (0, 1), (1, 1), (1, -1))
"""Coefficients ``(λ, μ)`` tried in order by :func:`monochromatic_combination`."""

MAX_DEGREE = 12


# ---- structure of the diagram ---------------------------------------------------------------------------


def overpass_count(d: PlanarDiagram) -> int:
    """Return the number of arcs that pass over at least one crossing (the maximal overpasses)."""
    return len({over for _, _, over, _, _ in d.arc_crossings()})


def _closure(d: PlanarDiagram, known: t.Set[int]) -> t.Set[int]:
    """Arcs whose colors are forced once the arcs in ``known`` are colored."""
    known = set(known)
    crossings = d.arc_crossings()
    changed = True
    while changed:
        changed = False
        for _, _, over, arc_in, arc_out in crossings:
            if over not in known:
                continue
            if arc_in in known and arc_out not in known:
                known.add(arc_out)
                changed = True
            elif arc_out in known and arc_in not in known:
                known.add(arc_in)
                changed = True
    return known


def seed_arcs(d: PlanarDiagram) -> t.Tuple[int, ...]:
    """Return arcs whose colors force every other color.

    The bottom arcs of a braid closure come first; the rest are chosen greedily, each time the arc forcing the most
    new colors (ties broken by the lower arc id). The seeds' colors generate the image of any coloring.
    """
    seeds: t.List[int] = []
    known: t.Set[int] = set()
    for arc in dict.fromkeys(d.bottom_arcs):
        if arc not in known:
            seeds.append(arc)
            known = _closure(d, known | {arc})
    while len(known) < d.arc_count:
        best = max(
            (arc for arc in range(d.arc_count) if arc not in known),
            key=lambda arc: (len(_closure(d, known | {arc})), -arc),
        )
        seeds.append(best)
        known = _closure(d, known | {best})
    log.debug("seed arcs %s", seeds)
    return tuple(seeds)


def diagram_bound(d: PlanarDiagram) -> int:
    """Return ``min(overpasses, seeds) + 1``, an upper bound for the permutation number (at least 2)."""
    return max(2, min(overpass_count(d), len(seed_arcs(d))) + 1)


# ---- checking and extending ------------------------------------------------------------------------------


def check_coloring(d: PlanarDiagram, c: ClassColoring) -> ColoringCheck:
    """Check ``out = over^ε ∘ in ∘ over^-ε`` at every crossing; report the first crossing that fails."""
    if len(c) != d.arc_count:
        raise ColoringError(f"Coloring has {len(c)} arcs, the diagram has {d.arc_count}")
    for index, sign, over, arc_in, arc_out in d.arc_crossings():
        if PermutationUtils.twist(c[over], c[arc_in], sign) != c[arc_out]:
            return ColoringCheck(False, index)
    return ColoringCheck(True)


def is_surjective_transpositions(colors: t.Iterable[Perm], n: int) -> bool:
    """Return ``True`` when the transpositions generate ``S_n``: their graph on ``1..n`` is connected."""
    graph = PermutationUtils.transposition_graph(colors, n)
    return graph.number_of_edges() > 0 and nx.is_connected(graph) if n > 1 else True


def is_surjective(colors: t.Iterable[Perm], spec: ClassSpec) -> bool:
    """Return ``True`` when the colors generate the group of ``spec``."""
    colors = list(colors)
    if spec.kind is ClassKind.TRANSPOSITIONS:
        return is_surjective_transpositions(colors, spec.degree)
    if not nx.is_connected(PermutationUtils.orbit_graph(colors, spec.degree)):
        return False
    group = PermutationGroup([Permutation(list(color)) for color in colors])
    return group.order() == factorial(spec.degree) // 2


class _ClassTables:
    """Conjugation tables on class indices."""

    def __init__(self, spec: ClassSpec) -> None:
        elements = spec.elements
        self.forward = [[spec.index(PermutationUtils.conjugate(a, b)) for b in elements] for a in elements]
        self.backward = [
            [spec.index(PermutationUtils.conjugate(PermutationUtils.inverse(a), b)) for b in elements]
            for a in elements
        ]

    def twist(self, over: int, under: int, sign: int) -> int:
        return (self.forward if sign > 0 else self.backward)[over][under]


@lru_cache(maxsize=None)
def _tables(spec: ClassSpec) -> _ClassTables:
    return _ClassTables(spec)


@lru_cache(maxsize=None)
def _group(spec: ClassSpec) -> PermutationGroup:
    return SymmetricGroup(spec.degree) if spec.group is GroupKind.SYMMETRIC else AlternatingGroup(spec.degree)


def _orbit_representatives(spec: ClassSpec, generators: t.Sequence[Perm]) -> t.List[int]:
    """Least class index of every orbit of the group generated by ``generators`` acting by conjugation."""
    seen: t.Set[int] = set()
    representatives = []
    for start in range(len(spec.elements)):
        if start in seen:
            continue
        representatives.append(start)
        queue = deque([start])
        seen.add(start)
        while queue:
            current = spec.elements[queue.popleft()]
            for g in generators:
                image = spec.index(PermutationUtils.conjugate(g, current))
                if image not in seen:
                    seen.add(image)
                    queue.append(image)
    return representatives


@lru_cache(maxsize=None)
def _first_choices(spec: ClassSpec) -> t.Tuple[int, ...]:
    generators = [tuple(g.array_form) for g in _group(spec).generators]
    return tuple(_orbit_representatives(spec, generators))


@lru_cache(maxsize=None)
def _second_choices(spec: ClassSpec, first: int) -> t.Tuple[int, ...]:
    centralizer = _group(spec).centralizer(Permutation(list(spec.elements[first])))
    generators = [tuple(g.array_form) for g in centralizer.generators]
    return tuple(_orbit_representatives(spec, generators))


def _propagate(
    colors: t.List[t.Optional[int]],
    arcs: t.Iterable[int],
    crossings: t.Sequence[t.Tuple[int, int, int, int]],
    incident: t.Sequence[t.Sequence[int]],
    tables: _ClassTables,
) -> bool:
    """Force colors from ``arcs`` outward; return ``False`` on a contradiction."""
    queue = deque(arcs)
    while queue:
        arc = queue.popleft()
        for crossing in incident[arc]:
            sign, over, arc_in, arc_out = crossings[crossing]
            o = colors[over]
            if o is None:
                continue
            i, u = colors[arc_in], colors[arc_out]
            if i is not None:
                expected = tables.twist(o, i, sign)
                if u is None:
                    colors[arc_out] = expected
                    queue.append(arc_out)
                elif u != expected:
                    return False
            elif u is not None:
                colors[arc_in] = tables.twist(o, u, -sign)
                queue.append(arc_in)
    return True


class _Counter:
    def __init__(self, limit: t.Optional[int]) -> None:
        self.limit = limit
        self.nodes = 0
        self._lock = threading.Lock()

    def tick(self) -> None:
        with self._lock:
            self.nodes += 1
            if self.limit is not None and self.nodes > self.limit:
                raise BudgetExceeded(f"Coloring search exceeded {self.limit} nodes", self.nodes)


class _ColoringSearch:
    """Backtracking over seed arcs with forced propagation in between."""

    def __init__(self, d: PlanarDiagram, spec: ClassSpec, opts: SolverOptions) -> None:
        self.d = d
        self.spec = spec
        self.opts = opts
        self.tables = _tables(spec)
        self.crossings = [(sign, over, arc_in, arc_out) for _, sign, over, arc_in, arc_out in d.arc_crossings()]
        incident: t.List[t.List[int]] = [[] for _ in range(d.arc_count)]
        for k, (_, over, arc_in, arc_out) in enumerate(self.crossings):
            for arc in {over, arc_in, arc_out}:
                incident[arc].append(k)
        self.incident = incident
        pinned = dict(opts.seeds or {})
        self.pinned = {arc: spec.index(tuple(color)) for arc, color in pinned.items()}
        for arc in self.pinned:
            if not 0 <= arc < d.arc_count:
                raise ColoringError(f"Pinned arc {arc} does not exist")
        self.order = list(dict.fromkeys(list(self.pinned) + list(seed_arcs(d))))
        # pinned colors already break the conjugation symmetry
        self.breaking = opts.up_to_conjugation and not self.pinned
        self.counter = _Counter(opts.node_limit)

    def start(self) -> t.Optional[t.List[t.Optional[int]]]:
        colors: t.List[t.Optional[int]] = [None] * self.d.arc_count
        for arc, index in self.pinned.items():
            if colors[arc] is not None and colors[arc] != index:
                return None
            colors[arc] = index
        if not _propagate(colors, list(self.pinned), self.crossings, self.incident, self.tables):
            return None
        return colors

    def _choices(self, decisions: t.Tuple[int, ...]) -> t.Sequence[int]:
        if self.breaking and not decisions:
            return _first_choices(self.spec)
        if self.breaking and len(decisions) == 1:
            return _second_choices(self.spec, decisions[0])
        return range(len(self.spec.elements))

    def expand(
        self, colors: t.List[t.Optional[int]], depth: int, decisions: t.Tuple[int, ...], levels: t.Optional[int]
    ) -> t.Iterator[t.Tuple[t.List[t.Optional[int]], int, t.Tuple[int, ...]]]:
        """Yield complete assignments, or partial ones once ``levels`` decisions have been made."""
        while depth < len(self.order) and colors[self.order[depth]] is not None:
            depth += 1
        if depth == len(self.order) or (levels is not None and len(decisions) == levels):
            yield colors, depth, decisions
            return
        arc = self.order[depth]
        for choice in self._choices(decisions):
            self.counter.tick()
            trial = list(colors)
            trial[arc] = choice
            if _propagate(trial, (arc,), self.crossings, self.incident, self.tables):
                yield from self.expand(trial, depth + 1, decisions + (choice,), levels)

    def leaves(
        self, colors: t.List[t.Optional[int]], depth: int, decisions: t.Tuple[int, ...]
    ) -> t.Iterator[t.List[int]]:
        for leaf, _, _ in self.expand(colors, depth, decisions, None):
            if any(color is None for color in leaf):
                raise ColoringError("Seed arcs did not force every color")
            assignment = t.cast(t.List[int], leaf)
            if not self._consistent(assignment):
                continue
            if is_surjective((self.spec.elements[i] for i in set(assignment)), self.spec):
                yield assignment

    def _consistent(self, assignment: t.Sequence[int]) -> bool:
        return all(
            self.tables.twist(assignment[over], assignment[arc_in], sign) == assignment[arc_out]
            for sign, over, arc_in, arc_out in self.crossings
        )

    def key(self, assignment: t.Sequence[int]) -> t.Tuple[int, ...]:
        if not self.breaking:
            return tuple(assignment)
        return ClassColoring(self.spec, tuple(self.spec.elements[i] for i in assignment)).canonical().sort_key()


def _run(search: _ColoringSearch, first_only: bool) -> t.List[t.List[int]]:
    """Run the search, split over the first two decisions when several threads are allowed."""
    colors = search.start()
    if colors is None:
        return []

    def complete(task: t.Tuple[t.List[t.Optional[int]], int, t.Tuple[int, ...]]) -> t.List[t.List[int]]:
        found = []
        for leaf in search.leaves(*task):
            found.append(leaf)
            if first_only:
                break
        return found

    tasks = list(search.expand(colors, 0, (), 2))
    if search.opts.threads <= 1:
        results = [complete(task) for task in tasks]
    else:
        with ThreadPoolExecutor(max_workers=search.opts.threads) as executor:
            results = list(executor.map(complete, tasks))
    return [leaf for found in results for leaf in found]


def solve_class_colorings(
    d: PlanarDiagram, spec: ClassSpec, opts: t.Optional[SolverOptions] = None
) -> t.Iterator[ClassColoring]:
    """Yield the surjective colorings of ``d`` by ``spec``, in canonical order.

    With ``opts.up_to_conjugation`` (the default) one coloring per conjugacy orbit is yielded, the least one under
    the canonical ordering of class elements.
    """
    opts = opts or SolverOptions()
    search = _ColoringSearch(d, spec, opts)
    leaves = _run(search, first_only=False)
    keys = sorted({search.key(leaf) for leaf in leaves})
    log.debug(
        "%s colorings of a %d-arc diagram: %d found, %d nodes", spec.name, d.arc_count, len(keys), search.counter.nodes
    )
    for key in keys:
        yield ClassColoring(spec, tuple(spec.elements[i] for i in key))


def first_coloring(
    d: PlanarDiagram, spec: ClassSpec, opts: t.Optional[SolverOptions] = None
) -> t.Optional[ClassColoring]:
    """Return one surjective coloring, or ``None``; the search stops at the first solution of each branch."""
    opts = opts or SolverOptions()
    search = _ColoringSearch(d, spec, opts)
    leaves = _run(search, first_only=True)
    if not leaves:
        return None
    key = min(search.key(leaf) for leaf in leaves)
    return ClassColoring(spec, tuple(spec.elements[i] for i in key))


def extend_coloring(d: PlanarDiagram, spec: ClassSpec, seeds: t.Mapping[int, Perm]) -> ClassColoring:
    """Force the colors of all arcs from ``seeds``; raise :class:`ColoringError` if they conflict or fall short."""
    search = _ColoringSearch(d, spec, SolverOptions(up_to_conjugation=False, seeds=seeds, threads=1))
    colors = search.start()
    if colors is None:
        raise ColoringError(f"Seed colors {dict(seeds)} contradict a crossing relation")
    missing = [arc for arc, color in enumerate(colors) if color is None]
    if missing:
        raise ColoringError(f"Seed colors do not force arcs {missing}")
    return ClassColoring(spec, tuple(spec.elements[t.cast(int, i)] for i in colors))


# ---- permutation number ----------------------------------------------------------------------------------


def permutation_number(
    d: PlanarDiagram, n_max: t.Optional[int] = None, opts: t.Optional[SolverOptions] = None
) -> PermutationNumber:
    """Return the largest ``n <= n_max`` admitting a surjective transposition coloring onto ``S_n``.

    Every degree in ``2..n_max`` is searched, since colorability is not monotone in ``n``. ``n_max`` defaults to
    :func:`diagram_bound`. When a search runs out of nodes, :class:`BudgetExceeded` carries the best degree found.
    """
    n_max = diagram_bound(d) if n_max is None else n_max
    if n_max < 2:
        raise ValueError(f"n_max must be at least 2, got {n_max}")
    if n_max > MAX_DEGREE:
        log.warning("capping n_max=%d at %d", n_max, MAX_DEGREE)
        n_max = MAX_DEGREE
    witnesses: t.Dict[int, ClassColoring] = {}
    for n in range(2, n_max + 1):
        try:
            found = first_coloring(d, ClassSpec.symmetric(n), opts)
        except BudgetExceeded as e:
            best = max(witnesses, default=2)
            raise BudgetExceeded(
                f"Search for S_{n} colorings exceeded its node limit; p >= {best}", e.nodes, lower_bound=best
            ) from e
        if found is not None:
            witnesses[n] = found
    value = max(witnesses, default=2)
    log.info("permutation number %d (searched up to %d)", value, n_max)
    return PermutationNumber(value=value, n_max=n_max, witnesses=witnesses)


def gn_member(d: PlanarDiagram, n: int, opts: t.Optional[SolverOptions] = None) -> bool:
    """Return ``True`` when some ``m >= n`` up to the diagram bound admits a surjective ``S_m`` coloring."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n == 1:
        return True
    bound = min(diagram_bound(d), MAX_DEGREE)
    return any(first_coloring(d, ClassSpec.symmetric(m), opts) is not None for m in range(max(n, 2), bound + 1))


def meridional_rank_certificate(m: int, opts: t.Optional[SolverOptions] = None) -> MeridionalRankCertificate:
    """Bound the meridional rank and bridge number of the ``m``-th Whitehead double from both sides."""
    d = whitehead_double_diagram(m)
    strands = whitehead_braid(m).strands
    number = permutation_number(d, n_max=strands + 1, opts=opts)
    return MeridionalRankCertificate(
        permutation_number=number.value, seed_count=len(seed_arcs(d)), strands=strands
    )


# ---- Fox colorings ---------------------------------------------------------------------------------------


def fox_coloring_space(d: PlanarDiagram, p: int) -> FoxSpace:
    """Return the Fox ``p``-colorings of ``d``: the kernel of ``2·over − in − out`` over ``Z/p``."""
    if p < 3 or not isprime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    rows = []
    for _, _, over, arc_in, arc_out in d.arc_crossings():
        row = [0] * d.arc_count
        row[over] += 2
        row[arc_in] -= 1
        row[arc_out] -= 1
        rows.append(row)
    return FoxSpace(p=p, basis=LinearAlgebra.nullspace_mod(rows, d.arc_count, p))


def monochromatic_combination(
    d: PlanarDiagram, c1: t.Sequence[int], c2: t.Sequence[int], x: int, p: int = 3
) -> t.Tuple[int, int]:
    """Return the first of ``C1``, ``C2``, ``C1 + C2``, ``C1 − C2`` whose three colors agree at crossing ``x``."""
    crossing = d.crossing(x)
    arcs = (d.edge_arc[crossing.over_in], d.edge_arc[crossing.under_in], d.edge_arc[crossing.under_out])
    for lam, mu in MONOCHROMATIC_COMBINATIONS:
        if len({(lam * c1[arc] + mu * c2[arc]) % p for arc in arcs}) == 1:
            return lam, mu
    raise AssertionError(f"No monochromatic combination at crossing {x}")
