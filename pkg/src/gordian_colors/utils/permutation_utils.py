"""Permutation arithmetic on tuples of images."""

import itertools
import typing as t

import networkx as nx

from ..enums.class_kind import ClassKind


Perm = t.Tuple[int, ...]
"""A permutation of ``0..n-1`` stored as the tuple of images."""


class PermutationUtils:
    """Static helpers for permutations stored as tuples of images.

    Points are 0-based internally and 1-based in every cycle notation that leaves this class.
    ``compose(p, q)`` applies ``q`` first.
    """

    @staticmethod
    def identity(n: int) -> Perm:
        """Return the identity permutation of degree ``n``."""
        return tuple(range(n))

    @staticmethod
    def compose(p: Perm, q: Perm) -> Perm:
        """Return ``p ∘ q``."""
        return tuple(p[i] for i in q)

    @staticmethod
    def inverse(p: Perm) -> Perm:
        """Return the inverse permutation."""
        inv = [0] * len(p)
        for i, image in enumerate(p):
            inv[image] = i
        return tuple(inv)

    @classmethod
    def power(cls, p: Perm, k: int) -> Perm:
        """Return ``p`` raised to the (possibly negative) power ``k``."""
        base = p if k >= 0 else cls.inverse(p)
        result = cls.identity(len(p))
        for _ in range(abs(k)):
            result = cls.compose(base, result)
        return result

    @classmethod
    def conjugate(cls, g: Perm, x: Perm) -> Perm:
        """Return ``g ∘ x ∘ g⁻¹``."""
        return cls.compose(cls.compose(g, x), cls.inverse(g))

    @classmethod
    def twist(cls, over: Perm, under: Perm, sign: int) -> Perm:
        """Return the color leaving a crossing: ``over^sign ∘ under ∘ over^-sign``."""
        return cls.conjugate(over if sign > 0 else cls.inverse(over), under)

    @classmethod
    def untwist(cls, over: Perm, out: Perm, sign: int) -> Perm:
        """Invert :meth:`twist`: recover the incoming under color from the outgoing one."""
        return cls.twist(over, out, -sign)

    @staticmethod
    def from_cycle(n: int, points: t.Sequence[int]) -> Perm:
        """Build a single cycle of degree ``n`` from 1-based ``points``."""
        points = tuple(points)
        if len(set(points)) != len(points) or any(not 1 <= point <= n for point in points):
            raise ValueError(f"Invalid cycle {tuple(points)} for degree {n}")
        images = list(range(n))
        for a, b in zip(points, points[1:] + points[:1]):
            images[a - 1] = b - 1
        return tuple(images)

    @staticmethod
    def to_cycles(p: Perm) -> t.Tuple[t.Tuple[int, ...], ...]:
        """Return the non-trivial cycles of ``p`` in 1-based notation, each starting at its least point."""
        seen: t.Set[int] = set()
        cycles: t.List[t.Tuple[int, ...]] = []
        for start in range(len(p)):
            if start in seen or p[start] == start:
                continue
            cycle = [start]
            seen.add(start)
            point = p[start]
            while point != start:
                cycle.append(point)
                seen.add(point)
                point = p[point]
            cycles.append(tuple(point + 1 for point in cycle))
        return tuple(cycles)

    @staticmethod
    def support(p: Perm) -> t.FrozenSet[int]:
        """Return the 0-based points moved by ``p``."""
        return frozenset(i for i, image in enumerate(p) if image != i)

    @classmethod
    def commute(cls, a: Perm, b: Perm) -> bool:
        """Return ``True`` when ``a ∘ b == b ∘ a``."""
        return cls.compose(a, b) == cls.compose(b, a)

    @classmethod
    def parity(cls, p: Perm) -> int:
        """Return ``0`` for even and ``1`` for odd permutations."""
        return sum(len(cycle) - 1 for cycle in cls.to_cycles(p)) % 2

    @classmethod
    def class_elements(cls, n: int, kind: ClassKind) -> t.List[Perm]:
        """Enumerate a conjugacy class of ``S_n`` in canonical (cycle notation) order."""
        elements: t.List[Perm] = []
        for points in itertools.combinations(range(1, n + 1), kind.cycle_length):
            if kind.cycle_length == 2:
                elements.append(cls.from_cycle(n, points))
            else:
                first, *rest = points
                for tail in itertools.permutations(rest):
                    elements.append(cls.from_cycle(n, (first, *tail)))
        return sorted(elements, key=cls.to_cycles)

    @staticmethod
    def transposition_graph(colors: t.Iterable[Perm], n: int) -> nx.Graph:
        """Return the graph on ``1..n`` with one edge per transposition."""
        graph = nx.Graph()
        graph.add_nodes_from(range(1, n + 1))
        for color in colors:
            moved = [i + 1 for i, image in enumerate(color) if image != i]
            if len(moved) != 2:
                raise ValueError(f"Not a transposition: {color}")
            graph.add_edge(*moved)
        return graph

    @classmethod
    def orbit_graph(cls, colors: t.Iterable[Perm], n: int) -> nx.Graph:
        """Return the graph on ``1..n`` joining every point to its images under ``colors``."""
        graph = nx.Graph()
        graph.add_nodes_from(range(1, n + 1))
        for color in colors:
            graph.add_edges_from((i + 1, image + 1) for i, image in enumerate(color) if image != i)
        return graph
