import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from src.core.errors import NonIntegralOffset
from src.graphs.stable_graph import StableGraph
from src.orbifold.sectors import BundleRep, Sector, age


@dataclass(frozen=True)
class Decoration:
    """Sectors on every half-edge of a graph, stored as integers mod m."""

    graph: StableGraph
    chi: tuple[int, ...]

    def sector(self, h: int) -> Sector:
        """Sector on half-edge h."""
        return Sector(self.chi[h])

    @property
    def sectors(self) -> tuple[Sector, ...]:
        return tuple(Sector(g) for g in self.chi)


@dataclass(frozen=True)
class VertexOffset:
    """The integer a weight function must sum to at a vertex, mod r."""

    value: int


def is_consistent(decoration: Decoration, m: int) -> bool:
    """
    Whether the sectors close up on the graph.

    The two halves of an edge must carry opposite sectors, and the sectors
    around each vertex must add up to zero mod m. Only then does every
    vertex carry a cyclic cover with the prescribed monodromy.
    """
    graph = decoration.graph
    for e in range(graph.num_edges):
        hp, hm = graph.edge_halves(e)
        if (decoration.chi[hp] + decoration.chi[hm]) % m:
            return False
    return all(
        sum(decoration.chi[h] for h in graph.half_edges_at(v)) % m == 0
        for v in range(graph.num_vertices)
    )


def enumerate_decorations(
    graph: StableGraph, rep: BundleRep, leg_sectors: Sequence[Sector]
) -> list[Decoration]:
    """
    Every admissible decoration extending the given leg sectors.

    Edges carry (x, -x mod m) on (h+, h-); the sectors at each vertex must sum
    to 0 mod m. Output follows lexicographic order of the h+ sectors.
    """
    if len(leg_sectors) != graph.n:
        raise ValueError(f"expected {graph.n} leg sectors, got {len(leg_sectors)}")
    m = rep.m
    legs = tuple(s.g % m for s in leg_sectors)
    found = []
    for choice in itertools.product(range(m), repeat=graph.num_edges):
        chi = list(legs)
        for x in choice:
            chi.extend((x, (-x) % m))
        decoration = Decoration(graph, tuple(chi))
        if is_consistent(decoration, m):
            found.append(decoration)
    return found


def vertex_offset(rep: BundleRep, decoration: Decoration, v: int) -> VertexOffset:
    """
    Minus the sum of the ages of the half-edges at v.

    A consistent decoration makes this an integer. A fractional value means
    the ages disagree with the monodromy and is raised, never rounded.
    """
    total = -sum(
        (age(rep, decoration.sector(h)) for h in decoration.graph.half_edges_at(v)), Fraction(0)
    )
    if total.denominator != 1:
        raise NonIntegralOffset(f"vertex {v} has offset {total}")
    return VertexOffset(int(total))
