"""
Canonical labelling and automorphisms of stable graphs.

Vertices are bucketed by a cheap invariant (genus, legs carried, valence,
loops). The canonical form is the lexicographically smallest encoding over
all vertex orderings that keep the buckets sorted. Automorphisms are the
bucket-preserving vertex permutations fixing the encoding, lifted to
half-edges by permuting parallel edges and flipping loops.
"""
import itertools
import math
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from src.graphs.stable_graph import StableGraph


def vertex_invariant(graph: StableGraph, v: int) -> tuple:
    return (graph.genera[v], graph.legs_at(v), graph.valence(v), graph.loops_at(v))


def relabel(graph: StableGraph, perm: dict[int, int]) -> StableGraph:
    """Move old vertex v to perm[v]. Edges become sorted pairs, in sorted order."""
    genera = [0] * graph.num_vertices
    for old, new in perm.items():
        genera[new] = graph.genera[old]
    legs = tuple(perm[v] for v in graph.legs)
    edges = tuple(sorted(tuple(sorted((perm[a], perm[b]))) for a, b in graph.edges))
    return StableGraph(tuple(genera), legs, edges)


def _blocks(graph: StableGraph) -> list[list[int]]:
    buckets: dict[tuple, list[int]] = defaultdict(list)
    for v in range(graph.num_vertices):
        buckets[vertex_invariant(graph, v)].append(v)
    return [buckets[key] for key in sorted(buckets)]


def _block_maps(blocks: list[list[int]], targets: list[list[int]]) -> Iterator[dict[int, int]]:
    for choice in itertools.product(*(itertools.permutations(t) for t in targets)):
        perm: dict[int, int] = {}
        for members, image in zip(blocks, choice):
            perm.update(zip(members, image))
        yield perm


def _encoding_key(graph: StableGraph) -> tuple:
    return (graph.genera, graph.legs, graph.edges)


@lru_cache(maxsize=None)
def canonicalize(graph: StableGraph) -> StableGraph:
    blocks = _blocks(graph)
    targets = []
    start = 0
    for members in blocks:
        targets.append(list(range(start, start + len(members))))
        start += len(members)
    best = None
    for perm in _block_maps(blocks, targets):
        candidate = relabel(graph, perm)
        if best is None or _encoding_key(candidate) < _encoding_key(best):
            best = candidate
    return best


def is_isomorphic(a: StableGraph, b: StableGraph) -> bool:
    return canonicalize(a) == canonicalize(b)


@dataclass(frozen=True)
class Automorphism:
    vertex_map: tuple[int, ...]
    half_edge_map: tuple[int, ...]


@dataclass(frozen=True)
class AutGroup:
    order: int
    elements: tuple[Automorphism, ...]

    @property
    def generators(self) -> tuple[Automorphism, ...]:
        # every non-identity element; small enough not to need a reduced set
        return tuple(
            a for a in self.elements if a.half_edge_map != tuple(range(len(a.half_edge_map)))
        )


def _vertex_automorphisms(graph: StableGraph) -> list[dict[int, int]]:
    blocks = _blocks(graph)
    reference = relabel(graph, {v: v for v in range(graph.num_vertices)})
    return [perm for perm in _block_maps(blocks, blocks) if relabel(graph, perm) == reference]


def _edge_groups(graph: StableGraph) -> dict[tuple[int, int], list[int]]:
    groups: dict[tuple[int, int], list[int]] = defaultdict(list)
    for e, (a, b) in enumerate(graph.edges):
        groups[tuple(sorted((a, b)))].append(e)
    return groups


@lru_cache(maxsize=None)
def automorphisms(graph: StableGraph) -> AutGroup:
    """All automorphisms of the graph, as vertex and half-edge permutations."""
    groups = _edge_groups(graph)
    elements = []
    for perm in _vertex_automorphisms(graph):
        per_group = []
        for (a, b), members in groups.items():
            target = groups[tuple(sorted((perm[a], perm[b])))]
            flips = [(False, True)] * len(members) if a == b else [(False,)] * len(members)
            per_group.append(
                [
                    (members, image, flip)
                    for image in itertools.permutations(target)
                    for flip in itertools.product(*flips)
                ]
            )
        for choice in itertools.product(*per_group):
            half = list(range(graph.n))
            half += [0] * (2 * graph.num_edges)
            for members, image, flip in choice:
                for e, f, swap in zip(members, image, flip):
                    hp, hm = graph.edge_halves(e)
                    tp, tm = graph.edge_halves(f)
                    a, _ = graph.edges[e]
                    straight = perm[a] == graph.edges[f][0]
                    if graph.edges[e][0] == graph.edges[e][1]:
                        straight = not swap
                    half[hp], half[hm] = (tp, tm) if straight else (tm, tp)
            elements.append(
                Automorphism(
                    vertex_map=tuple(perm[v] for v in range(graph.num_vertices)),
                    half_edge_map=tuple(half),
                )
            )
    return AutGroup(order=len(elements), elements=tuple(elements))


def automorphism_order(graph: StableGraph) -> int:
    """|Aut| without listing half-edge maps."""
    groups = _edge_groups(graph)
    local = 1
    for (a, b), members in groups.items():
        k = len(members)
        local *= math.factorial(k) * (2 ** k if a == b else 1)
    return len(_vertex_automorphisms(graph)) * local


def contract(graph: StableGraph, e: int) -> StableGraph:
    a, b = graph.edges[e]
    genera = list(graph.genera)
    rest = [edge for i, edge in enumerate(graph.edges) if i != e]
    if a == b:
        genera[a] += 1
        return canonicalize(StableGraph(tuple(genera), graph.legs, tuple(rest)))
    keep, gone = min(a, b), max(a, b)
    genera[keep] += genera[gone]
    del genera[gone]

    def move(v: int) -> int:
        if v == gone:
            return keep
        return v - 1 if v > gone else v

    legs = tuple(move(v) for v in graph.legs)
    edges = tuple((move(x), move(y)) for x, y in rest)
    return canonicalize(StableGraph(tuple(genera), legs, edges))
