"""Weight functions mod r on decorated stable graphs.

For every edge one half-edge weight is free; the other follows from the
edge condition. A spanning tree fixes the tree-edge weights from the vertex
conditions, leaving one free parameter per independent cycle. The check at
the root does not depend on those parameters, so a decoration has either
r^h1 weight functions or none.
"""
import itertools
import logging
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from src.decorations.decorations import Decoration, vertex_offset
from src.exact.lattice import Affine
from src.graphs.stable_graph import StableGraph
from src.orbifold.sectors import BundleRep, age, leg_residue, leg_weight

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WeightFunction:
    decoration: Decoration
    r: int
    w: tuple[int, ...]

    @property
    def graph(self) -> StableGraph:
        return self.decoration.graph


def edge_target(rep: BundleRep, decoration: Decoration, e: int, r: int) -> int:
    hp, _ = decoration.graph.edge_halves(e)
    return 0 if age(rep, decoration.sector(hp)) == 0 else r - 1


@dataclass(frozen=True)
class _Tree:
    order: tuple[int, ...]
    parent_edge: dict
    free_edges: tuple[int, ...]


def _spanning_tree(graph: StableGraph) -> _Tree:
    order = [0]
    parent_edge = {}
    queue = deque([0])
    tree_edges = set()
    while queue:
        v = queue.popleft()
        for e, (a, b) in enumerate(graph.edges):
            if a == b or v not in (a, b):
                continue
            other = b if a == v else a
            if other not in parent_edge and other != 0:
                parent_edge[other] = e
                tree_edges.add(e)
                order.append(other)
                queue.append(other)
    free = tuple(e for e in range(graph.num_edges) if e not in tree_edges)
    return _Tree(tuple(order), parent_edge, free)


def _solve(
    decoration: Decoration,
    rep: BundleRep,
    lifts: Sequence[Fraction],
    r: int,
    tree: _Tree,
    free_values: Sequence[int],
    offsets: Sequence[int],
) -> Optional[tuple[int, ...]]:
    graph = decoration.graph
    w: list[Optional[int]] = [None] * graph.num_half_edges
    for i, a in enumerate(lifts):
        w[i] = leg_weight(rep, decoration.sector(i), a, r)
    for e, u in zip(tree.free_edges, free_values):
        hp, hm = graph.edge_halves(e)
        w[hp] = u
        w[hm] = (edge_target(rep, decoration, e, r) - u) % r

    for v in reversed(tree.order[1:]):
        e = tree.parent_edge[v]
        hp, hm = graph.edge_halves(e)
        here, there = (hp, hm) if graph.vertex_of(hp) == v else (hm, hp)
        known = sum(w[h] for h in graph.half_edges_at(v) if h != here)
        w[here] = (offsets[v] - known) % r
        w[there] = (edge_target(rep, decoration, e, r) - w[here]) % r

    root = tree.order[0]
    if (sum(w[h] for h in graph.half_edges_at(root)) - offsets[root]) % r:
        return None
    return tuple(w)


def _offsets(decoration: Decoration, rep: BundleRep) -> list[int]:
    return [vertex_offset(rep, decoration, v).value for v in range(decoration.graph.num_vertices)]


def _target_residue(rep: BundleRep, decoration: Decoration, e: int) -> int:
    """edge_target reduced to a residue that does not depend on r."""
    hp, _ = decoration.graph.edge_halves(e)
    return 0 if age(rep, decoration.sector(hp)) == 0 else -1


@dataclass(frozen=True)
class SymbolicWeights:
    """
    Every weight function of a decoration at once.

    forms[h] is an affine form in one parameter u_i per free edge, with
    w(h) = [forms[h]]_r for u_i running over 0..r-1. Only the residues are
    meaningful, so the forms hold for every r above the constants in them.
    """

    decoration: Decoration
    free_edges: tuple[int, ...]
    forms: tuple[Affine, ...]

    @property
    def num_parameters(self) -> int:
        return len(self.free_edges)


def symbolic_weights(
    decoration: Decoration, rep: BundleRep, lifts: Sequence[Fraction]
) -> Optional[SymbolicWeights]:
    """Solves the weight conditions on the spanning tree; None when there are no weights."""
    graph = decoration.graph
    if len(lifts) != graph.n:
        raise ValueError(f"expected {graph.n} lifts, got {len(lifts)}")
    tree = _spanning_tree(graph)
    offsets = _offsets(decoration, rep)
    nvars = len(tree.free_edges)
    zero = Affine.constant(0, nvars)

    w: list[Affine] = [zero] * graph.num_half_edges
    for i, a in enumerate(lifts):
        w[i] = Affine.constant(leg_residue(rep, decoration.sector(i), a), nvars)
    for slot, e in enumerate(tree.free_edges):
        hp, hm = graph.edge_halves(e)
        w[hp] = Affine.unit(slot, nvars)
        w[hm] = Affine.constant(_target_residue(rep, decoration, e), nvars) - w[hp]

    # children before parents, as in _solve
    for v in reversed(tree.order[1:]):
        e = tree.parent_edge[v]
        hp, hm = graph.edge_halves(e)
        here, there = (hp, hm) if graph.vertex_of(hp) == v else (hm, hp)
        known = zero
        for h in graph.half_edges_at(v):
            if h != here:
                known = known + w[h]
        w[here] = Affine.constant(offsets[v], nvars) - known
        w[there] = Affine.constant(_target_residue(rep, decoration, e), nvars) - w[here]

    root = tree.order[0]
    excess = Affine.constant(-offsets[root], nvars)
    for h in graph.half_edges_at(root):
        excess = excess + w[h]
    if not excess.is_constant:
        raise ValueError(f"weight forms on {graph.encode()} do not close up at the root")
    if excess.const:
        logger.debug("no weights on %s chi=%s: root excess %d", graph.encode(), decoration.chi, excess.const)
        return None
    return SymbolicWeights(decoration, tree.free_edges, tuple(w))


def weight_count(
    decoration: Decoration, rep: BundleRep, lifts: Sequence[Fraction], r: int
) -> int:
    graph = decoration.graph
    tree = _spanning_tree(graph)
    offsets = _offsets(decoration, rep)
    if _solve(decoration, rep, lifts, r, tree, [0] * len(tree.free_edges), offsets) is None:
        return 0
    return r ** graph.h1


def enumerate_weights(
    decoration: Decoration, rep: BundleRep, lifts: Sequence[Fraction], r: int
) -> list[WeightFunction]:
    """All weight functions mod r, ordered by the free cycle parameters."""
    graph = decoration.graph
    if len(lifts) != graph.n:
        raise ValueError(f"expected {graph.n} lifts, got {len(lifts)}")
    tree = _spanning_tree(graph)
    offsets = _offsets(decoration, rep)
    if _solve(decoration, rep, lifts, r, tree, [0] * len(tree.free_edges), offsets) is None:
        return []
    out = []
    for free_values in itertools.product(range(r), repeat=len(tree.free_edges)):
        w = _solve(decoration, rep, lifts, r, tree, free_values, offsets)
        out.append(WeightFunction(decoration, r, w))
    return out


def validate_weight(
    weight: WeightFunction, rep: BundleRep, lifts: Sequence[Fraction]
) -> list[str]:
    """Names each violated condition; an empty list means the weight is valid."""
    decoration, r, w = weight.decoration, weight.r, weight.w
    graph = decoration.graph
    problems = []
    for i, a in enumerate(lifts):
        expected = leg_weight(rep, decoration.sector(i), a, r)
        if w[i] != expected:
            problems.append(f"leg {i}: weight {w[i]} != {expected}")
    for e in range(graph.num_edges):
        hp, hm = graph.edge_halves(e)
        target = edge_target(rep, decoration, e, r)
        if (w[hp] + w[hm] - target) % r:
            problems.append(f"edge {e}: {w[hp]} + {w[hm]} != {target} mod {r}")
    for v in range(graph.num_vertices):
        offset = vertex_offset(rep, decoration, v).value
        total = sum(w[h] for h in graph.half_edges_at(v))
        if (total - offset) % r:
            problems.append(f"vertex {v}: sum {total} != {offset} mod {r}")
    return problems


def dump(weight: WeightFunction) -> str:
    pairs = " ".join(f"w({h})={value}" for h, value in enumerate(weight.w))
    return f"{weight.graph.encode()} chi={list(weight.decoration.chi)} r={weight.r} {pairs}"
