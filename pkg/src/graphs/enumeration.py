import itertools
import logging
from functools import lru_cache
from typing import Iterator, Optional

from src.core.errors import Unstable
from src.graphs.canonical import canonicalize
from src.graphs.stable_graph import StableGraph

logger = logging.getLogger(__name__)


def max_edges(g: int, n: int) -> int:
    return 3 * g - 3 + n


def degenerations(graph: StableGraph) -> Iterator[StableGraph]:
    """Graphs with one more edge whose contraction gives back this graph."""
    new_vertex = graph.num_vertices
    for v, genus in enumerate(graph.genera):
        if genus >= 1:
            genera = list(graph.genera)
            genera[v] -= 1
            yield StableGraph(tuple(genera), graph.legs, graph.edges + ((v, v),))

        halves = graph.half_edges_at(v)
        for size in range(len(halves) + 1):
            for moved in itertools.combinations(halves, size):
                moved_set = set(moved)
                stay = len(halves) - size
                for g_new in range(genus + 1):
                    g_old = genus - g_new
                    if 2 * g_new - 2 + size + 1 <= 0 or 2 * g_old - 2 + stay + 1 <= 0:
                        continue
                    genera = graph.genera[:v] + (g_old,) + graph.genera[v + 1:] + (g_new,)
                    legs = tuple(
                        new_vertex if i in moved_set else w for i, w in enumerate(graph.legs)
                    )
                    edges = []
                    for e, (a, b) in enumerate(graph.edges):
                        hp, hm = graph.edge_halves(e)
                        edges.append(
                            (new_vertex if hp in moved_set else a, new_vertex if hm in moved_set else b)
                        )
                    edges.append((v, new_vertex))
                    yield StableGraph(genera, legs, tuple(edges))


@lru_cache(maxsize=None)
def _layers(g: int, n: int, edge_limit: int) -> tuple[tuple[StableGraph, ...], ...]:
    smooth = StableGraph((g,), (0,) * n, ())
    layers = [(smooth,)]
    for _ in range(edge_limit):
        found = {canonicalize(child) for graph in layers[-1] for child in degenerations(graph)}
        if not found:
            break
        layers.append(tuple(sorted(found, key=StableGraph.sort_key)))
    return tuple(layers)


def enumerate_graphs(g: int, n: int, edge_limit: Optional[int] = None) -> tuple[StableGraph, ...]:
    """
    All stable graphs of genus g with n legs, up to isomorphism.

    Graphs are built by degenerating the smooth graph one edge at a time and
    deduplicated through their canonical form. ``edge_limit`` stops the search
    early when only graphs with few edges are needed.
    """
    if g < 0 or n < 0 or 2 * g - 2 + n <= 0:
        raise Unstable(f"(g, n) = ({g}, {n}) is not stable")
    top = max_edges(g, n)
    limit = top if edge_limit is None else min(edge_limit, top)
    graphs = tuple(graph for layer in _layers(g, n, limit) for graph in layer)
    logger.debug("enumerated %d stable graphs for g=%d n=%d (edges <= %d)", len(graphs), g, n, limit)
    return graphs
