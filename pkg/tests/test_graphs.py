import itertools

import pytest

from src.core.errors import Unstable
from src.graphs.canonical import (
    automorphism_order,
    automorphisms,
    canonicalize,
    contract,
    is_isomorphic,
    relabel,
)
from src.graphs.enumeration import enumerate_graphs
from src.graphs.stable_graph import StableGraph, strata_degree_exponent


def _brute_force_key(graph: StableGraph) -> tuple:
    keys = []
    for perm in itertools.permutations(range(graph.num_vertices)):
        genera = [0] * graph.num_vertices
        for old, new in enumerate(perm):
            genera[new] = graph.genera[old]
        legs = tuple(perm[v] for v in graph.legs)
        edges = tuple(sorted(tuple(sorted((perm[a], perm[b]))) for a, b in graph.edges))
        keys.append((tuple(genera), legs, edges))
    return min(keys)


def _brute_force_classes(g: int, n: int) -> set:
    found = set()
    for nv in range(1, 2 * g - 2 + n + 1):
        pairs = [(a, b) for a in range(nv) for b in range(a, nv)]
        for ne in range(nv - 1, 3 * g - 3 + n + 1):
            h1 = ne - nv + 1
            if h1 > g:
                continue
            for genera in itertools.product(range(g - h1 + 1), repeat=nv):
                if sum(genera) + h1 != g:
                    continue
                for legs in itertools.product(range(nv), repeat=n):
                    for edges in itertools.combinations_with_replacement(pairs, ne):
                        graph = StableGraph(genera, legs, edges)
                        if graph.is_connected() and graph.is_stable():
                            found.add(_brute_force_key(graph))
    return found


def _brute_force_automorphisms(graph: StableGraph) -> int:
    inner = list(range(graph.n, graph.num_half_edges))
    count = 0
    for image in itertools.permutations(inner):
        sigma = list(range(graph.n)) + list(image)
        if any(sigma[graph.partner(h)] != graph.partner(sigma[h]) for h in inner):
            continue
        vertex_map = {}
        ok = True
        for h in range(graph.num_half_edges):
            v, w = graph.vertex_of(h), graph.vertex_of(sigma[h])
            if vertex_map.setdefault(v, w) != w:
                ok = False
                break
        if not ok or len(set(vertex_map.values())) != len(vertex_map):
            continue
        if any(graph.genera[v] != graph.genera[w] for v, w in vertex_map.items()):
            continue
        count += 1
    return count


@pytest.mark.parametrize(
    "g, n, expected",
    [(0, 3, 1), (0, 4, 4), (0, 5, 26), (1, 1, 2), (1, 2, 5), (2, 0, 7)],
)
def test_graph_counts(g, n, expected):
    assert len(enumerate_graphs(g, n)) == expected


@pytest.mark.parametrize("g, n", [(0, 5), (1, 2), (1, 3), (2, 0), (2, 1)])
def test_enumeration_matches_brute_force(g, n):
    graphs = enumerate_graphs(g, n)
    assert {_brute_force_key(graph) for graph in graphs} == _brute_force_classes(g, n)
    assert len(graphs) == len({canonicalize(graph) for graph in graphs})


def test_enumeration_is_deterministic_and_stable():
    first = enumerate_graphs(1, 3)
    assert first == enumerate_graphs(1, 3)
    for graph in first:
        assert graph.is_stable()
        assert graph.is_connected()
        assert graph.genus == 1
        assert canonicalize(graph) == graph


def test_edge_limit_truncates_by_edge_count():
    limited = enumerate_graphs(1, 2, edge_limit=1)
    assert {graph.num_edges for graph in limited} == {0, 1}
    assert len(limited) == 3


def test_unstable_input():
    with pytest.raises(Unstable):
        enumerate_graphs(0, 2)
    with pytest.raises(Unstable):
        enumerate_graphs(1, 0)


def test_canonical_form_ignores_vertex_labels():
    for graph in enumerate_graphs(1, 3):
        nv = graph.num_vertices
        shuffled = relabel(graph, {v: (v + 1) % nv for v in range(nv)})
        assert canonicalize(shuffled) == graph
        assert is_isomorphic(shuffled, graph)


def test_loop_has_two_automorphisms():
    loop = StableGraph((0,), (0,), ((0, 0),))
    assert automorphism_order(loop) == 2
    assert automorphisms(loop).order == 2
    assert [a.half_edge_map for a in automorphisms(loop).generators] == [(0, 2, 1)]


def test_three_edge_banana():
    banana = canonicalize(StableGraph((0, 0), (), ((0, 1), (0, 1), (0, 1))))
    assert automorphism_order(banana) == 12
    assert automorphisms(banana).order == 12


@pytest.mark.parametrize("g, n", [(0, 5), (1, 2), (1, 3), (2, 0)])
def test_automorphisms_match_brute_force(g, n):
    for graph in enumerate_graphs(g, n):
        if graph.num_edges > 3:
            continue
        expected = _brute_force_automorphisms(graph)
        assert automorphism_order(graph) == expected, graph.encode()
        assert automorphisms(graph).order == expected, graph.encode()


def test_automorphism_elements_preserve_structure():
    for graph in enumerate_graphs(2, 0):
        group = automorphisms(graph)
        assert len(set(a.half_edge_map for a in group.elements)) == group.order
        for aut in group.elements:
            for h in range(graph.n, graph.num_half_edges):
                image = aut.half_edge_map[h]
                assert aut.half_edge_map[graph.partner(h)] == graph.partner(image)
                assert aut.vertex_map[graph.vertex_of(h)] == graph.vertex_of(image)


def test_contract_undoes_degeneration():
    smooth = StableGraph((1,), (0,), ())
    loop = StableGraph((0,), (0,), ((0, 0),))
    assert contract(loop, 0) == smooth
    separating = canonicalize(StableGraph((1, 0), (1, 1), ((0, 1),)))
    assert contract(separating, 0) == StableGraph((1,), (0, 0), ())


def test_encoding_round_trip():
    graph = enumerate_graphs(1, 2)[-1]
    assert StableGraph.decode(graph.encode()) == graph
    assert graph.encode().startswith("V[")


@pytest.mark.parametrize("g, n", [(1, 1), (1, 2), (2, 0), (2, 1)])
def test_strata_degree_exponent(g, n):
    for graph in enumerate_graphs(g, n):
        assert strata_degree_exponent(graph, g) == 2 * g - 1 - graph.h1


def test_strata_degree_exponent_checks_genus():
    with pytest.raises(ValueError):
        strata_degree_exponent(StableGraph((1,), (0,), ()), 2)
