"""Decorated boundary strata classes and their formal linear combinations.

A term is the pushforward from a stable graph stratum of a monomial in psi
classes on half-edges and kappa classes on vertices, together with the
sector decoration. Terms are stored under a key made canonical by taking
the smallest labelling over the graph's automorphisms.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

from src.core.errors import AmbientMismatch
from src.exact.rational import format_rational, parse_rational
from src.graphs.canonical import automorphisms
from src.graphs.stable_graph import StableGraph


@dataclass(frozen=True)
class Ambient:
    g: int
    n: int
    m: int = 1

    @property
    def dimension(self) -> int:
        return 3 * self.g - 3 + self.n


@dataclass(frozen=True)
class TermKey:
    graph: StableGraph
    chi: tuple[int, ...]
    psi: tuple[int, ...]
    kappa: tuple[tuple[int, ...], ...]

    @property
    def degree(self) -> int:
        return sum(self.psi) + sum(sum(k) for k in self.kappa) + self.graph.num_edges

    def sort_key(self) -> tuple:
        return (self.degree, self.graph.sort_key(), self.chi, self.psi, self.kappa)


@dataclass(frozen=True)
class GraphTerm:
    key: TermKey
    coefficient: Fraction

    @property
    def graph(self) -> StableGraph:
        return self.key.graph

    @property
    def decoration(self) -> tuple[int, ...]:
        return self.key.chi

    @property
    def psi(self) -> tuple[int, ...]:
        return self.key.psi

    @property
    def kappa(self) -> tuple[tuple[int, ...], ...]:
        return self.key.kappa


def canonical_key(
    graph: StableGraph,
    chi: Sequence[int],
    psi: Sequence[int],
    kappa: Sequence[Sequence[int]],
) -> TermKey:
    best = None
    for aut in automorphisms(graph).elements:
        moved_chi = [0] * len(chi)
        moved_psi = [0] * len(psi)
        for h, target in enumerate(aut.half_edge_map):
            moved_chi[target] = chi[h]
            moved_psi[target] = psi[h]
        moved_kappa: list[tuple[int, ...]] = [()] * len(kappa)
        for v, target in enumerate(aut.vertex_map):
            moved_kappa[target] = tuple(sorted(kappa[v]))
        candidate = (tuple(moved_chi), tuple(moved_psi), tuple(moved_kappa))
        if best is None or candidate < best:
            best = candidate
    return TermKey(graph, *best)


def within_dimension(graph: StableGraph, psi: Sequence[int], kappa: Sequence[Sequence[int]]) -> bool:
    for v in range(graph.num_vertices):
        load = sum(psi[h] for h in graph.half_edges_at(v)) + sum(kappa[v])
        if load > graph.vertex_dimension(v):
            return False
    return True


class TautClass:
    """An immutable linear combination of decorated strata classes."""

    def __init__(self, ambient: Ambient, terms: Optional[Mapping[TermKey, Fraction]] = None):
        self.ambient = ambient
        self._terms = {k: Fraction(c) for k, c in (terms or {}).items() if c != 0}

    def terms(self) -> list[GraphTerm]:
        return [GraphTerm(k, self._terms[k]) for k in sorted(self._terms, key=TermKey.sort_key)]

    def keys(self) -> Iterable[TermKey]:
        return self._terms.keys()

    def __getitem__(self, key: TermKey) -> Fraction:
        return self._terms.get(key, Fraction(0))

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, graph: StableGraph, chi=None, psi=None, kappa=None) -> Fraction:
        chi = tuple(chi) if chi is not None else (0,) * graph.num_half_edges
        psi = tuple(psi) if psi is not None else (0,) * graph.num_half_edges
        kappa = tuple(kappa) if kappa is not None else ((),) * graph.num_vertices
        return self[canonical_key(graph, chi, psi, kappa)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TautClass):
            return NotImplemented
        return self.ambient == other.ambient and self._terms == other._terms

    def __repr__(self) -> str:
        return f"TautClass({self.ambient}, {len(self._terms)} terms)"

    def to_json(self) -> list[dict]:
        return [term_to_json(t.key, format_rational(t.coefficient), "coeff") for t in self.terms()]

    @classmethod
    def from_json(cls, ambient: Ambient, payload: Iterable[dict]) -> "TautClass":
        terms: dict[TermKey, Fraction] = {}
        for item in payload:
            key = term_key_from_json(item)
            terms[key] = terms.get(key, Fraction(0)) + parse_rational(item["coeff"])
        return cls(ambient, terms)


def term_to_json(key: TermKey, value, field: str) -> dict:
    return {
        "graph": key.graph.encode(),
        "chi": list(key.chi),
        "psi": {str(h): e for h, e in enumerate(key.psi) if e},
        "kappa": {str(v): list(k) for v, k in enumerate(key.kappa) if k},
        field: value,
    }


def term_key_from_json(item: Mapping) -> TermKey:
    graph = StableGraph.decode(item["graph"])
    psi = [0] * graph.num_half_edges
    for h, e in item.get("psi", {}).items():
        psi[int(h)] = int(e)
    kappa: list[tuple[int, ...]] = [()] * graph.num_vertices
    for v, k in item.get("kappa", {}).items():
        kappa[int(v)] = tuple(k)
    chi = item.get("chi") or [0] * graph.num_half_edges
    return canonical_key(graph, chi, psi, kappa)


class ClassBuilder:
    """Accumulates terms into a TautClass. Not shared between threads."""

    def __init__(self, ambient: Ambient):
        self.ambient = ambient
        self._terms: dict[TermKey, Fraction] = {}

    def add(self, graph, chi, psi, kappa, coefficient: Fraction) -> None:
        if coefficient == 0 or not within_dimension(graph, psi, kappa):
            return
        key = canonical_key(graph, chi, psi, kappa)
        self._terms[key] = self._terms.get(key, Fraction(0)) + coefficient

    def add_key(self, key: TermKey, coefficient: Fraction) -> None:
        self._terms[key] = self._terms.get(key, Fraction(0)) + coefficient

    def build(self) -> TautClass:
        return TautClass(self.ambient, self._terms)


def _require_same_ambient(a: TautClass, b: TautClass) -> None:
    if a.ambient != b.ambient:
        raise AmbientMismatch(f"{a.ambient} != {b.ambient}")


def class_add(a: TautClass, b: TautClass) -> TautClass:
    _require_same_ambient(a, b)
    builder = ClassBuilder(a.ambient)
    for c in (a, b):
        for key in c.keys():
            builder.add_key(key, c[key])
    return builder.build()


def class_scale(c: TautClass, s: Fraction) -> TautClass:
    return TautClass(c.ambient, {key: c[key] * s for key in c.keys()})


def class_truncate(c: TautClass, d: int) -> TautClass:
    return TautClass(c.ambient, {key: c[key] for key in c.keys() if key.degree <= d})


def class_degree_part(c: TautClass, d: int) -> TautClass:
    return TautClass(c.ambient, {key: c[key] for key in c.keys() if key.degree == d})


def class_degree_parts(c: TautClass) -> dict[int, TautClass]:
    return {d: class_degree_part(c, d) for d in sorted({key.degree for key in c.keys()})}
