"""Stable graphs with labelled legs.

Half-edges are numbered globally: legs take 0..n-1 and edge e owns the pair
(n + 2e, n + 2e + 1), written (h+, h-). The h+ half sits on ``edges[e][0]``.
"""
import re
from dataclasses import dataclass
from functools import cached_property

_ENCODING_RE = re.compile(r"^V\[(?P<v>.*)\] E\[(?P<e>.*)\] L\[(?P<l>.*)\]$")


@dataclass(frozen=True)
class StableGraph:
    genera: tuple[int, ...]
    legs: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "genera", tuple(self.genera))
        object.__setattr__(self, "legs", tuple(self.legs))
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        nv = len(self.genera)
        if nv == 0:
            raise ValueError("a stable graph needs at least one vertex")
        for v in self.legs:
            if not 0 <= v < nv:
                raise ValueError(f"leg attached to missing vertex {v}")
        for a, b in self.edges:
            if not (0 <= a < nv and 0 <= b < nv):
                raise ValueError(f"edge ({a}, {b}) references a missing vertex")

    @property
    def n(self) -> int:
        return len(self.legs)

    @property
    def num_vertices(self) -> int:
        return len(self.genera)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def num_half_edges(self) -> int:
        return self.n + 2 * self.num_edges

    @property
    def h1(self) -> int:
        return self.num_edges - self.num_vertices + 1

    @property
    def genus(self) -> int:
        return sum(self.genera) + self.h1

    def is_leg(self, h: int) -> bool:
        return h < self.n

    def edge_halves(self, e: int) -> tuple[int, int]:
        return self.n + 2 * e, self.n + 2 * e + 1

    def edge_of(self, h: int) -> int:
        return (h - self.n) // 2

    def partner(self, h: int) -> int:
        if self.is_leg(h):
            raise ValueError(f"half-edge {h} is a leg")
        return h + 1 if (h - self.n) % 2 == 0 else h - 1

    def vertex_of(self, h: int) -> int:
        if self.is_leg(h):
            return self.legs[h]
        e, side = divmod(h - self.n, 2)
        return self.edges[e][side]

    @cached_property
    def _incidence(self) -> tuple[tuple[int, ...], ...]:
        at: list[list[int]] = [[] for _ in self.genera]
        for h in range(self.num_half_edges):
            at[self.vertex_of(h)].append(h)
        return tuple(tuple(hs) for hs in at)

    def half_edges_at(self, v: int) -> tuple[int, ...]:
        return self._incidence[v]

    def valence(self, v: int) -> int:
        return len(self._incidence[v])

    def legs_at(self, v: int) -> tuple[int, ...]:
        return tuple(i for i, w in enumerate(self.legs) if w == v)

    def loops_at(self, v: int) -> int:
        return sum(1 for a, b in self.edges if a == b == v)

    def vertex_dimension(self, v: int) -> int:
        return 3 * self.genera[v] - 3 + self.valence(v)

    def is_stable(self) -> bool:
        return all(2 * g - 2 + self.valence(v) > 0 for v, g in enumerate(self.genera))

    def is_connected(self) -> bool:
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for a, b in self.edges:
                for x, y in ((a, b), (b, a)):
                    if x == v and y not in seen:
                        seen.add(y)
                        stack.append(y)
        return len(seen) == self.num_vertices

    def sort_key(self) -> tuple:
        return (self.num_edges, self.num_vertices, self.genera, self.legs, self.edges)

    def encode(self) -> str:
        """Text form, e.g. ``V[v0:g=0] E[(2,3):v0-v0] L[L0@v0,L1@v0]``."""
        vertices = ",".join(f"v{v}:g={g}" for v, g in enumerate(self.genera))
        edges = ",".join(
            "({},{}):v{}-v{}".format(*self.edge_halves(e), a, b)
            for e, (a, b) in enumerate(self.edges)
        )
        legs = ",".join(f"L{i}@v{v}" for i, v in enumerate(self.legs))
        return f"V[{vertices}] E[{edges}] L[{legs}]"

    @classmethod
    def decode(cls, text: str) -> "StableGraph":
        match = _ENCODING_RE.match(text.strip())
        if match is None:
            raise ValueError(f"malformed graph encoding: {text!r}")
        genera = [int(g) for g in re.findall(r"v\d+:g=(\d+)", match["v"])]
        edges = [(int(a), int(b)) for a, b in re.findall(r":v(\d+)-v(\d+)", match["e"])]
        legs = [int(v) for v in re.findall(r"L\d+@v(\d+)", match["l"])]
        return cls(tuple(genera), tuple(legs), tuple(edges))

    def __str__(self) -> str:
        return self.encode()


def strata_degree_exponent(graph: StableGraph, g: int) -> int:
    """
    Exponent e with r^e the degree of the stratum projection from the moduli
    of r-th roots: sum over vertices of 2g(v) - 1, plus one per edge.
    """
    if graph.genus != g:
        raise ValueError(f"graph has genus {graph.genus}, expected {g}")
    exponent = sum(2 * genus for genus in graph.genera) - graph.num_vertices + graph.num_edges
    assert exponent == 2 * g - 1 - graph.h1
    return exponent
