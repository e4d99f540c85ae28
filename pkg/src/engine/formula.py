"""
The degree-graded class at a fixed r, and its leading-term variant.

Both walk the same data: stable graphs with at most d edges, their sector
decorations and all weight functions mod r. They differ in the local factors
attached to vertices, legs and edges and in the power of r each term gets.
"""
import logging
import math
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from src.core.errors import DegreeOutOfRange
from src.decorations.decorations import enumerate_decorations
from src.decorations.weights import WeightFunction, enumerate_weights
from src.engine.problem import TopData
from src.exact.bernoulli import bernoulli_number, bernoulli_value
from src.exact.rational import rational_mod
from src.graphs.canonical import automorphism_order
from src.graphs.enumeration import enumerate_graphs
from src.graphs.stable_graph import StableGraph, strata_degree_exponent
from src.orbifold.sectors import age
from src.taut.classes import ClassBuilder, TautClass
from src.taut.series import (
    GradedSeries,
    Monomial,
    edge_series,
    exp_truncated,
    kappa_var,
    monomial_degree,
    psi_var,
)

logger = logging.getLogger(__name__)


def check_degree(data: TopData, d: int) -> None:
    """Rejects degrees outside 0..3g-3+n, the dimension of the moduli space."""
    top = 3 * data.g - 3 + data.n
    if not 0 <= d <= top:
        raise DegreeOutOfRange(f"degree {d} outside 0..{top}")


def kappa_coefficient(b: int) -> Fraction:
    """
    Coefficient of kappa_b in the vertex exponent.

    Equal to (-1)^b (b-1)! B_{b+1} / (b+1)!, zero for even b >= 2.
    """
    return (-1) ** b * math.factorial(b - 1) * bernoulli_number(b + 1) / math.factorial(b + 1)


def psi_coefficient(k: int, x: Fraction) -> Fraction:
    """(-1)^(k-1) (k-1)! / (k+1)! * B_{k+1}(x), shared by legs and edges."""
    return (
        (-1) ** (k - 1)
        * Fraction(math.factorial(k - 1), math.factorial(k + 1))
        * bernoulli_value(k + 1, x)
    )


def vertex_factor(v: int, budget: int) -> GradedSeries:
    """exp(sum_b kappa_coefficient(b) kappa_b(v)), truncated at the budget."""
    generator = GradedSeries(
        {((kappa_var(v, b), 1),): kappa_coefficient(b) for b in range(1, budget + 1)}, budget
    )
    return exp_truncated(generator, budget)


def leg_factor(h: int, x: Fraction, budget: int) -> GradedSeries:
    """
    The leg exponent at reduced age x = [a]_r / r.

    Only psi powers of degree >= 1 appear, so the generator has no constant
    part and the exponential terminates at the budget.
    """
    coefficients = [Fraction(0)] + [psi_coefficient(k, x) for k in range(1, budget + 1)]
    return exp_truncated(GradedSeries.from_powers(psi_var(h), coefficients, budget), budget)


def leading_leg_factor(h: int, a: Fraction, budget: int) -> GradedSeries:
    """exp(a^2 / 2 * psi_h); uses the lift a itself, not its reduction mod r."""
    generator = GradedSeries.from_powers(psi_var(h), [Fraction(0), a * a / 2], budget)
    return exp_truncated(generator, budget)


@lru_cache(maxsize=4096)
def _full_edge(x: Fraction, budget: int) -> dict:
    # one extra power: the division by psi_+ + psi_- drops a degree
    coefficients = [Fraction(0)] + [psi_coefficient(k, x) for k in range(1, budget + 2)]
    return edge_series(coefficients, budget)


@lru_cache(maxsize=4096)
def _leading_edge(product: Fraction, budget: int) -> dict:
    return edge_series([Fraction(0), -product / 2], budget)


def _edge_to_series(graph: StableGraph, e: int, bivariate: dict, budget: int) -> GradedSeries:
    """Places a bivariate edge series on the psi variables of edge e's halves."""
    hp, hm = graph.edge_halves(e)
    terms = {}
    for (i, j), c in bivariate.items():
        mono = tuple(pair for pair in ((psi_var(hp), i), (psi_var(hm), j)) if pair[1])
        terms[mono] = c
    return GradedSeries(terms, budget)


def _edge_ends(data: TopData, weight: WeightFunction, e: int) -> tuple[Fraction, Fraction]:
    """x = w(h) + age(h) on both halves of edge e; they add up to r or to 0."""
    graph = weight.graph
    hp, hm = graph.edge_halves(e)
    decoration = weight.decoration
    return (
        weight.w[hp] + age(data.rep, decoration.sector(hp)),
        weight.w[hm] + age(data.rep, decoration.sector(hm)),
    )


def split_monomial(graph: StableGraph, mono: Monomial) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]:
    """
    Turns a series monomial into the psi exponents per half-edge and the
    sorted kappa degrees per vertex, the shape ClassBuilder.add takes.
    """
    psi = [0] * graph.num_half_edges
    kappa: list[list[int]] = [[] for _ in range(graph.num_vertices)]
    for var, exp in mono:
        if var.kind == "psi":
            psi[var.index] += exp
        else:
            kappa[var.index].extend([var.degree] * exp)
    return tuple(psi), tuple(tuple(sorted(k)) for k in kappa)


EdgeFactor = Callable[[TopData, WeightFunction, int, int], GradedSeries]
LocalFactor = Callable[[TopData, StableGraph, int, int], GradedSeries]
Scale = Callable[[int, int, StableGraph, int], Fraction]


def _assemble(
    data: TopData,
    d: int,
    r: int,
    local_factor: LocalFactor,
    edge_factor: EdgeFactor,
    scale: Scale,
) -> TautClass:
    """
    Sums local * prod(edge factors) over graphs with at most d edges, their
    decorations and all weight functions mod r.

    The local factor depends only on the graph and multiplies the summed
    edge products of each decoration.
    """
    check_degree(data, d)
    builder = ClassBuilder(data.ambient)
    for graph in enumerate_graphs(data.g, data.n, edge_limit=d):
        budget = d - graph.num_edges
        aut = automorphism_order(graph)
        local = local_factor(data, graph, r, budget)
        for decoration in enumerate_decorations(graph, data.rep, data.leg_sectors):
            summed = GradedSeries(None, budget)
            # zero when the decoration admits no weights
            for weight in enumerate_weights(decoration, data.rep, data.lifts, r):
                product = GradedSeries.one(budget)
                for e in range(graph.num_edges):
                    product = product * edge_factor(data, weight, e, budget)
                if logger.isEnabledFor(logging.DEBUG):
                    logger.debug(
                        "r=%d graph=%s chi=%s w=%s contribution=%s",
                        r, graph.encode(), decoration.chi, weight.w, dict(product.items()),
                    )
                summed = summed + product
            for mono, coeff in (local * summed).items():
                degree = monomial_degree(mono) + graph.num_edges
                psi, kappa = split_monomial(graph, mono)
                builder.add(graph, decoration.chi, psi, kappa, coeff * scale(r, degree, graph, aut))
    return builder.build()


def _full_local(data: TopData, graph: StableGraph, r: int, budget: int) -> GradedSeries:
    series = GradedSeries.one(budget)
    for v in range(graph.num_vertices):
        series = series * vertex_factor(v, budget)
    for i, a in enumerate(data.lifts):
        series = series * leg_factor(i, rational_mod(a, r) / r, budget)
    return series


def _full_edge_factor(data: TopData, weight: WeightFunction, e: int, budget: int) -> GradedSeries:
    x_plus, _ = _edge_ends(data, weight, e)
    return _edge_to_series(weight.graph, e, _full_edge(x_plus / weight.r, budget), budget)


def _full_scale(r: int, degree: int, graph: StableGraph, aut: int) -> Fraction:
    # r^(2 degree - 2g + 1) times r^(2g - 1 - h1) from the graph sum
    exponent = 2 * degree - 2 * graph.genus + 1 + strata_degree_exponent(graph, graph.genus)
    return Fraction(r) ** exponent / aut


def class_at_r(data: TopData, d: int, r: int) -> TautClass:
    """
    Every degree d' <= d part of the class at r, each multiplied by
    r^(2d' - 2g + 1).
    """
    logger.info("class_at_r g=%d n=%d m=%d d=%d r=%d", data.g, data.n, data.rep.m, d, r)
    return _assemble(data, d, r, _full_local, _full_edge_factor, _full_scale)


def leading_legs(data: TopData, budget: int) -> GradedSeries:
    """Product of the leading leg factors; no r and no kappa terms."""
    series = GradedSeries.one(budget)
    for i, a in enumerate(data.lifts):
        series = series * leading_leg_factor(i, a, budget)
    return series


def _leading_local(data: TopData, graph: StableGraph, r: int, budget: int) -> GradedSeries:
    return leading_legs(data, budget)


def _leading_edge_factor(data: TopData, weight: WeightFunction, e: int, budget: int) -> GradedSeries:
    x_plus, x_minus = _edge_ends(data, weight, e)
    return _edge_to_series(weight.graph, e, _leading_edge(x_plus * x_minus, budget), budget)


def _leading_scale(r: int, degree: int, graph: StableGraph, aut: int) -> Fraction:
    return Fraction(1, r ** graph.h1 * aut)


def leading_term_at_r(data: TopData, d: int, r: int) -> TautClass:
    """
    The leading-term weight sums at one r, enumerated weight by weight and
    scaled by r^-h1 / |Aut|. Agrees with leading_rpoly evaluated at r.
    """
    logger.info("leading_term_at_r g=%d n=%d m=%d d=%d r=%d", data.g, data.n, data.rep.m, d, r)
    return _assemble(data, d, r, _leading_local, _leading_edge_factor, _leading_scale)
