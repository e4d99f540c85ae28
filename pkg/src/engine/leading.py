"""
The leading-term class, computed without sampling r.

On a graph with a fixed decoration the leading edge factor depends on the
weights only through P_e = x_e (r - x_e), x_e = w(h+) + age(h+), and every
coefficient of the edge product is a monomial in the P_e. The weight
functions are affine in the free cycle parameters mod r (see
symbolic_weights), so summing such a monomial over all of them is a lattice
sum over the parameter box, cut into pieces by the carries of the reduced
tree-edge weights. Each piece is summed exactly with Faulhaber polynomials,
leaving a polynomial in r. Multiplying by r^-h1 / |Aut| and reading off
the r^0 coefficient gives the class.
"""
import itertools
import logging
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, NamedTuple

from src.core.errors import NotDivisible
from src.decorations.decorations import enumerate_decorations
from src.decorations.weights import SymbolicWeights, symbolic_weights
from src.engine.formula import check_degree, leading_legs, split_monomial
from src.engine.problem import TopData
from src.engine.rpoly import RPolyClass
from src.exact.lattice import Affine, lattice_ring, region_sum
from src.exact.polynomial import UniPoly, from_qq, to_qq
from src.graphs.canonical import automorphism_order
from src.graphs.enumeration import enumerate_graphs
from src.graphs.stable_graph import StableGraph
from src.orbifold.sectors import age
from src.taut.classes import ClassBuilder, TautClass, TermKey, canonical_key, within_dimension
from src.taut.series import (
    Monomial,
    edge_series,
    monomial_degree,
    multiply_monomials,
    psi_var,
)

logger = logging.getLogger(__name__)


class EdgeTerm(NamedTuple):
    """One monomial of the edge product: psi part, rational part, power of each P_e."""

    psi: Monomial
    coefficient: Fraction
    exponents: tuple[int, ...]


@lru_cache(maxsize=None)
def _unit_edge(budget: int) -> tuple[tuple[int, int, Fraction], ...]:
    # (1 - exp(-P (p + q) / 2)) / (p + q) at P = 1; the p^i q^j coefficient scales as P^(i+j+1)
    series = edge_series([Fraction(0), Fraction(-1, 2)], budget)
    return tuple((i, j, c) for (i, j), c in sorted(series.items()))


def edge_terms(graph: StableGraph, budget: int) -> list[EdgeTerm]:
    """Expands the product of the leading edge factors with every P_e kept symbolic."""
    out = []
    for choice in itertools.product(_unit_edge(budget), repeat=graph.num_edges):
        if sum(i + j for i, j, _ in choice) > budget:
            continue
        coefficient = Fraction(1)
        powers: dict = {}
        for e, (i, j, c) in enumerate(choice):
            hp, hm = graph.edge_halves(e)
            coefficient *= c
            for h, k in ((hp, i), (hm, j)):
                if k:
                    powers[psi_var(h)] = powers.get(psi_var(h), 0) + k
        exponents = tuple(i + j + 1 for i, j, _ in choice)
        out.append(EdgeTerm(tuple(sorted(powers.items())), coefficient, exponents))
    return out


def _carries(form: Affine) -> range:
    """The values of floor(form / r) over the parameter box, for large r."""
    up = sum(1 for a in form.coeffs if a > 0)
    down = sum(1 for a in form.coeffs if a < 0)
    low = -down - (1 if form.const + down < 0 else 0)
    high = up - (1 if form.const - up < 0 else 0)
    return range(low, high + 1)


def _to_unipoly(element) -> UniPoly:
    coeffs: dict[int, Fraction] = {}
    for exps, c in element.iterterms():
        if any(exps[1:]):
            raise ValueError("weight sum still depends on a cycle parameter")
        coeffs[exps[0]] = from_qq(c)
    top = max(coeffs, default=-1)
    return UniPoly(coeffs.get(k, Fraction(0)) for k in range(top + 1))


def weight_sum(data: TopData, weights: SymbolicWeights, exponents: tuple[int, ...]) -> UniPoly:
    """
    sum over every weight function of prod_e P_e^exponents[e], exactly, as a
    polynomial in r valid for all r above the constants of the problem.
    """
    decoration = weights.decoration
    graph = decoration.graph
    nvars = weights.num_parameters
    R = lattice_ring(nvars)
    r = R.gens[0]

    box = []
    for i in range(nvars):
        unit = Affine.unit(i, nvars)
        box += [unit, (-unit).shift(-1, 1)]

    edges = []
    for e in range(graph.num_edges):
        hp, _ = graph.edge_halves(e)
        form = weights.forms[hp]
        edges.append((form, to_qq(age(data.rep, decoration.sector(hp))), _carries(form)))

    total = R.zero
    for carries in itertools.product(*(c for _, _, c in edges)):
        constraints = list(box)
        summand = R.one
        for (form, alpha, _), m, k in zip(edges, carries, exponents):
            # w(h+) = form - m r must land in 0..r-1
            reduced = form.shift(r_coeff=-m)
            constraints += [reduced, (-reduced).shift(-1, 1)]
            x = reduced.element(R) + alpha
            summand *= (x * (r - x)) ** k
        total += region_sum(constraints, summand)
    return _to_unipoly(total)


class _Contribution(NamedTuple):
    graph: StableGraph
    chi: tuple[int, ...]
    mono: Monomial
    aut: int
    poly: UniPoly


def _contributions(data: TopData, d: int) -> Iterator[_Contribution]:
    check_degree(data, d)
    for graph in enumerate_graphs(data.g, data.n, edge_limit=d):
        budget = d - graph.num_edges
        aut = automorphism_order(graph)
        legs = list(leading_legs(data, budget).items())
        terms = edge_terms(graph, budget)
        for decoration in enumerate_decorations(graph, data.rep, data.leg_sectors):
            weights = symbolic_weights(decoration, data.rep, data.lifts)
            if weights is None:
                continue
            sums: dict[tuple[int, ...], UniPoly] = {}
            for term in terms:
                if term.exponents not in sums:
                    sums[term.exponents] = weight_sum(data, weights, term.exponents)
                    logger.debug(
                        "graph=%s chi=%s exponents=%s weight_sum=%s",
                        graph.encode(), decoration.chi, term.exponents, sums[term.exponents],
                    )
            for leg_mono, leg_coeff in legs:
                for term in terms:
                    if monomial_degree(leg_mono) + monomial_degree(term.psi) > budget:
                        continue
                    poly = sums[term.exponents] * (leg_coeff * term.coefficient)
                    if poly:
                        mono = multiply_monomials(leg_mono, term.psi)
                        yield _Contribution(graph, decoration.chi, mono, aut, poly)


def leading_term_class(data: TopData, d: int) -> TautClass:
    """
    Constant term of the leading-term weight sums, every degree up to d.

    No r is sampled: each weight sum is a polynomial in r from weight_sum,
    and the r^0 coefficient of r^-h1 times it is its r^h1 coefficient.
    """
    logger.info("leading_term_class g=%d n=%d m=%d d=%d", data.g, data.n, data.rep.m, d)
    builder = ClassBuilder(data.ambient)
    for item in _contributions(data, d):
        psi, kappa = split_monomial(item.graph, item.mono)
        builder.add(item.graph, item.chi, psi, kappa, item.poly.coefficient(item.graph.h1) / item.aut)
    return builder.build()


def _divide_by_power(poly: UniPoly, h: int) -> UniPoly:
    coeffs = poly.coeffs
    if any(coeffs[:h]):
        raise NotDivisible(f"weight sum {poly} is not divisible by r^{h}")
    return UniPoly(coeffs[h:])


def leading_rpoly(data: TopData, d: int) -> RPolyClass:
    """The leading-term weight sums times r^-h1 / |Aut| as polynomials in r."""
    terms: dict[TermKey, UniPoly] = {}
    for item in _contributions(data, d):
        psi, kappa = split_monomial(item.graph, item.mono)
        if not within_dimension(item.graph, psi, kappa):
            continue
        key = canonical_key(item.graph, item.chi, psi, kappa)
        share = _divide_by_power(item.poly, item.graph.h1) * Fraction(1, item.aut)
        terms[key] = terms.get(key, UniPoly()) + share
    return RPolyClass(data.ambient, {k: p for k, p in terms.items() if p}, ())
