import logging
from fractions import Fraction
from typing import Mapping, Optional

from src.core.config import settings
from src.core.errors import DimensionMismatch, OrbifoldEvaluationDisabled
from src.oracle.intersection import kappa_psi_integral
from src.taut.classes import GraphTerm, TautClass

logger = logging.getLogger(__name__)


def term_integral(term: GraphTerm, psi_insertions: Mapping[int, int], m: int = 1) -> Fraction:
    """
    Integral of one decorated stratum class times psi insertions on legs.

    The coefficient multiplies the plain pushforward from the product of the
    vertex moduli spaces, with no 1/|Aut| factor applied here; any such
    factor is already part of the coefficient. Under this convention the
    integral of DR_1(a, -a) psi_1 comes out as (a^2 - 1) / 24. The integral
    of a term is then the product of vertex integrals. For m > 1 each
    vertex carries the degree m^(2g(v) - 1) of the forgetful map from the
    cyclic-cover space.
    """
    graph = term.graph
    value = term.coefficient
    for v in range(graph.num_vertices):
        exponents = []
        for h in graph.half_edges_at(v):
            exponent = term.psi[h]
            if graph.is_leg(h):
                exponent += psi_insertions.get(h, 0)
            exponents.append(exponent)
        value *= kappa_psi_integral(graph.genera[v], exponents, term.kappa[v])
        if m > 1:
            value *= Fraction(m) ** (2 * graph.genera[v] - 1)
        if value == 0:
            break
    return value


def evaluate_class_integral(c: TautClass, psi_insertions: Optional[Mapping[int, int]] = None) -> Fraction:
    insertions = dict(psi_insertions or {})
    ambient = c.ambient
    for leg, exponent in insertions.items():
        if not 0 <= leg < ambient.n or exponent < 0:
            raise ValueError(f"bad psi insertion {exponent} on leg {leg}")
    if ambient.m > 1 and not settings.ORBIFOLD_EVALUATION:
        raise OrbifoldEvaluationDisabled(
            "integrating classes with m > 1 is disabled; set ORBIDR_ORBIFOLD_EVALUATION=true"
        )
    extra = sum(insertions.values())
    wrong = sorted({t.key.degree for t in c.terms() if t.key.degree + extra != ambient.dimension})
    if wrong:
        raise DimensionMismatch(
            f"terms of degree {wrong} plus insertions of degree {extra} "
            f"do not reach dimension {ambient.dimension}"
        )
    total = Fraction(0)
    for term in c.terms():
        total += term_integral(term, insertions, ambient.m)
    logger.debug("integral over %s with insertions %s: %s", ambient, insertions, total)
    return total
