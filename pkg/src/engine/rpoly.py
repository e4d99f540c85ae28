import logging
from dataclasses import dataclass
from functools import partial
from typing import Callable, Mapping, Optional, Sequence

from src.core.errors import InsufficientSamples, NotPolynomial
from src.core.pool import ordered_map
from src.engine.bounds import default_samples, degree_bound, working_bound
from src.engine.formula import check_degree, class_at_r
from src.engine.problem import TopData
from src.exact.polynomial import UniPoly, constant_term, lagrange_interpolate
from src.taut.classes import Ambient, TautClass, TermKey, term_to_json

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RPolyClass:
    """A tautological class whose coefficients are polynomials in r."""

    ambient: Ambient
    terms: Mapping[TermKey, UniPoly]
    samples: tuple[int, ...]

    def constant_term(self) -> TautClass:
        return TautClass(self.ambient, {k: constant_term(p) for k, p in self.terms.items()})

    def evaluate(self, r: int) -> TautClass:
        return TautClass(self.ambient, {k: p(r) for k, p in self.terms.items()})

    @property
    def max_degree(self) -> int:
        return max((int(p.degree) for p in self.terms.values()), default=0)

    def to_json(self) -> list[dict]:
        return [
            term_to_json(key, [str(c) for c in self.terms[key].coeffs], "rpoly")
            for key in sorted(self.terms, key=TermKey.sort_key)
        ]


def _check_samples(data: TopData, d: int, samples: Sequence[int]) -> None:
    needed = degree_bound(d) + 3
    if len(samples) < needed:
        raise InsufficientSamples(f"need at least {needed} r-samples, got {len(samples)}")
    bound = working_bound(data)
    low = [r for r in samples if r <= bound]
    if low:
        raise NotPolynomial(
            f"r-samples {low} are not above the working bound {bound}; "
            f"use r > {bound}"
        )


def _interpolate(
    data: TopData,
    d: int,
    r_samples: Optional[Sequence[int]],
    at_r: Callable[[TopData, int, int], TautClass],
) -> RPolyClass:
    check_degree(data, d)
    samples = tuple(r_samples) if r_samples is not None else tuple(default_samples(data, d))
    _check_samples(data, d, samples)
    classes = ordered_map(partial(at_r, data, d), samples)
    keys = set()
    for c in classes:
        keys.update(c.keys())
    terms = {}
    for key in keys:
        values = [(r, c[key]) for r, c in zip(samples, classes)]
        try:
            poly = lagrange_interpolate(values, degree_bound(d))
        except NotPolynomial as exc:
            raise NotPolynomial(f"term {key.graph.encode()} chi={key.chi}: {exc}") from exc
        if poly:
            terms[key] = poly
    logger.info("interpolated %d terms from samples %s", len(terms), list(samples))
    return RPolyClass(data.ambient, terms, samples)


def polynomial_class(data: TopData, d: int, r_samples: Optional[Sequence[int]] = None) -> RPolyClass:
    """Interpolates class_at_r over the samples, checking the surplus ones."""
    return _interpolate(data, d, r_samples, class_at_r)

