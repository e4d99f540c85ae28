"""
Graded series in psi and kappa variables, truncated at a total degree.

A monomial is a sorted tuple of (Var, exponent) pairs. psi variables have
degree 1; kappa_b has degree b.

Series live in a sympy sparse ring over QQ with one extra generator t that
records the weighted degree: a monomial of degree k carries t^k, so
truncation is rs_mul/rs_exp modulo t^(max_degree + 1).
"""
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, NamedTuple, Optional, Sequence

from sympy.polys.domains import QQ
from sympy.polys.ring_series import rs_exp, rs_mul
from sympy.polys.rings import PolyElement, ring

from src.core.errors import NonNilpotentInput, NotDivisible
from src.exact.polynomial import from_qq, to_qq


class Var(NamedTuple):
    kind: str
    index: int
    degree: int


def psi_var(h: int) -> Var:
    return Var("psi", h, 1)


def kappa_var(v: int, b: int) -> Var:
    return Var("kappa", v, b)


Monomial = tuple[tuple[Var, int], ...]


def monomial_degree(mono: Monomial) -> int:
    return sum(var.degree * exp for var, exp in mono)


def multiply_monomials(a: Monomial, b: Monomial) -> Monomial:
    merged: dict[Var, int] = dict(a)
    for var, exp in b:
        merged[var] = merged.get(var, 0) + exp
    return tuple(sorted(merged.items()))


class _Space:
    """A ring QQ[t, vars...] for one sorted tuple of variables."""

    def __init__(self, variables: tuple[Var, ...]):
        self.variables = variables
        self.position = {var: i + 1 for i, var in enumerate(variables)}
        names = ["t"] + [f"{v.kind}_{v.index}_{v.degree}" for v in variables]
        self.ring, self.t, *_ = ring(names, QQ)

    def exponents(self, mono: Monomial) -> tuple[int, ...]:
        exps = [0] * (len(self.variables) + 1)
        exps[0] = monomial_degree(mono)
        for var, exp in mono:
            exps[self.position[var]] += exp
        return tuple(exps)

    def monomial(self, exps: tuple[int, ...]) -> Monomial:
        return tuple((var, e) for var, e in zip(self.variables, exps[1:]) if e)


@lru_cache(maxsize=None)
def _space(variables: tuple[Var, ...]) -> _Space:
    return _Space(variables)


def _truncate(element: PolyElement, max_degree: int) -> PolyElement:
    if all(exps[0] <= max_degree for exps in element.itermonoms()):
        return element
    return element.ring({exps: c for exps, c in element.iterterms() if exps[0] <= max_degree})


class GradedSeries:
    __slots__ = ("space", "element", "max_degree")

    def __init__(self, terms: Optional[Mapping[Monomial, Fraction]] = None, max_degree: int = 0):
        terms = {mono: c for mono, c in (terms or {}).items() if c != 0}
        variables = sorted({var for mono in terms for var, _ in mono})
        self.space = _space(tuple(variables))
        self.max_degree = max_degree
        self.element = self.space.ring(
            {
                self.space.exponents(mono): to_qq(c)
                for mono, c in terms.items()
                if monomial_degree(mono) <= max_degree
            }
        )

    @classmethod
    def _wrap(cls, space: _Space, element: PolyElement, max_degree: int) -> "GradedSeries":
        out = cls.__new__(cls)
        out.space = space
        out.element = element
        out.max_degree = max_degree
        return out

    @classmethod
    def one(cls, max_degree: int) -> "GradedSeries":
        return cls({(): Fraction(1)}, max_degree)

    @classmethod
    def from_powers(cls, var: Var, coefficients: Sequence[Fraction], max_degree: int) -> "GradedSeries":
        """sum_k coefficients[k] * var^k."""
        terms = {}
        for k, c in enumerate(coefficients):
            terms[((var, k),) if k else ()] = c
        return cls(terms, max_degree)

    def items(self) -> Iterable[tuple[Monomial, Fraction]]:
        for exps, c in self.element.iterterms():
            if c:
                yield self.space.monomial(exps), from_qq(c)

    def coefficient(self, mono: Monomial) -> Fraction:
        if any(var not in self.space.position for var, _ in mono):
            return Fraction(0)
        return from_qq(self.element.get(self.space.exponents(mono), QQ.zero))

    def has_constant_term(self) -> bool:
        return bool(self.element.get(self.space.ring.zero_monom, QQ.zero))

    def _unify(self, other: "GradedSeries") -> tuple[_Space, PolyElement, PolyElement]:
        if self.space is other.space:
            return self.space, self.element, other.element
        space = _space(tuple(sorted(set(self.space.variables) | set(other.space.variables))))
        return space, self.element.set_ring(space.ring), other.element.set_ring(space.ring)

    def __add__(self, other: "GradedSeries") -> "GradedSeries":
        bound = min(self.max_degree, other.max_degree)
        space, a, b = self._unify(other)
        return GradedSeries._wrap(space, _truncate(a + b, bound), bound)

    def __mul__(self, other: "GradedSeries") -> "GradedSeries":
        bound = min(self.max_degree, other.max_degree)
        space, a, b = self._unify(other)
        return GradedSeries._wrap(space, rs_mul(a, b, space.t, bound + 1), bound)

    def scale(self, c: Fraction) -> "GradedSeries":
        return GradedSeries._wrap(self.space, self.element * to_qq(c), self.max_degree)

    def __repr__(self) -> str:
        return f"GradedSeries({dict(self.items())!r}, max_degree={self.max_degree})"


def exp_truncated(generator: GradedSeries, max_degree: int) -> GradedSeries:
    """exp of a series without constant part, up to max_degree."""
    if generator.has_constant_term():
        raise NonNilpotentInput("exp_truncated needs a generator without degree-0 part")
    space = generator.space
    element = _truncate(generator.element, max_degree)
    if not element or max_degree == 0:
        return GradedSeries._wrap(space, space.ring.one, max_degree)
    return GradedSeries._wrap(space, rs_exp(element, space.t, max_degree + 1), max_degree)


@lru_cache(maxsize=None)
def _edge_ring():
    return ring("t,p,q", QQ)


def edge_series(coefficients: Sequence[Fraction], max_degree: int) -> dict[tuple[int, int], Fraction]:
    """
    (1 - exp(X)) / (p + q) up to degree max_degree in p, q, where
    X = sum_{k>=1} coefficients[k] * (p^k - (-q)^k).

    Returns {(i, j): coefficient of p^i q^j}.
    """
    R, t, p, q = _edge_ring()
    top = max_degree + 1
    generator = R.zero
    for k, ck in enumerate(coefficients):
        if k >= 1 and ck != 0 and k <= top:
            generator += to_qq(ck) * t**k * (p**k - (-q) ** k)
    numerator = R.one - (rs_exp(generator, t, top + 1) if generator else R.one)

    quotient, remainder = numerator.div(t * (p + q))
    if remainder:
        raise NotDivisible("numerator of the edge series is not divisible by p + q")
    return {
        (exps[1], exps[2]): from_qq(c)
        for exps, c in quotient.iterterms()
        if c and exps[1] + exps[2] <= max_degree
    }
