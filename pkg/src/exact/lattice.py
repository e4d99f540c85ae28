"""
Exact sums of polynomials over lattice points of polytopes that grow with r.

A constraint is an affine form a.u + b + c*r >= 0 in integer unknowns
u_0..u_{n-1}, with every a_i in {-1, 0, 1}. The unknowns are summed out one
at a time: the region is split by which lower and which upper bound is
active, each slice is summed in closed form with Faulhaber polynomials,
and the choice of active bounds becomes new constraints on the remaining
unknowns. Constraints in r alone are decided for large r, so the result is
the polynomial in r that agrees with the sum once r exceeds every constant
in the input.
"""
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Optional, Sequence

from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement, PolyRing, ring

from src.exact.bernoulli import power_sum
from src.exact.polynomial import to_qq


@dataclass(frozen=True)
class Affine:
    """const + r_coeff * r + sum_i coeffs[i] * u_i."""

    coeffs: tuple[int, ...]
    const: int = 0
    r_coeff: int = 0

    @classmethod
    def constant(cls, value: int, nvars: int) -> "Affine":
        return cls((0,) * nvars, value)

    @classmethod
    def unit(cls, index: int, nvars: int) -> "Affine":
        return cls(tuple(int(i == index) for i in range(nvars)))

    def __add__(self, other: "Affine") -> "Affine":
        return Affine(
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs)),
            self.const + other.const,
            self.r_coeff + other.r_coeff,
        )

    def __neg__(self) -> "Affine":
        return Affine(tuple(-a for a in self.coeffs), -self.const, -self.r_coeff)

    def __sub__(self, other: "Affine") -> "Affine":
        return self + (-other)

    def shift(self, const: int = 0, r_coeff: int = 0) -> "Affine":
        return replace(self, const=self.const + const, r_coeff=self.r_coeff + r_coeff)

    def drop(self, index: int) -> "Affine":
        coeffs = list(self.coeffs)
        coeffs[index] = 0
        return replace(self, coeffs=tuple(coeffs))

    @property
    def is_constant(self) -> bool:
        return not any(self.coeffs)

    def holds_for_large_r(self) -> bool:
        """Whether const + r_coeff * r >= 0 for every large r. Needs a constant form."""
        if self.r_coeff:
            return self.r_coeff > 0
        return self.const >= 0

    def element(self, R: PolyRing) -> PolyElement:
        r, *u = R.gens
        out = R(self.const) + self.r_coeff * r
        for a, gen in zip(self.coeffs, u):
            if a:
                out += a * gen
        return out


@lru_cache(maxsize=None)
def lattice_ring(nvars: int) -> PolyRing:
    """QQ[r, u_0, ..., u_{nvars-1}]."""
    R, *_ = ring(["r"] + [f"u{i}" for i in range(nvars)], QQ)
    return R


def _faulhaber_at(k: int, n: PolyElement) -> PolyElement:
    """sum_{w=0}^{n-1} w^k with n an element of the ring."""
    acc = n.ring.zero
    for c in reversed(power_sum(k).coeffs):
        acc = acc * n + to_qq(c)
    return acc


def sum_variable(summand: PolyElement, index: int, lower: PolyElement, upper: PolyElement) -> PolyElement:
    """sum_{u_index = lower}^{upper} summand, for bounds free of u_index."""
    R = summand.ring
    slot = index + 1
    by_power: dict[int, PolyElement] = {}
    for exps, c in summand.iterterms():
        rest = exps[:slot] + (0,) + exps[slot + 1:]
        by_power[exps[slot]] = by_power.get(exps[slot], R.zero) + R({rest: c})
    total = R.zero
    for k, coeff in by_power.items():
        total += coeff * (_faulhaber_at(k, upper + 1) - _faulhaber_at(k, lower))
    return total


def _prune(constraints: Sequence[Affine]) -> Optional[tuple[Affine, ...]]:
    kept: list[Affine] = []
    for c in constraints:
        if c.is_constant:
            if not c.holds_for_large_r():
                return None
        elif c not in kept:
            kept.append(c)
    return tuple(kept)


def _eliminate(constraints: Sequence[Affine], summand: PolyElement, depth: int) -> PolyElement:
    R = summand.ring
    pruned = _prune(constraints)
    if pruned is None or not summand:
        return R.zero
    if depth == 0:
        return summand

    i = depth - 1
    lowers = [c for c in pruned if c.coeffs[i] > 0]
    uppers = [c for c in pruned if c.coeffs[i] < 0]
    rest = [c for c in pruned if c.coeffs[i] == 0]
    if any(abs(c.coeffs[i]) != 1 for c in lowers + uppers):
        raise ValueError(f"constraint on u{i} is not unimodular")
    if not lowers or not uppers:
        raise ValueError(f"u{i} is unbounded")

    low_bounds = [-c.drop(i) for c in lowers]
    up_bounds = [c.drop(i) for c in uppers]
    total = R.zero
    for j, low in enumerate(low_bounds):
        for k, up in enumerate(up_bounds):
            # low is the largest lower bound (strictly, against earlier ones), up the smallest upper
            extra = [up - low]
            extra += [low - other if jj > j else (low - other).shift(-1)
                      for jj, other in enumerate(low_bounds) if jj != j]
            extra += [other - up if kk > k else (other - up).shift(-1)
                      for kk, other in enumerate(up_bounds) if kk != k]
            piece = sum_variable(summand, i, low.element(R), up.element(R))
            total += _eliminate(rest + extra, piece, i)
    return total


def region_sum(constraints: Sequence[Affine], summand: PolyElement) -> PolyElement:
    """
    Sum of summand over the integer points of the region, as an element of
    QQ[r] inside the summand's ring. Every unknown must be bounded on both
    sides by the constraints.
    """
    nvars = summand.ring.ngens - 1
    if any(len(c.coeffs) != nvars for c in constraints):
        raise ValueError("constraint arity does not match the ring")
    return _eliminate(tuple(constraints), summand, nvars)
