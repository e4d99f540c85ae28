"""psi and kappa intersection numbers on Mbar_{g,n}.

psi integrals follow the string equation and the DVV recursion, memoized on
(g, sorted exponents). kappa classes are turned into psi classes on extra
points through a signed sum over set partitions of the kappa indices.
"""
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from src.core.errors import Unstable


def double_factorial(n: int) -> int:
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


def _stable(g: int, n: int) -> bool:
    return g >= 0 and 2 * g - 2 + n > 0


def _value(g: int, exponents: Sequence[int]) -> Fraction:
    if not _stable(g, len(exponents)) or any(e < 0 for e in exponents):
        return Fraction(0)
    return _psi(g, tuple(sorted(exponents)))


@lru_cache(maxsize=None)
def _psi(g: int, exps: tuple[int, ...]) -> Fraction:
    n = len(exps)
    if sum(exps) != 3 * g - 3 + n:
        return Fraction(0)
    if g == 0 and n == 3:
        return Fraction(1)
    if g == 1 and n == 1:
        return Fraction(1, 24)

    if exps[0] == 0:
        # string equation
        rest = list(exps[1:])
        total = Fraction(0)
        for j, e in enumerate(rest):
            if e:
                total += _value(g, rest[:j] + [e - 1] + rest[j + 1:])
        return total

    k = exps[0] - 1
    rest = list(exps[1:])
    total = Fraction(0)
    for j, dj in enumerate(rest):
        coeff = Fraction(double_factorial(2 * k + 2 * dj + 1), double_factorial(2 * dj - 1))
        total += coeff * _value(g, rest[:j] + [dj + k] + rest[j + 1:])
    for a in range(k):
        b = k - 1 - a
        coeff = Fraction(double_factorial(2 * a + 1) * double_factorial(2 * b + 1), 2)
        total += coeff * _value(g - 1, rest + [a, b])
        for mask in range(2 ** len(rest)):
            left = [e for i, e in enumerate(rest) if mask >> i & 1]
            right = [e for i, e in enumerate(rest) if not mask >> i & 1]
            for g1 in range(g + 1):
                total += coeff * _value(g1, left + [a]) * _value(g - g1, right + [b])
    return total / double_factorial(2 * k + 3)


def psi_integral(g: int, exponents: Sequence[int]) -> Fraction:
    """Integral over Mbar_{g,n} of prod psi_i^{exponents[i]}; zero off-dimension."""
    n = len(exponents)
    if not _stable(g, n):
        raise Unstable(f"(g, n) = ({g}, {n}) is not stable")
    if any(e < 0 for e in exponents):
        raise ValueError("psi exponents must be non-negative")
    if n == 0:
        # Mbar_g has positive dimension for g >= 2
        return Fraction(0)
    return _psi(g, tuple(sorted(exponents)))


def set_partitions(items: Sequence[int]) -> Iterator[list[list[int]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for partition in set_partitions(rest):
        yield [[first]] + partition
        for i in range(len(partition)):
            yield partition[:i] + [[first] + partition[i]] + partition[i + 1:]


def kappa_psi_integral(g: int, psi_exponents: Sequence[int], kappa_indices: Sequence[int]) -> Fraction:
    """
    Integral of prod psi_i^{e_i} * prod kappa_{b_j} over Mbar_{g,n}.

    Uses kappa_b = pi_*(psi^{b+1}) for the forgetful map. Each set partition of
    the kappa factors adds one point per block, carrying psi to the power
    (sum of the block indices) + 1, with sign (-1)^(#factors - #blocks).
    """
    n = len(psi_exponents)
    if not _stable(g, n):
        raise Unstable(f"(g, n) = ({g}, {n}) is not stable")
    if not kappa_indices:
        return psi_integral(g, psi_exponents)
    total = Fraction(0)
    m = len(kappa_indices)
    for partition in set_partitions(list(range(m))):
        extra = [sum(kappa_indices[i] for i in block) + 1 for block in partition]
        sign = -1 if (m - len(partition)) % 2 else 1
        total += sign * _value(g, list(psi_exponents) + extra)
    return total
