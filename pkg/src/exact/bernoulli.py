from fractions import Fraction
from functools import lru_cache

from sympy import bernoulli

from src.exact.polynomial import R_SYMBOL, UniPoly


@lru_cache(maxsize=None)
def bernoulli_polynomial(k: int) -> UniPoly:
    """B_k(x), with x carried by the polynomial variable."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return UniPoly.from_expr(bernoulli(k, R_SYMBOL))


@lru_cache(maxsize=None)
def bernoulli_number(k: int) -> Fraction:
    """
    B_k = B_k(0), so B_1 = -1/2.

    sympy's bare bernoulli(1) is +1/2; reading the constant term of the
    polynomial keeps the older sign.
    """
    return bernoulli_polynomial(k).coefficient(0)


def bernoulli_value(k: int, x: Fraction) -> Fraction:
    return bernoulli_polynomial(k)(x)


@lru_cache(maxsize=None)
def power_sum(k: int) -> UniPoly:
    """Faulhaber: sum_{w=0}^{n-1} w^k as a polynomial in n."""
    if k < 0:
        raise ValueError("k must be >= 0")
    b = bernoulli_polynomial(k + 1)
    return (b - b.coefficient(0)) * Fraction(1, k + 1)


def bernoulli_multiplication_sum(k: int, r: int) -> Fraction:
    """sum_{w=0}^{r-1} B_k(w / r), which equals r^(1-k) B_k."""
    if r < 1:
        raise ValueError("r must be positive")
    return sum((bernoulli_value(k, Fraction(w, r)) for w in range(r)), Fraction(0))
