import math
import random
from fractions import Fraction

import pytest

from src.core.errors import NotPolynomial, ProblemFileError
from src.exact.bernoulli import (
    bernoulli_multiplication_sum,
    bernoulli_number,
    bernoulli_polynomial,
    power_sum,
)
from src.exact.polynomial import NEG_INF, UniPoly, constant_term, lagrange_interpolate
from src.exact.rational import format_rational, frac, parse_rational, rational_mod


def test_parse_and_format_rational():
    assert parse_rational("-3/6") == Fraction(-1, 2)
    assert parse_rational(" 7 ") == 7
    assert format_rational(Fraction(-1, 2)) == "-1/2"
    assert format_rational(Fraction(4, 2)) == "2"


@pytest.mark.parametrize("text", ["abc", "1/0", "1.5", "", "2/-3"])
def test_parse_rational_rejects_garbage(text):
    with pytest.raises(ProblemFileError):
        parse_rational(text)


def test_rational_mod():
    assert rational_mod(-2, 5) == 3
    assert rational_mod(Fraction(-1, 3), 2) == Fraction(5, 3)
    assert rational_mod(7, 7) == 0
    assert frac(Fraction(-1, 3)) == Fraction(2, 3)
    with pytest.raises(ValueError):
        rational_mod(1, 0)


def test_unipoly_arithmetic():
    r = UniPoly((0, 1))
    p = (r + 1) ** 2
    assert p.coeffs == (1, 2, 1)
    assert p(3) == 16
    assert (p - p).is_zero()
    assert UniPoly().degree == NEG_INF
    assert p.compose(r * 2).coeffs == (1, 4, 4)
    assert (p * Fraction(1, 2)).coefficient(2) == Fraction(1, 2)
    assert UniPoly((1, 0, 0)).degree == 0
    assert UniPoly.monomial(2, 3) == UniPoly((0, 0, 3))


def test_lagrange_recovers_polynomial():
    samples = [(r, r * r + 1) for r in range(1, 6)]
    p = lagrange_interpolate(samples, 2)
    assert p.coeffs == (1, 0, 1)
    assert constant_term(p) == 1


def test_lagrange_detects_non_polynomial_surplus():
    with pytest.raises(NotPolynomial):
        lagrange_interpolate([(1, 1), (2, 2), (3, 4)], 1)


def test_lagrange_rejects_repeated_nodes():
    with pytest.raises(ValueError):
        lagrange_interpolate([(1, 1), (1, 1)], 0)


def test_bernoulli_numbers():
    assert bernoulli_number(0) == 1
    assert bernoulli_number(1) == Fraction(-1, 2)
    assert bernoulli_number(2) == Fraction(1, 6)
    assert bernoulli_number(3) == 0
    assert bernoulli_number(4) == Fraction(-1, 30)
    assert bernoulli_number(6) == Fraction(1, 42)


def test_bernoulli_polynomials():
    assert bernoulli_polynomial(1).coeffs == (Fraction(-1, 2), 1)
    assert bernoulli_polynomial(2)(Fraction(1, 3)) == Fraction(-1, 18)
    assert bernoulli_polynomial(3).coeffs == (0, Fraction(1, 2), Fraction(-3, 2), 1)


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_multiplication_theorem(k):
    for r in range(1, 7):
        expected = Fraction(r) ** (1 - k) * bernoulli_number(k)
        assert bernoulli_multiplication_sum(k, r) == expected


def test_power_sum_matches_direct_sum():
    for k in range(5):
        for n in (1, 4, 10):
            assert power_sum(k)(n) == sum(w ** k for w in range(n))


def _random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-40, 40), rng.randint(1, 12))


@pytest.mark.parametrize("k", range(9))
def test_bernoulli_addition_formula(k):
    rng = random.Random(7 + k)
    for _ in range(50):
        x, y = _random_rational(rng), _random_rational(rng)
        expected = sum(
            (math.comb(k, j) * bernoulli_polynomial(j)(x) * y ** (k - j) for j in range(k + 1)),
            Fraction(0),
        )
        assert bernoulli_polynomial(k)(x + y) == expected


@pytest.mark.parametrize("k", range(1, 7))
@pytest.mark.parametrize("q", [2, 3, 5])
def test_bernoulli_multiplication_formula_at_rational_points(k, q):
    rng = random.Random(100 * q + k)
    for _ in range(10):
        x = _random_rational(rng)
        shifted = sum((bernoulli_polynomial(k)(x + Fraction(w, q)) for w in range(q)), Fraction(0))
        assert shifted == Fraction(q) ** (1 - k) * bernoulli_polynomial(k)(q * x)


def test_bernoulli_polynomial_difference():
    # B_k(x + 1) - B_k(x) = k x^(k-1)
    for k in range(1, 9):
        b = bernoulli_polynomial(k)
        assert b.compose(UniPoly((1, 1))) - b == UniPoly.monomial(k - 1, k)
