import itertools
import math
from fractions import Fraction

import pytest

from src.core.config import settings
from src.core.errors import DimensionMismatch, OrbifoldEvaluationDisabled, Unstable
from src.graphs.stable_graph import StableGraph
from src.oracle.evaluate import evaluate_class_integral
from src.oracle.intersection import (
    double_factorial,
    kappa_psi_integral,
    psi_integral,
    set_partitions,
)
from src.taut.classes import Ambient, TautClass, TermKey


@pytest.mark.parametrize(
    "g, exponents, expected",
    [
        (0, [0, 0, 0], Fraction(1)),
        (1, [1], Fraction(1, 24)),
        (2, [4], Fraction(1, 1152)),
        (2, [5, 0], Fraction(1, 1152)),
        (2, [4, 1], Fraction(1, 384)),
        (2, [3, 2], Fraction(29, 5760)),
        (0, [1, 1, 0, 0, 0], Fraction(2)),
        (1, [1, 1], Fraction(1, 24)),
        (3, [7], Fraction(1, 82944)),
    ],
)
def test_psi_integrals(g, exponents, expected):
    assert psi_integral(g, exponents) == expected


def test_psi_integral_is_symmetric():
    assert psi_integral(2, [2, 3]) == psi_integral(2, [3, 2])


def test_off_dimension_is_zero():
    assert psi_integral(1, [2]) == 0
    assert psi_integral(0, [1, 0, 0]) == 0


def test_unstable_raises():
    with pytest.raises(Unstable):
        psi_integral(0, [0, 0])
    with pytest.raises(Unstable):
        kappa_psi_integral(1, [], [1])


def test_double_factorial():
    assert [double_factorial(n) for n in (-1, 0, 1, 5, 6)] == [1, 1, 1, 15, 48]


def test_set_partitions_count_bell_numbers():
    assert [sum(1 for _ in set_partitions(list(range(k)))) for k in range(5)] == [1, 1, 2, 5, 15]


@pytest.mark.parametrize(
    "g, psi, kappa, expected",
    [
        (1, [0], [1], Fraction(1, 24)),
        (0, [0, 0, 0, 0], [1], Fraction(1)),
        (0, [0] * 5, [1, 1], Fraction(5)),
        (0, [0] * 5, [2], Fraction(1)),
        (0, [0] * 6, [1, 1, 1], Fraction(61)),
        (0, [1, 0, 0, 0, 0], [1], Fraction(3)),
    ],
)
def test_kappa_psi_integrals(g, psi, kappa, expected):
    assert kappa_psi_integral(g, psi, kappa) == expected


def _smooth_class(g: int, n: int, m: int = 1, coefficient=1) -> TautClass:
    graph = StableGraph((g,), (0,) * n, ())
    key = TermKey(graph, (0,) * n, (0,) * n, ((),))
    return TautClass(Ambient(g, n, m), {key: Fraction(coefficient)})


def test_fundamental_class_of_three_point_space():
    assert evaluate_class_integral(_smooth_class(0, 3)) == 1


def test_insertions_on_fundamental_class():
    assert evaluate_class_integral(_smooth_class(0, 4), {0: 1}) == 1
    assert evaluate_class_integral(_smooth_class(1, 1, coefficient=3), {0: 1}) == Fraction(1, 8)


def test_boundary_coefficient_multiplies_the_pushforward_without_automorphism_factor():
    loop = StableGraph((0,), (0,), ((0, 0),))
    key = TermKey(loop, (0, 0, 0), (0, 0, 0), ((),))
    # the loop has two automorphisms; the integral is still the bare coefficient
    c = TautClass(Ambient(1, 1), {key: Fraction(1, 2)})
    assert evaluate_class_integral(c) == Fraction(1, 2)


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        evaluate_class_integral(_smooth_class(0, 4))


def test_bad_insertion_leg():
    with pytest.raises(ValueError):
        evaluate_class_integral(_smooth_class(0, 4), {4: 1})


def test_orbifold_evaluation_is_gated(monkeypatch):
    c = _smooth_class(0, 3, m=2)
    with pytest.raises(OrbifoldEvaluationDisabled):
        evaluate_class_integral(c)
    monkeypatch.setattr(settings, "ORBIFOLD_EVALUATION", True)
    assert evaluate_class_integral(c) == Fraction(1, 2)


def _exponent_tuples(total: int, parts: int):
    """Non-decreasing tuples of `parts` exponents summing to `total`."""
    for combo in itertools.combinations_with_replacement(range(total + 1), parts):
        if sum(combo) == total:
            yield combo


@pytest.mark.parametrize("n", range(3, 8))
def test_genus_zero_closed_form(n):
    for exponents in _exponent_tuples(n - 3, n):
        expected = Fraction(math.factorial(n - 3), math.prod(math.factorial(k) for k in exponents))
        assert psi_integral(0, exponents) == expected


@pytest.mark.parametrize("g", [0, 1, 2])
@pytest.mark.parametrize("n", range(1, 6))
def test_string_equation(g, n):
    if 2 * g - 2 + n <= 0:
        pytest.skip("base space is unstable")
    for exponents in _exponent_tuples(3 * g - 2 + n, n):
        lowered = Fraction(0)
        for j, k in enumerate(exponents):
            if k:
                lowered += psi_integral(g, exponents[:j] + (k - 1,) + exponents[j + 1:])
        assert psi_integral(g, (0,) + exponents) == lowered


@pytest.mark.parametrize("g", [0, 1, 2])
@pytest.mark.parametrize("n", range(1, 6))
def test_dilaton_equation(g, n):
    if 2 * g - 2 + n <= 0:
        pytest.skip("base space is unstable")
    for exponents in _exponent_tuples(3 * g - 3 + n, n):
        assert psi_integral(g, (1,) + exponents) == (2 * g - 2 + n) * psi_integral(g, exponents)
