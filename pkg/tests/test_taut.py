from fractions import Fraction

import pytest

from src.core.errors import AmbientMismatch, NonNilpotentInput
from src.graphs.stable_graph import StableGraph
from src.taut.classes import (
    Ambient,
    ClassBuilder,
    TautClass,
    canonical_key,
    class_add,
    class_degree_parts,
    class_scale,
    class_truncate,
)
from src.taut.series import GradedSeries, edge_series, exp_truncated, psi_var

SMOOTH_11 = StableGraph((1,), (0,), ())
LOOP_11 = StableGraph((0,), (0,), ((0, 0),))
SMOOTH_12 = StableGraph((1,), (0, 0), ())


def test_exp_of_single_psi():
    a = Fraction(3, 2)
    generator = GradedSeries.from_powers(psi_var(0), [0, a], 2)
    result = exp_truncated(generator, 2)
    assert result.coefficient(()) == 1
    assert result.coefficient(((psi_var(0), 1),)) == a
    assert result.coefficient(((psi_var(0), 2),)) == a * a / 2
    assert result.coefficient(((psi_var(0), 3),)) == 0


def test_exp_rejects_constant_part():
    with pytest.raises(NonNilpotentInput):
        exp_truncated(GradedSeries.one(2), 2)


def test_edge_series_linear_exponent():
    x = Fraction(5, 3)
    series = edge_series([0, -x], 1)
    assert series[(0, 0)] == x
    assert series[(1, 0)] == -x * x / 2
    assert series[(0, 1)] == -x * x / 2


def test_edge_series_times_denominator_gives_numerator():
    coefficients = [Fraction(0), Fraction(1, 3), Fraction(-1, 5), Fraction(2, 7)]
    top = 3
    quotient = edge_series(coefficients, top)
    p, q = psi_var(0), psi_var(1)

    def mono(i, j):
        return tuple(pair for pair in ((p, i), (q, j)) if pair[1])

    as_series = GradedSeries({mono(i, j): c for (i, j), c in quotient.items()}, top + 1)
    product = as_series * GradedSeries({mono(1, 0): 1, mono(0, 1): 1}, top + 1)
    generator = GradedSeries(
        {
            **{mono(k, 0): c for k, c in enumerate(coefficients) if k},
            **{mono(0, k): -c * (-1) ** k for k, c in enumerate(coefficients) if k},
        },
        top + 1,
    )
    numerator = exp_truncated(generator, top + 1)
    expected = {m: -c for m, c in numerator.items() if m}
    assert dict(product.items()) == expected


def test_builder_drops_terms_above_vertex_dimension():
    builder = ClassBuilder(Ambient(1, 1))
    builder.add(SMOOTH_11, (0,), (1,), ((),), Fraction(1))
    builder.add(SMOOTH_11, (0,), (2,), ((),), Fraction(1))
    builder.add(LOOP_11, (0, 0, 0), (1, 0, 0), ((),), Fraction(1))
    result = builder.build()
    assert len(result) == 1
    assert result.coefficient(SMOOTH_11, psi=(1,)) == 1


def test_canonical_key_merges_loop_orientations():
    a = canonical_key(LOOP_11, (0, 1, 2), (0, 0, 0), ((),))
    b = canonical_key(LOOP_11, (0, 2, 1), (0, 0, 0), ((),))
    assert a == b
    c = canonical_key(LOOP_11, (0, 0, 0), (0, 1, 0), ((),))
    d = canonical_key(LOOP_11, (0, 0, 0), (0, 0, 1), ((),))
    assert c == d


def test_class_algebra():
    ambient = Ambient(1, 2)
    builder = ClassBuilder(ambient)
    builder.add(SMOOTH_12, (0, 0), (0, 0), ((),), Fraction(1))
    builder.add(SMOOTH_12, (0, 0), (1, 0), ((),), Fraction(2))
    c = builder.build()
    doubled = class_add(c, c)
    assert doubled == class_scale(c, Fraction(2))
    assert class_add(c, class_scale(c, Fraction(-1))).is_zero()
    truncated = class_truncate(c, 0)
    assert len(truncated) == 1
    assert truncated.terms()[0].coefficient == 1
    assert sorted(class_degree_parts(c)) == [0, 1]
    with pytest.raises(AmbientMismatch):
        class_add(c, TautClass(Ambient(1, 1)))


def test_class_json_round_trip():
    builder = ClassBuilder(Ambient(1, 2))
    builder.add(SMOOTH_12, (0, 0), (0, 1), ((),), Fraction(7, 3))
    builder.add(SMOOTH_12, (0, 0), (0, 0), ((1,),), Fraction(-1, 12))
    builder.add(StableGraph((0,), (0, 0), ((0, 0),)), (0, 0, 0, 0), (0, 0, 0, 0), ((),), Fraction(-1, 24))
    c = builder.build()
    payload = c.to_json()
    assert payload[0]["coeff"] == "-1/12"
    assert payload[0]["kappa"] == {"0": [1]}
    assert TautClass.from_json(Ambient(1, 2), payload) == c
