from fractions import Fraction

import pytest

from src.core.errors import NotAdmissible
from src.orbifold.sectors import (
    BundleRep,
    Sector,
    admissible,
    age,
    all_lifts,
    leg_weight,
    lift,
)


def test_ages():
    assert age(BundleRep(3, 1), Sector(2)) == Fraction(2, 3)
    assert age(BundleRep(3, 2), Sector(2)) == Fraction(1, 3)
    assert age(BundleRep(1, 0), Sector(0)) == 0


def test_dual_ages_are_complementary():
    rep = BundleRep(5, 2)
    for g in range(5):
        total = age(rep, Sector(g)) + age(rep.dual(), Sector(g))
        assert total.denominator == 1


def test_bundle_rep_reduces_character():
    assert BundleRep(3, 4) == BundleRep(3, 1)
    assert BundleRep(3, 1).dual() == BundleRep(3, 2)
    assert Sector(1).inverse(3) == Sector(2)
    assert Sector(0).inverse(3) == Sector(0)
    with pytest.raises(ValueError):
        BundleRep(0, 0)


def test_lift_age():
    lifted = lift(BundleRep(1, 0), Sector(0), -2, 5)
    assert lifted.age == Fraction(3, 5)


def test_lift_rejects_wrong_fractional_part():
    rep = BundleRep(3, 1)
    assert not admissible(rep, Sector(1), Fraction(1, 2))
    with pytest.raises(NotAdmissible):
        lift(rep, Sector(1), Fraction(1, 2), 5)


def test_lifts_equal_mod_r():
    rep = BundleRep(2, 1)
    assert lift(rep, Sector(1), Fraction(1, 2), 7) == lift(rep, Sector(1), Fraction(15, 2), 7)
    assert lift(rep, Sector(1), Fraction(1, 2), 7) != lift(rep, Sector(1), Fraction(3, 2), 7)


def test_all_lifts_have_distinct_ages():
    rep = BundleRep(3, 1)
    lifts = all_lifts(rep, Sector(1), 4)
    assert len(lifts) == 4
    assert len({lifted.age for lifted in lifts}) == 4
    assert all(admissible(rep, Sector(1), lifted.a) for lifted in lifts)


def test_leg_weight_is_floor_of_reduced_lift():
    assert leg_weight(BundleRep(2, 1), Sector(1), Fraction(-1, 2), 5) == 4
    assert leg_weight(BundleRep(1, 0), Sector(0), -2, 5) == 3
    assert leg_weight(BundleRep(1, 0), Sector(0), 2, 5) == 2
