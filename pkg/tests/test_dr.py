from fractions import Fraction

import pytest

from src.core.errors import NotAdmissible, UnbalancedContacts
from src.engine.dr import branch_normalization, dr_branch, dr_cycle, raw_dr_cycle
from src.engine.problem import DRProblem, validate_dr_problem, virtual_dimension
from src.graphs.stable_graph import StableGraph
from src.oracle.evaluate import evaluate_class_integral
from src.orbifold.sectors import BundleRep, Sector

TRIVIAL = BundleRep(1, 0)


def problem(g, rep, absolute=(), zero=(), infinity=()):
    return DRProblem(
        g=g,
        rep=rep,
        absolute=tuple(Sector(s) for s in absolute),
        mu_zero=tuple((Sector(s), Fraction(mu)) for s, mu in zero),
        mu_inf=tuple((Sector(s), Fraction(mu)) for s, mu in infinity),
    )


def test_validation_accepts_fractional_contact():
    p = problem(0, BundleRep(3, 1), absolute=[0], zero=[(1, Fraction(1, 3))], infinity=[(2, Fraction(1, 3))])
    report = validate_dr_problem(p)
    assert report.ok, report.render()


def test_validation_itemizes_failures():
    p = problem(1, BundleRep(3, 1), zero=[(1, Fraction(1, 2))], infinity=[(0, 2)])
    report = validate_dr_problem(p)
    failed = {check.name for check in report.failures()}
    assert failed == {"zero contacts admissible", "balance", "monodromy sum"}
    assert "FAIL balance" in report.render()


def test_unbalanced_problem_raises():
    p = problem(1, TRIVIAL, zero=[(0, 2)], infinity=[(0, 1)])
    with pytest.raises(UnbalancedContacts):
        dr_cycle(p)


def test_twisted_absolute_marking_raises():
    p = problem(1, BundleRep(2, 1), absolute=[1], zero=[(1, Fraction(1, 2))], infinity=[(1, Fraction(1, 2))])
    assert validate_dr_problem(p).failed("absolute sectors untwisted")
    with pytest.raises(NotAdmissible):
        dr_cycle(p)


def test_nonpositive_contacts_are_reported():
    p = problem(1, TRIVIAL, zero=[(0, 0)], infinity=[(0, 0)])
    assert validate_dr_problem(p).failed("positive contacts")


def test_branch_normalization_signs():
    assert branch_normalization("zero") == 1
    assert branch_normalization("infinity") == -1


@pytest.mark.parametrize(
    "p",
    [
        problem(0, TRIVIAL, absolute=[0], zero=[(0, 1)], infinity=[(0, 1)]),
        problem(0, TRIVIAL, zero=[(0, 3)], infinity=[(0, 1), (0, 2)]),
        problem(0, TRIVIAL, zero=[(0, 2), (0, 2)], infinity=[(0, 1), (0, 3)]),
        problem(0, BundleRep(2, 1), absolute=[0], zero=[(1, Fraction(1, 2))], infinity=[(1, Fraction(1, 2))]),
        problem(0, BundleRep(2, 0), absolute=[1], zero=[(1, 1)], infinity=[(0, 1)]),
        problem(0, BundleRep(3, 1), zero=[(1, Fraction(4, 3))], infinity=[(2, Fraction(1, 3)), (0, 1)]),
    ],
)
def test_genus_zero_gives_fundamental_class(p):
    for branch in ("zero", "infinity"):
        terms = dr_cycle(p, branch).terms()
        assert len(terms) == 1
        assert terms[0].graph == StableGraph((0,), (0,) * p.n, ())
        assert terms[0].coefficient == 1


def test_raw_branches_differ_in_sign_at_genus_zero():
    p = problem(0, TRIVIAL, absolute=[0], zero=[(0, 1)], infinity=[(0, 1)])
    zero = raw_dr_cycle(p, "zero").terms()[0].coefficient
    infinity = raw_dr_cycle(p, "infinity").terms()[0].coefficient
    assert zero == -infinity


@pytest.mark.parametrize("a", [1, 2, 3])
def test_genus_one_relative_cycle(a, fast_bound):
    p = problem(1, TRIVIAL, zero=[(0, a)], infinity=[(0, a)])
    zero = dr_branch(p, "zero")
    infinity = dr_branch(p, "infinity")
    assert zero.cycle == infinity.cycle
    smooth = StableGraph((1,), (0, 0), ())
    loop = StableGraph((0,), (0, 0), ((0, 0),))
    assert zero.cycle.coefficient(smooth, psi=(1, 0)) == Fraction(a * a, 2)
    assert zero.cycle.coefficient(smooth, psi=(0, 1)) == Fraction(a * a, 2)
    assert zero.cycle.coefficient(loop) == Fraction(-1, 24)
    assert evaluate_class_integral(zero.cycle, {0: 1}) == Fraction(a * a - 1, 24)


@pytest.mark.parametrize(
    "p",
    [
        problem(1, TRIVIAL, zero=[(0, 2)], infinity=[(0, 1), (0, 1)]),
        problem(1, TRIVIAL, absolute=[0], zero=[(0, 1)], infinity=[(0, 1)]),
        problem(1, BundleRep(2, 1), zero=[(1, Fraction(1, 2))], infinity=[(1, Fraction(1, 2))]),
        problem(1, BundleRep(2, 1), zero=[(1, Fraction(3, 2))], infinity=[(1, Fraction(3, 2))]),
        problem(1, BundleRep(2, 0), absolute=[1], zero=[(1, 1)], infinity=[(0, 1)]),
        problem(1, BundleRep(3, 1), absolute=[0], zero=[(1, Fraction(1, 3))], infinity=[(2, Fraction(1, 3))]),
        problem(1, BundleRep(3, 0), absolute=[1, 2], zero=[(0, 1)], infinity=[(0, 1)]),
    ],
)
def test_branches_agree_in_genus_one(p, fast_bound):
    assert dr_cycle(p, "zero") == dr_cycle(p, "infinity")


@pytest.mark.slow
def test_genus_two_branches_agree_and_pairing(fast_bound):
    a = 2
    p = problem(2, TRIVIAL, zero=[(0, a)], infinity=[(0, a)])
    zero = dr_cycle(p, "zero")
    assert zero == dr_cycle(p, "infinity")
    expected = Fraction(3 * a ** 4 - 10 * a ** 2 + 7, 5760)
    assert evaluate_class_integral(zero, {0: 3}) == expected


@pytest.mark.slow
def test_genus_two_orbifold_branches_agree(fast_bound):
    p = problem(2, BundleRep(2, 1), zero=[(1, Fraction(1, 2))], infinity=[(1, Fraction(1, 2))])
    assert dr_cycle(p, "zero") == dr_cycle(p, "infinity")


def test_virtual_dimension():
    assert virtual_dimension(problem(0, TRIVIAL, absolute=[0], zero=[(0, 1)], infinity=[(0, 1)])) == 0
    assert virtual_dimension(problem(2, TRIVIAL, zero=[(0, 2)], infinity=[(0, 2)])) == 5
