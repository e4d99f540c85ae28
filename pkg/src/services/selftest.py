import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from src.core.errors import OrbiDRError
from src.engine.dr import BRANCHES, branch_normalization, dr_cycle
from src.engine.problem import DRProblem
from src.exact.bernoulli import bernoulli_number, bernoulli_polynomial
from src.graphs.enumeration import enumerate_graphs
from src.oracle.evaluate import evaluate_class_integral
from src.oracle.intersection import kappa_psi_integral, psi_integral
from src.orbifold.sectors import BundleRep, Sector

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _bernoulli() -> str:
    assert bernoulli_number(1) == Fraction(-1, 2)
    assert bernoulli_polynomial(2)(Fraction(1, 3)) == Fraction(-1, 18)
    return "B_1 = -1/2, B_2(1/3) = -1/18"


def _psi_values() -> str:
    assert psi_integral(1, [1]) == Fraction(1, 24)
    assert psi_integral(2, [4]) == Fraction(1, 1152)
    assert kappa_psi_integral(0, [0, 0, 0, 0, 0], [1, 1]) == 5
    return "<tau_1>_1 = 1/24, <tau_4>_2 = 1/1152, kappa_1^2 on Mbar_0,5 = 5"


def _graph_counts() -> str:
    assert len(enumerate_graphs(0, 4)) == 4
    assert len(enumerate_graphs(1, 1)) == 2
    assert len(enumerate_graphs(1, 2)) == 5
    return "4, 2 and 5 graphs for (0,4), (1,1), (1,2)"


def _normalization() -> str:
    signs = {branch: branch_normalization(branch) for branch in BRANCHES}
    assert set(signs.values()) <= {1, -1}
    return ", ".join(f"{branch}: {sign:+d}" for branch, sign in signs.items())


def _genus_one_pairing() -> str:
    a = 2
    problem = DRProblem(
        g=1,
        rep=BundleRep(1, 0),
        mu_zero=((Sector(0), Fraction(a)),),
        mu_inf=((Sector(0), Fraction(a)),),
    )
    for branch in BRANCHES:
        value = evaluate_class_integral(dr_cycle(problem, branch), {0: 1})
        assert value == Fraction(a * a - 1, 24), f"{branch} gave {value}"
    return f"integral of DR_1({a},-{a}) psi_1 = {Fraction(a * a - 1, 24)} on both branches"


CHECKS: list[tuple[str, Callable[[], str]]] = [
    ("bernoulli", _bernoulli),
    ("psi oracle", _psi_values),
    ("graph enumeration", _graph_counts),
    ("branch normalization", _normalization),
    ("genus one pairing", _genus_one_pairing),
]


def run_selftest() -> list[CheckResult]:
    results = []
    for name, check in CHECKS:
        try:
            results.append(CheckResult(name, True, check()))
        except (AssertionError, OrbiDRError) as exc:
            logger.error("self-test %s failed: %s", name, exc)
            results.append(CheckResult(name, False, str(exc) or "assertion failed"))
    return results
