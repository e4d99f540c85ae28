"""Double ramification cycles from either branch of the r-polynomial."""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from src.core.errors import NotAdmissible, OrbiDRError, Unstable, UnbalancedContacts
from src.engine.problem import DRProblem, validate_dr_problem, virtual_dimension
from src.engine.rpoly import RPolyClass, polynomial_class
from src.orbifold.sectors import BundleRep, Sector
from src.taut.classes import TautClass, class_degree_part, class_scale

logger = logging.getLogger(__name__)

BRANCHES = ("zero", "infinity")

# Sign in front of r * c_g on each branch before normalization.
RAW_SIGN = {"zero": 1, "infinity": -1}

# g = 0, one absolute marking, contact 1 at both divisors: DR is the fundamental class.
REFERENCE_PROBLEM = DRProblem(
    g=0,
    rep=BundleRep(1, 0),
    absolute=(Sector(0),),
    mu_zero=((Sector(0), Fraction(1)),),
    mu_inf=((Sector(0), Fraction(1)),),
)


@dataclass(frozen=True)
class BranchResult:
    branch: str
    rpoly: RPolyClass
    cycle: TautClass
    normalization: int


def require_valid(p: DRProblem) -> None:
    report = validate_dr_problem(p)
    if report.ok:
        return
    logger.warning("problem rejected:\n%s", report.render())
    if report.failed("balance"):
        raise UnbalancedContacts(report.render())
    if report.failed("stability"):
        raise Unstable(report.render())
    raise NotAdmissible(report.render())


def _raw(p: DRProblem, branch: str, r_samples: Optional[Sequence[int]]) -> tuple[RPolyClass, TautClass]:
    if branch not in BRANCHES:
        raise ValueError(f"unknown branch {branch!r}")
    require_valid(p)
    logger.info("branch %s: g=%d n=%d, DR in degree %d of %d", branch, p.g, p.n, p.g, virtual_dimension(p))
    rpoly = polynomial_class(p.topdata(branch), p.g, r_samples)
    cycle = class_degree_part(rpoly.constant_term(), p.g)
    return rpoly, class_scale(cycle, Fraction(RAW_SIGN[branch]))


def raw_dr_cycle(p: DRProblem, branch: str, r_samples: Optional[Sequence[int]] = None) -> TautClass:
    return _raw(p, branch, r_samples)[1]


@lru_cache(maxsize=None)
def branch_normalization(branch: str) -> int:
    """
    Sign making the genus-0 reference problem come out as +1 times the
    fundamental class on this branch.
    """
    raw = raw_dr_cycle(REFERENCE_PROBLEM, branch)
    terms = raw.terms()
    if len(terms) != 1 or terms[0].graph.num_edges or abs(terms[0].coefficient) != 1:
        raise OrbiDRError(f"reference problem gave an unexpected class on branch {branch}: {terms}")
    sign = 1 if terms[0].coefficient > 0 else -1
    logger.info("branch %s normalization %+d", branch, sign)
    return sign


def dr_branch(p: DRProblem, branch: str, r_samples: Optional[Sequence[int]] = None) -> BranchResult:
    rpoly, raw = _raw(p, branch, r_samples)
    sign = branch_normalization(branch)
    return BranchResult(branch, rpoly, class_scale(raw, Fraction(sign)), sign)


def dr_cycle(p: DRProblem, branch: str = "zero", r_samples: Optional[Sequence[int]] = None) -> TautClass:
    """The degree-g DR cycle computed from the given branch."""
    return dr_branch(p, branch, r_samples).cycle
