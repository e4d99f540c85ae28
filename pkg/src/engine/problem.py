from dataclasses import dataclass, field
from fractions import Fraction

from src.core.errors import NotAdmissible, Unstable
from src.exact.rational import as_rational, format_rational, frac
from src.orbifold.sectors import BundleRep, Sector, admissible, age
from src.taut.classes import Ambient


@dataclass(frozen=True)
class TopData:
    """Genus, target and admissible lifts a_i for every marked leg."""

    g: int
    rep: BundleRep
    leg_sectors: tuple[Sector, ...]
    lifts: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        # normalize first so that validation sees tuples of Fractions
        object.__setattr__(self, "leg_sectors", tuple(self.leg_sectors))
        object.__setattr__(self, "lifts", tuple(as_rational(a) for a in self.lifts))
        if len(self.leg_sectors) != len(self.lifts):
            raise ValueError("one lift per leg sector is required")
        if self.g < 0 or 2 * self.g - 2 + self.n <= 0:
            raise Unstable(f"(g, n) = ({self.g}, {self.n}) is not stable")
        for i, (sector, a) in enumerate(zip(self.leg_sectors, self.lifts)):
            if not admissible(self.rep, sector, a):
                raise NotAdmissible(
                    f"leg {i}: lift {a} does not match age {age(self.rep, sector)} of sector {sector.g}"
                )

    @property
    def n(self) -> int:
        return len(self.leg_sectors)

    @property
    def ambient(self) -> Ambient:
        return Ambient(self.g, self.n, self.rep.m)


@dataclass(frozen=True)
class ConstraintCheck:
    """Outcome of one named input check; detail explains a failure."""

    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class ValidationReport:
    """Every check run on a problem, in order, passing ones included."""

    checks: tuple[ConstraintCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[ConstraintCheck]:
        return [c for c in self.checks if not c.passed]

    def failed(self, name: str) -> bool:
        return any(c.name == name and not c.passed for c in self.checks)

    def render(self) -> str:
        return "\n".join(
            f"{'PASS' if c.passed else 'FAIL'} {c.name}" + (f": {c.detail}" if c.detail else "")
            for c in self.checks
        )


@dataclass(frozen=True)
class DRProblem:
    """
    A relative DR problem: absolute markings with untwisted sectors, and
    positive contact orders against the zero and infinity divisors.
    """

    g: int
    rep: BundleRep
    absolute: tuple[Sector, ...] = ()
    mu_zero: tuple[tuple[Sector, Fraction], ...] = ()
    mu_inf: tuple[tuple[Sector, Fraction], ...] = field(default=())

    def __post_init__(self) -> None:
        object.__setattr__(self, "absolute", tuple(self.absolute))
        object.__setattr__(
            self, "mu_zero", tuple((s, as_rational(mu)) for s, mu in self.mu_zero)
        )
        object.__setattr__(
            self, "mu_inf", tuple((s, as_rational(mu)) for s, mu in self.mu_inf)
        )

    @property
    def n(self) -> int:
        return len(self.absolute) + len(self.mu_zero) + len(self.mu_inf)

    @property
    def leg_sectors(self) -> tuple[Sector, ...]:
        return (
            self.absolute
            + tuple(s for s, _ in self.mu_zero)
            + tuple(s for s, _ in self.mu_inf)
        )

    @property
    def a_zero(self) -> tuple[Fraction, ...]:
        """Lifts (0, ..., mu_0, -mu_inf) against the bundle rho."""
        return (
            (Fraction(0),) * len(self.absolute)
            + tuple(mu for _, mu in self.mu_zero)
            + tuple(-mu for _, mu in self.mu_inf)
        )

    @property
    def a_infinity(self) -> tuple[Fraction, ...]:
        return tuple(-a for a in self.a_zero)

    def topdata(self, branch: str) -> TopData:
        """
        The input of the formula for one branch.

        The zero branch uses rho with lifts a_zero. The infinity branch uses
        the dual representation with every lift negated, so the same engine
        serves both.
        """
        if branch == "zero":
            return TopData(self.g, self.rep, self.leg_sectors, self.a_zero)
        if branch == "infinity":
            return TopData(self.g, self.rep.dual(), self.leg_sectors, self.a_infinity)
        raise ValueError(f"unknown branch {branch!r}")


def _sectors_in_range(p: DRProblem) -> ConstraintCheck:
    # later checks call age(), which assumes 0 <= g < m
    bad = [s.g for s in p.leg_sectors if not 0 <= s.g < p.rep.m]
    return ConstraintCheck("sectors in range", not bad, f"out of range: {bad}" if bad else "")


def validate_dr_problem(p: DRProblem) -> ValidationReport:
    """Checks every constraint and reports each one, failing or not."""
    checks = [
        ConstraintCheck(
            "stability",
            p.g >= 0 and 2 * p.g - 2 + p.n > 0,
            f"g={p.g}, n={p.n}",
        ),
        _sectors_in_range(p),
    ]
    untwisted = [s.g for s in p.absolute if age(p.rep, s) != 0]
    checks.append(
        ConstraintCheck(
            "absolute sectors untwisted",
            not untwisted,
            f"sectors with nonzero age: {untwisted}" if untwisted else "",
        )
    )
    bad_zero = [
        f"{s.g}:{format_rational(mu)}" for s, mu in p.mu_zero if frac(mu) != age(p.rep, s)
    ]
    checks.append(
        ConstraintCheck(
            "zero contacts admissible",
            not bad_zero,
            f"frac(mu) != age for {bad_zero}" if bad_zero else "",
        )
    )
    dual = p.rep.dual()
    bad_inf = [f"{s.g}:{format_rational(mu)}" for s, mu in p.mu_inf if frac(mu) != age(dual, s)]
    checks.append(
        ConstraintCheck(
            "infinity contacts admissible",
            not bad_inf,
            f"frac(mu) != dual age for {bad_inf}" if bad_inf else "",
        )
    )
    nonpositive = [
        format_rational(mu) for _, mu in p.mu_zero + p.mu_inf if mu <= 0
    ]
    checks.append(
        ConstraintCheck(
            "positive contacts",
            not nonpositive,
            f"non-positive contact orders: {nonpositive}" if nonpositive else "",
        )
    )
    total_zero = sum((mu for _, mu in p.mu_zero), Fraction(0))
    total_inf = sum((mu for _, mu in p.mu_inf), Fraction(0))
    checks.append(
        ConstraintCheck(
            "balance",
            total_zero == total_inf,
            f"sum at zero {format_rational(total_zero)}, sum at infinity {format_rational(total_inf)}",
        )
    )
    sector_sum = sum(s.g for s in p.leg_sectors) % p.rep.m
    checks.append(
        ConstraintCheck(
            "monodromy sum",
            sector_sum == 0,
            f"sectors sum to {sector_sum} mod {p.rep.m}",
        )
    )
    return ValidationReport(tuple(checks))


def virtual_dimension(p: DRProblem) -> int:
    """3g - 3 + n: the target B Z_m is a point with untwisted tangent data."""
    return 3 * p.g - 3 + p.n
