"""Twisted sectors of B Z_m and their ages, lifts and leg weights."""
import math
from dataclasses import dataclass
from fractions import Fraction

from src.core.errors import NotAdmissible
from src.exact.rational import RationalLike, as_rational, frac, rational_mod


@dataclass(frozen=True)
class BundleRep:
    """The character of Z_m acting by exp(2 pi i s / m) on the line bundle."""

    m: int
    s: int

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError(f"m must be >= 1, got {self.m}")
        object.__setattr__(self, "s", self.s % self.m)

    def dual(self) -> "BundleRep":
        return BundleRep(self.m, -self.s)

    def to_json(self) -> dict:
        return {"m": self.m, "s": self.s}


@dataclass(frozen=True, order=True)
class Sector:
    """A component of the inertia stack, labelled by g in Z_m."""

    g: int

    def inverse(self, m: int) -> "Sector":
        return Sector((-self.g) % m)


def age(rep: BundleRep, sector: Sector) -> Fraction:
    return frac(Fraction(sector.g * rep.s, rep.m))


def admissible(rep: BundleRep, sector: Sector, a: RationalLike) -> bool:
    return frac(as_rational(a)) == age(rep, sector)


def _require_admissible(rep: BundleRep, sector: Sector, a: Fraction) -> None:
    if not admissible(rep, sector, a):
        raise NotAdmissible(
            f"lift {a} is not admissible for sector {sector.g} "
            f"(age {age(rep, sector)} under m={rep.m}, s={rep.s})"
        )


@dataclass(frozen=True, eq=False)
class LiftedSector:
    base: Sector
    a: Fraction
    r: int

    @property
    def reduced(self) -> Fraction:
        return rational_mod(self.a, self.r)

    @property
    def age(self) -> Fraction:
        return self.reduced / self.r

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LiftedSector):
            return NotImplemented
        return (self.base, self.r, self.reduced) == (other.base, other.r, other.reduced)

    def __hash__(self) -> int:
        return hash((self.base, self.r, self.reduced))


def lift(rep: BundleRep, sector: Sector, a: RationalLike, r: int) -> LiftedSector:
    a = as_rational(a)
    _require_admissible(rep, sector, a)
    return LiftedSector(sector, a, r)


def all_lifts(rep: BundleRep, sector: Sector, r: int) -> list[LiftedSector]:
    """The r lifts of a sector to B Z_{rm} with lifted ages distinct mod 1."""
    base = age(rep, sector)
    return [LiftedSector(sector, base + k, r) for k in range(r)]


def leg_weight(rep: BundleRep, sector: Sector, a: RationalLike, r: int) -> int:
    """floor([a]_r), the weight forced on a marked leg."""
    a = as_rational(a)
    _require_admissible(rep, sector, a)
    return math.floor(rational_mod(a, r))


def leg_residue(rep: BundleRep, sector: Sector, a: RationalLike) -> int:
    """floor(a); congruent to leg_weight mod every r."""
    a = as_rational(a)
    _require_admissible(rep, sector, a)
    return math.floor(a)
