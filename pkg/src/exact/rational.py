"""Exact rationals and the modular helpers the engine needs.

Rationals are ``fractions.Fraction`` throughout; ``Rational`` is only an alias
for readability in signatures.
"""
import math
import re
from fractions import Fraction
from typing import Union

from src.core.errors import ProblemFileError

Rational = Fraction
RationalLike = Union[int, str, Fraction]

_RATIONAL_RE = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")


def as_rational(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    return parse_rational(value)


def rational_mod(a: RationalLike, r: int) -> Fraction:
    """Return the representative of a mod r in [0, r)."""
    if r < 1:
        raise ValueError(f"modulus must be a positive integer, got {r}")
    a = as_rational(a)
    return a - r * math.floor(a / r)


def frac(a: RationalLike) -> Fraction:
    """Fractional part in [0, 1)."""
    a = as_rational(a)
    return a - math.floor(a)


def format_rational(a: Fraction) -> str:
    if a.denominator == 1:
        return str(a.numerator)
    return f"{a.numerator}/{a.denominator}"


def parse_rational(text: str) -> Fraction:
    match = _RATIONAL_RE.match(str(text))
    if match is None:
        raise ProblemFileError(f"not a rational number: {text!r}")
    numerator, denominator = match.groups()
    if denominator is not None and int(denominator) == 0:
        raise ProblemFileError(f"zero denominator in {text!r}")
    return Fraction(int(numerator), int(denominator or 1))
