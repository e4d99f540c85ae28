import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

from sympy import Expr, Poly, Rational, Symbol
from sympy.polys.domains import QQ
from sympy.polys.polyfuncs import interpolate

from src.core.errors import NotPolynomial

Scalar = Union[int, Fraction]

# Degree reported for the zero polynomial.
NEG_INF = -math.inf

R_SYMBOL = Symbol("r")


def to_sympy(c: Scalar) -> Rational:
    c = Fraction(c)
    return Rational(c.numerator, c.denominator)


def from_sympy(c: Rational) -> Fraction:
    return Fraction(int(c.p), int(c.q))


def to_qq(c: Scalar):
    """A QQ domain element, as used by sympy's sparse rings."""
    c = Fraction(c)
    return QQ(c.numerator, c.denominator)


def from_qq(c) -> Fraction:
    return Fraction(int(c.numerator), int(c.denominator))


class UniPoly:
    """Univariate polynomial in r over QQ. Coefficients are read lowest degree first."""

    __slots__ = ("poly",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        values = [to_sympy(c) for c in coeffs]
        if values:
            self.poly = Poly.from_list(values[::-1], R_SYMBOL, domain=QQ)
        else:
            self.poly = Poly(0, R_SYMBOL, domain=QQ)

    @classmethod
    def from_poly(cls, poly: Poly) -> "UniPoly":
        out = cls.__new__(cls)
        out.poly = poly
        return out

    @classmethod
    def from_expr(cls, expr: Union[Expr, int]) -> "UniPoly":
        return cls.from_poly(Poly(expr, R_SYMBOL, domain=QQ))

    @classmethod
    def constant(cls, c: Scalar) -> "UniPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: Scalar = 1) -> "UniPoly":
        return cls((0,) * degree + (c,))

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        if self.poly.is_zero:
            return ()
        return tuple(from_sympy(c) for c in reversed(self.poly.all_coeffs()))

    @property
    def degree(self) -> Union[int, float]:
        return NEG_INF if self.poly.is_zero else self.poly.degree()

    def is_zero(self) -> bool:
        return self.poly.is_zero

    def __bool__(self) -> bool:
        return not self.poly.is_zero

    def coefficient(self, k: int) -> Fraction:
        if k < 0:
            return Fraction(0)
        return from_sympy(self.poly.coeff_monomial(R_SYMBOL**k))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.poly == other.poly

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: Union["UniPoly", Scalar]) -> "UniPoly":
        return UniPoly.from_poly(self.poly + _lift(other).poly)

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly.from_poly(-self.poly)

    def __sub__(self, other: Union["UniPoly", Scalar]) -> "UniPoly":
        return UniPoly.from_poly(self.poly - _lift(other).poly)

    def __rsub__(self, other: Scalar) -> "UniPoly":
        return _lift(other) - self

    def __mul__(self, other: Union["UniPoly", Scalar]) -> "UniPoly":
        return UniPoly.from_poly(self.poly * _lift(other).poly)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "UniPoly":
        if exponent < 0:
            raise ValueError("negative exponent")
        return UniPoly.from_poly(self.poly**exponent)

    def __call__(self, x: Scalar) -> Fraction:
        return from_sympy(self.poly.eval(to_sympy(x)))

    def compose(self, inner: "UniPoly") -> "UniPoly":
        return UniPoly.from_poly(self.poly.compose(inner.poly))

    def __str__(self) -> str:
        coeffs = self.coeffs
        if not coeffs:
            return "0"
        parts = []
        for k, c in enumerate(coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("r" if k == 1 else f"r^{k}")
            parts.append(f"({c})*{mono}" if mono else f"({c})")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"UniPoly({self.coeffs!r})"


def _lift(value: Union[UniPoly, Scalar]) -> UniPoly:
    return value if isinstance(value, UniPoly) else UniPoly.constant(value)


def lagrange_interpolate(samples: Sequence[tuple[Scalar, Scalar]], degree_bound: int) -> UniPoly:
    """
    Interpolates the first degree_bound + 1 samples and checks the rest.

    Raises NotPolynomial when a surplus sample disagrees with the fit.
    """
    points = [(Fraction(x), Fraction(y)) for x, y in samples]
    xs = [x for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    if len(points) < degree_bound + 1:
        raise ValueError(f"need at least {degree_bound + 1} samples, got {len(points)}")

    basis = [(to_sympy(x), to_sympy(y)) for x, y in points[: degree_bound + 1]]
    result = UniPoly.from_expr(interpolate(basis, R_SYMBOL))

    for x, y in points[degree_bound + 1:]:
        if result(x) != y:
            raise NotPolynomial(
                f"sample at r={x} gives {y}, interpolant of degree <= {degree_bound} "
                f"predicts {result(x)}; try a larger r range"
            )
    return result


def constant_term(p: UniPoly) -> Fraction:
    return p.coefficient(0)
