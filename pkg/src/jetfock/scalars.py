"""Exact Gaussian-rational scalars.

Every coefficient in the engine is an element of Q(i): a complex number
whose real and imaginary parts are arbitrary-precision rationals.  No
floating point is used anywhere.  All 2*pi factors arising from circle
integrals are cancelled analytically against the mode normalization of
the momenta (see fock.py), so transcendental constants never appear.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

Rat = Fraction

_RatLike = Union[int, Fraction]
_Scalar = Union[int, Fraction, "GaussianRational"]


class GaussianRational:
    """A complex scalar a + b*i with exact rational a, b.

    Instances are immutable and hashable.  Fractions keep themselves in
    lowest terms with positive denominator, so structural equality is
    exact equality in Q(i).
    """

    __slots__ = ("re", "im", "_hash")

    def __init__(self, re: _RatLike = 0, im: _RatLike = 0):
        self.re = Fraction(re)
        self.im = Fraction(im)
        self._hash = None

    # -- constructors -------------------------------------------------

    @staticmethod
    def of(x: _Scalar) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        return GaussianRational(x)

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other: _Scalar) -> "GaussianRational":
        o = GaussianRational.of(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other: _Scalar) -> "GaussianRational":
        o = GaussianRational.of(other)
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: _Scalar) -> "GaussianRational":
        return GaussianRational.of(other) - self

    def __mul__(self, other: _Scalar) -> "GaussianRational":
        o = GaussianRational.of(other)
        if not o.im:
            if not self.im:
                return GaussianRational(self.re * o.re)
            return GaussianRational(self.re * o.re, self.im * o.re)
        return GaussianRational(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: _Scalar) -> "GaussianRational":
        o = GaussianRational.of(other)
        n = o.re * o.re + o.im * o.im
        if not n:
            raise ZeroDivisionError("division by zero in Q(i)")
        return GaussianRational(
            (self.re * o.re + self.im * o.im) / n,
            (self.im * o.re - self.re * o.im) / n,
        )

    def __rtruediv__(self, other: _Scalar) -> "GaussianRational":
        return GaussianRational.of(other) / self

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    # -- predicates / protocol ------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            h = hash(complex(self.re, self.im)) if self.im else hash(self.re)
            object.__setattr__(self, "_hash", h)
        return self._hash

    def __setattr__(self, name, value):
        if name != "_hash" and hasattr(self, "_hash"):
            raise AttributeError("GaussianRational is immutable")
        object.__setattr__(self, name, value)

    def __repr__(self) -> str:
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}*i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}*i"

    # -- serialization ---------------------------------------------------

    def to_quad(self) -> list:
        """[reNum, reDen, imNum, imDen] wire format."""
        return [
            self.re.numerator,
            self.re.denominator,
            self.im.numerator,
            self.im.denominator,
        ]

    @staticmethod
    def from_quad(quad) -> "GaussianRational":
        rn, rd, in_, id_ = quad
        return GaussianRational(Fraction(rn, rd), Fraction(in_, id_))


GR = GaussianRational

ZERO = GR(0)
ONE = GR(1)
I = GR(0, 1)
MINUS_I = GR(0, -1)


def gr(re: _RatLike = 0, im: _RatLike = 0) -> GR:
    return GR(re, im)
