"""Exact elements of the cyclotomic field Q(w)."""

import re
from fractions import Fraction
from math import gcd
from typing import Any

from chisynth.arithmetic.eisenstein import EisensteinInteger
from chisynth.exceptions import DivisionByZeroException, DocumentParseException

Rational = int | Fraction


class FieldElement:
    """Element a + bw of Q(w) with rational a, b.

    Stored as three integers (a, b, d) meaning (a + bw) / d with d > 0
    and gcd(a, b, d) = 1, so equal elements have equal representations.
    The rational coordinates are available as the `a` and `b` properties.
    """

    __slots__ = ("_a", "_b", "_d")

    _a: int
    _b: int
    _d: int

    def __init__(self, a: Rational = 0, b: Rational = 0) -> None:
        fa = Fraction(a)
        fb = Fraction(b)
        d = fa.denominator * fb.denominator // gcd(fa.denominator, fb.denominator)
        self._set(
            fa.numerator * (d // fa.denominator),
            fb.numerator * (d // fb.denominator),
            d,
        )

    def _set(self, a: int, b: int, d: int) -> None:
        if d < 0:
            a, b, d = -a, -b, -d
        g = gcd(gcd(a, b), d)
        if g > 1:
            a //= g
            b //= g
            d //= g
        self._a = a
        self._b = b
        self._d = d

    @classmethod
    def from_parts(cls, a: int, b: int, d: int = 1) -> "FieldElement":
        """Build (a + bw) / d from integers without going through Fraction."""
        if d == 0:
            raise DivisionByZeroException("Zero denominator")
        result = cls.__new__(cls)
        result._set(a, b, d)
        return result

    @classmethod
    def from_eisenstein(cls, z: EisensteinInteger) -> "FieldElement":
        result = cls.__new__(cls)
        result._a = z.a
        result._b = z.b
        result._d = 1
        return result

    #
    # Accessors
    #

    @property
    def a(self) -> Fraction:
        return Fraction(self._a, self._d)

    @property
    def b(self) -> Fraction:
        return Fraction(self._b, self._d)

    @property
    def parts(self) -> tuple[int, int, int]:
        """The reduced integer triple (a, b, d)."""
        return self._a, self._b, self._d

    @property
    def denominator(self) -> int:
        return self._d

    def numerator(self) -> EisensteinInteger:
        return EisensteinInteger(self._a, self._b)

    def is_zero(self) -> bool:
        return self._a == 0 and self._b == 0

    def is_integral(self) -> bool:
        """True when the element lies in Z[w]."""
        return self._d == 1

    def to_eisenstein(self) -> EisensteinInteger:
        if self._d != 1:
            raise ValueError(f"{self} is not an Eisenstein integer")
        return EisensteinInteger(self._a, self._b)

    def __repr__(self) -> str:
        return f"FieldElement({self})"

    def __str__(self) -> str:
        return format_field_element(self)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FieldElement):
            return (
                self._a == other._a and self._b == other._b and self._d == other._d
            )
        if isinstance(other, (int, Fraction)):
            return self == FieldElement(other)
        if isinstance(other, EisensteinInteger):
            return self._d == 1 and self._a == other.a and self._b == other.b
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._a, self._b, self._d))

    #
    # Arithmetic
    #

    @staticmethod
    def _coerce(other: Any) -> "FieldElement":
        if isinstance(other, FieldElement):
            return other
        if isinstance(other, int):
            return FieldElement.from_parts(other, 0, 1)
        if isinstance(other, Fraction):
            return FieldElement.from_parts(other.numerator, 0, other.denominator)
        if isinstance(other, EisensteinInteger):
            return FieldElement.from_eisenstein(other)
        raise TypeError(f"Cannot combine FieldElement with {type(other)}")

    def __add__(self, other: Any) -> "FieldElement":
        o = self._coerce(other)
        if self._d == o._d:
            return FieldElement.from_parts(self._a + o._a, self._b + o._b, self._d)
        return FieldElement.from_parts(
            self._a * o._d + o._a * self._d,
            self._b * o._d + o._b * self._d,
            self._d * o._d,
        )

    __radd__ = __add__

    def __neg__(self) -> "FieldElement":
        result = FieldElement.__new__(FieldElement)
        result._a = -self._a
        result._b = -self._b
        result._d = self._d
        return result

    def __sub__(self, other: Any) -> "FieldElement":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Any) -> "FieldElement":
        return self._coerce(other) + (-self)

    def __mul__(self, other: Any) -> "FieldElement":
        o = self._coerce(other)
        bb = self._b * o._b
        return FieldElement.from_parts(
            self._a * o._a - bb,
            self._a * o._b + self._b * o._a - bb,
            self._d * o._d,
        )

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        """conj(x) / norm(x)."""
        if self.is_zero():
            raise DivisionByZeroException("Zero has no inverse")
        n = self._a * self._a - self._a * self._b + self._b * self._b
        return FieldElement.from_parts(
            (self._a - self._b) * self._d,
            -self._b * self._d,
            n,
        )

    def __truediv__(self, other: Any) -> "FieldElement":
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other: Any) -> "FieldElement":
        return self._coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> "FieldElement":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conj(self) -> "FieldElement":
        """Galois conjugation w -> w^2."""
        result = FieldElement.__new__(FieldElement)
        result._a = self._a - self._b
        result._b = -self._b
        result._d = self._d
        return result

    def norm(self) -> Fraction:
        """x * conj(x), a non-negative rational."""
        n = self._a * self._a - self._a * self._b + self._b * self._b
        return Fraction(n, self._d * self._d)


ZERO = FieldElement.from_parts(0, 0, 1)
ONE = FieldElement.from_parts(1, 0, 1)
OMEGA = FieldElement.from_parts(0, 1, 1)
OMEGA2 = FieldElement.from_parts(-1, -1, 1)
CHI = FieldElement.from_parts(1, -1, 1)
CHI_BAR = FieldElement.from_parts(2, 1, 1)
# chi^-1 = conj(chi) / 3
CHI_INV = FieldElement.from_parts(2, 1, 3)


#
# String forms
#

RATIONAL_PATTERN = r"-?\d+(?:/\d+)?"

FIELD_ELEMENT_REGEX = re.compile(
    rf"^\(\s*(?P<a>{RATIONAL_PATTERN})\s*\+\s*(?P<b>{RATIONAL_PATTERN})\s*w\s*\)$"
)

SHORTCUTS: dict[str, FieldElement] = {
    "w": OMEGA,
    "-w": -OMEGA,
    "w^2": OMEGA2,
    "-w^2": -OMEGA2,
}


def format_field_element(x: FieldElement) -> str:
    """Return "(<a>+<b>w)" with a, b printed as rationals."""
    return f"({x.a}+{x.b}w)"


def parse_field_element(text: str) -> FieldElement:
    """Parse the "(<a>+<b>w)" form, "w", "w^2" or a plain rational."""
    text = text.strip()
    if text in SHORTCUTS:
        return SHORTCUTS[text]
    try:
        if match := FIELD_ELEMENT_REGEX.match(text):
            return FieldElement(Fraction(match["a"]), Fraction(match["b"]))
        if re.fullmatch(RATIONAL_PATTERN, text):
            return FieldElement(Fraction(text))
    except ZeroDivisionError as e:
        raise DocumentParseException(f"Zero denominator in '{text}'") from e
    raise DocumentParseException(f"Unable to parse field element '{text}'")
