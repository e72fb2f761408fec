"""Eisenstein integers a + bw with w a primitive third root of unity."""

from typing import Any


class EisensteinInteger:
    """Element a + bw of Z[w], using w^2 = -1 - w.

    Instances are treated as immutable values and are hashable.
    """

    __slots__ = ("a", "b")

    a: int
    b: int

    def __init__(self, a: int = 0, b: int = 0) -> None:
        self.a = a
        self.b = b

    def __repr__(self) -> str:
        return f"EisensteinInteger({self.a}, {self.b})"

    def __str__(self) -> str:
        return f"{self.a}+{self.b}w"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, EisensteinInteger):
            return self.a == other.a and self.b == other.b
        if isinstance(other, int):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def __bool__(self) -> bool:
        return bool(self.a or self.b)

    @staticmethod
    def _coerce(other: Any) -> "EisensteinInteger":
        if isinstance(other, EisensteinInteger):
            return other
        if isinstance(other, int):
            return EisensteinInteger(other, 0)
        raise TypeError(f"Cannot combine EisensteinInteger with {type(other)}")

    def __add__(self, other: Any) -> "EisensteinInteger":
        o = self._coerce(other)
        return EisensteinInteger(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other: Any) -> "EisensteinInteger":
        o = self._coerce(other)
        return EisensteinInteger(self.a - o.a, self.b - o.b)

    def __rsub__(self, other: Any) -> "EisensteinInteger":
        return self._coerce(other) - self

    def __neg__(self) -> "EisensteinInteger":
        return EisensteinInteger(-self.a, -self.b)

    def __mul__(self, other: Any) -> "EisensteinInteger":
        o = self._coerce(other)
        bb = self.b * o.b
        return EisensteinInteger(
            self.a * o.a - bb,
            self.a * o.b + self.b * o.a - bb,
        )

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "EisensteinInteger":
        if exponent < 0:
            raise ValueError("Negative powers leave Z[w]")
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conj(self) -> "EisensteinInteger":
        """Galois conjugate: w -> w^2 = -1 - w."""
        return EisensteinInteger(self.a - self.b, -self.b)

    def norm(self) -> int:
        """x * conj(x) = a^2 - ab + b^2."""
        return self.a * self.a - self.a * self.b + self.b * self.b

    def divisible_by_chi(self) -> bool:
        """chi = 1 - w divides a + bw iff a + b = 0 mod 3."""
        return (self.a + self.b) % 3 == 0

    def div_chi(self) -> "EisensteinInteger":
        """Exact division by chi.

        (a + bw) / (1 - w) = ((2a - b) + (a + b)w) / 3
        """
        if not self:
            return self
        p = 2 * self.a - self.b
        q = self.a + self.b
        if p % 3 or q % 3:
            raise ValueError(f"{self} is not divisible by chi")
        return EisensteinInteger(p // 3, q // 3)

    def residue(self) -> int:
        """Residue modulo chi in F3 (w = 1 mod chi)."""
        return (self.a + self.b) % 3


ZERO = EisensteinInteger(0, 0)
ONE = EisensteinInteger(1, 0)
OMEGA = EisensteinInteger(0, 1)
OMEGA2 = EisensteinInteger(-1, -1)
CHI = EisensteinInteger(1, -1)

# Unit group of Z[w] in the fixed order 1, -1, w, -w, w^2, -w^2
UNITS: tuple[EisensteinInteger, ...] = (
    ONE,
    -ONE,
    OMEGA,
    -OMEGA,
    OMEGA2,
    -OMEGA2,
)

UNIT_INDEX: dict[EisensteinInteger, int] = {u: i for i, u in enumerate(UNITS)}
