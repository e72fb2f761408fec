"""Exact 3x3 matrices over Q(w)."""

from fractions import Fraction
from typing import Any, Callable, Iterable, Sequence

from chisynth.arithmetic.field import ONE, ZERO, FieldElement
from chisynth.arithmetic.ring import format_ring_element, in_ring
from chisynth.arithmetic.valuation import VALUATION_INFINITY, Valuation, v_pi
from chisynth.exceptions import SingularException

Scalar = FieldElement | int | Fraction

INDICES = ((0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2), (2, 0), (2, 1), (2, 2))


def as_field(x: Any) -> FieldElement:
    if isinstance(x, FieldElement):
        return x
    return FieldElement._coerce(x)


class Matrix3:
    """A 3x3 matrix with FieldElement entries, stored row-major.

    Immutable. Equality is exact and entrywise.
    """

    __slots__ = ("entries",)

    entries: tuple[FieldElement, ...]

    def __init__(self, entries: Iterable[Scalar]) -> None:
        values = tuple(as_field(x) for x in entries)
        if len(values) != 9:
            raise ValueError(f"Expected 9 entries, got {len(values)}")
        self.entries = values

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]]) -> "Matrix3":
        if len(rows) != 3 or any(len(row) != 3 for row in rows):
            raise ValueError("Expected a 3x3 array")
        return cls(x for row in rows for x in row)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Scalar]]) -> "Matrix3":
        return cls.from_rows([[columns[j][i] for j in range(3)] for i in range(3)])

    @classmethod
    def identity(cls) -> "Matrix3":
        return cls.diagonal(ONE, ONE, ONE)

    @classmethod
    def zero(cls) -> "Matrix3":
        return cls([ZERO] * 9)

    @classmethod
    def diagonal(cls, d0: Scalar, d1: Scalar, d2: Scalar) -> "Matrix3":
        return cls([d0, 0, 0, 0, d1, 0, 0, 0, d2])

    #
    # Access
    #

    def __getitem__(self, index: tuple[int, int]) -> FieldElement:
        i, j = index
        return self.entries[3 * i + j]

    def row(self, i: int) -> tuple[FieldElement, FieldElement, FieldElement]:
        e = self.entries
        return e[3 * i], e[3 * i + 1], e[3 * i + 2]

    def column(self, j: int) -> tuple[FieldElement, FieldElement, FieldElement]:
        e = self.entries
        return e[j], e[3 + j], e[6 + j]

    def rows(self) -> list[list[FieldElement]]:
        return [list(self.row(i)) for i in range(3)]

    def columns(self) -> list[list[FieldElement]]:
        return [list(self.column(j)) for j in range(3)]

    def map(self, fn: Callable[[FieldElement], FieldElement]) -> "Matrix3":
        return Matrix3(fn(x) for x in self.entries)

    def __repr__(self) -> str:
        return f"Matrix3({self.rows()})"

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in self.row(i)) for i in range(3))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix3):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    #
    # Arithmetic
    #

    def __matmul__(self, other: "Matrix3") -> "Matrix3":
        a = self.entries
        b = other.entries
        return Matrix3(
            a[3 * i] * b[j] + a[3 * i + 1] * b[3 + j] + a[3 * i + 2] * b[6 + j]
            for i, j in INDICES
        )

    def __mul__(self, scalar: Scalar) -> "Matrix3":
        s = as_field(scalar)
        return self.map(lambda x: x * s)

    __rmul__ = __mul__

    def __add__(self, other: "Matrix3") -> "Matrix3":
        return Matrix3(x + y for x, y in zip(self.entries, other.entries))

    def __sub__(self, other: "Matrix3") -> "Matrix3":
        return Matrix3(x - y for x, y in zip(self.entries, other.entries))

    def __neg__(self) -> "Matrix3":
        return self.map(lambda x: -x)

    def transpose(self) -> "Matrix3":
        return Matrix3(self.entries[3 * j + i] for i, j in INDICES)

    def conj(self) -> "Matrix3":
        return self.map(lambda x: x.conj())

    def adjoint(self) -> "Matrix3":
        """Conjugate transpose A*."""
        return Matrix3(self.entries[3 * j + i].conj() for i, j in INDICES)

    def det(self) -> FieldElement:
        a, b, c, d, e, f, g, h, i = self.entries
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)

    def is_invertible(self) -> bool:
        return not self.det().is_zero()

    def inverse(self) -> "Matrix3":
        """Adjugate divided by the determinant."""
        a, b, c, d, e, f, g, h, i = self.entries
        det = self.det()
        if det.is_zero():
            raise SingularException("Matrix is not invertible")
        inv = det.inverse()
        cofactors = (
            e * i - f * h,
            c * h - b * i,
            b * f - c * e,
            f * g - d * i,
            a * i - c * g,
            c * d - a * f,
            d * h - e * g,
            b * g - a * h,
            a * e - b * d,
        )
        return Matrix3(x * inv for x in cofactors)

    def apply(self, vector: Sequence[Scalar]) -> list[FieldElement]:
        v = [as_field(x) for x in vector]
        return [
            self.entries[3 * i] * v[0]
            + self.entries[3 * i + 1] * v[1]
            + self.entries[3 * i + 2] * v[2]
            for i in range(3)
        ]

    #
    # Predicates
    #

    def is_identity(self) -> bool:
        return self == IDENTITY

    def is_unitary(self) -> bool:
        return (self @ self.adjoint()).is_identity()

    def in_ring(self) -> bool:
        """All entries lie in Z[1/chi]."""
        return all(in_ring(x) for x in self.entries)

    def is_integral(self) -> bool:
        """All entries have non-negative valuation."""
        return self.min_valuation() >= 0

    def is_unimodular(self) -> bool:
        """Member of GL3 over the valuation ring."""
        if not self.is_integral():
            return False
        det = self.det()
        return not det.is_zero() and v_pi(det) == 0

    def min_valuation(self) -> Valuation:
        return min((v_pi(x) for x in self.entries), default=VALUATION_INFINITY)

    def serialize(self) -> list[list[str]]:
        """Row-major "(p+qw)/chi^k" strings; entries must lie in Z[1/chi]."""
        return [[format_ring_element(x) for x in self.row(i)] for i in range(3)]


IDENTITY = Matrix3.identity()
