"""Matrices over Z[1/chi] in the normalized form Z / chi^k.

Z has Eisenstein integer entries and is not divisible by chi as a whole,
so k is the least exponent with chi^k M integral. For a non-zero
normalized matrix the least entry valuation is -k, hence l(M) = 2k and
sde(M) = max(k, 0).

Entries are kept as a flat tuple of 18 integers (a, b) per entry; this
is the hot path of word evaluation and descent.
"""

from typing import Iterable

from chisynth.arithmetic.eisenstein import EisensteinInteger
from chisynth.arithmetic.field import FieldElement
from chisynth.arithmetic.valuation import chi_power
from chisynth.exceptions import NotInRingException, SingularException
from chisynth.matrices.matrix import INDICES, Matrix3

RingKey = tuple[int, tuple[int, ...]]

# (-w)^n for n mod 6, as (a, b) pairs
MINUS_OMEGA_POWERS = ((1, 0), (0, -1), (-1, -1), (-1, 0), (0, 1), (1, 1))


def _mul(a1: int, b1: int, a2: int, b2: int) -> tuple[int, int]:
    bb = b1 * b2
    return a1 * a2 - bb, a1 * b2 + b1 * a2 - bb


class RingMatrix:
    """Exact 3x3 matrix Z / chi^k over Z[1/chi], kept normalized."""

    __slots__ = ("z", "k")

    z: tuple[int, ...]
    k: int

    def __init__(self, z: Iterable[int], k: int = 0) -> None:
        values = tuple(z)
        if len(values) != 18:
            raise ValueError("Expected 9 (a, b) pairs")
        self.z, self.k = _normalize(values, k)

    @classmethod
    def from_entries(
        cls,
        entries: Iterable[EisensteinInteger | int],
        k: int = 0,
    ) -> "RingMatrix":
        flat: list[int] = []
        for x in entries:
            if isinstance(x, int):
                flat.extend((x, 0))
            else:
                flat.extend((x.a, x.b))
        return cls(flat, k)

    @classmethod
    def identity(cls) -> "RingMatrix":
        return cls.from_entries([1, 0, 0, 0, 1, 0, 0, 0, 1])

    @classmethod
    def from_matrix(cls, m: Matrix3) -> "RingMatrix":
        """Convert an exact matrix; raises NotInRingException outside Z[1/chi]."""
        if not m.in_ring():
            raise NotInRingException("Matrix has entries outside Z[1/chi]")
        if all(x.is_zero() for x in m.entries):
            return cls([0] * 18)
        k = -int(m.min_valuation())
        scale = chi_power(k)
        return cls.from_entries([(x * scale).to_eisenstein() for x in m.entries], k)

    def to_matrix(self) -> Matrix3:
        scale = chi_power(-self.k)
        z = self.z
        return Matrix3(
            FieldElement.from_parts(z[2 * n], z[2 * n + 1], 1) * scale
            for n in range(9)
        )

    def entry(self, i: int, j: int) -> EisensteinInteger:
        n = 2 * (3 * i + j)
        return EisensteinInteger(self.z[n], self.z[n + 1])

    @property
    def key(self) -> RingKey:
        return self.k, self.z

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return self.k == other.k and self.z == other.z

    def __hash__(self) -> int:
        return hash((self.k, self.z))

    def __repr__(self) -> str:
        entries = ", ".join(str(self.entry(i, j)) for i, j in INDICES)
        return f"RingMatrix([{entries}], k={self.k})"

    #
    # Arithmetic
    #

    def is_diagonal(self) -> bool:
        z = self.z
        return not any(z[n] for n in (2, 3, 4, 5, 6, 7, 10, 11, 12, 13, 14, 15))

    def __matmul__(self, other: "RingMatrix") -> "RingMatrix":
        za = self.z
        zb = other.z
        out = [0] * 18
        if other.is_diagonal():
            for i in range(3):
                for j in range(3):
                    n = 6 * i + 2 * j
                    d = 8 * j
                    out[n], out[n + 1] = _mul(za[n], za[n + 1], zb[d], zb[d + 1])
            return RingMatrix(out, self.k + other.k)
        for i in range(3):
            row = 6 * i
            for j in range(3):
                sa = sb = 0
                for m in range(3):
                    a1 = za[row + 2 * m]
                    b1 = za[row + 2 * m + 1]
                    a2 = zb[6 * m + 2 * j]
                    b2 = zb[6 * m + 2 * j + 1]
                    bb = b1 * b2
                    sa += a1 * a2 - bb
                    sb += a1 * b2 + b1 * a2 - bb
                out[row + 2 * j] = sa
                out[row + 2 * j + 1] = sb
        return RingMatrix(out, self.k + other.k)

    def __neg__(self) -> "RingMatrix":
        return RingMatrix((-x for x in self.z), self.k)

    def adjoint(self) -> "RingMatrix":
        """Conjugate transpose.

        conj(chi) = -w^2 chi, so conj(z / chi^k) = conj(z) (-w)^k / chi^k.
        """
        ua, ub = MINUS_OMEGA_POWERS[self.k % 6]
        z = self.z
        out = [0] * 18
        for i, j in INDICES:
            n = 2 * (3 * j + i)
            # conj(a + bw) = (a - b) - bw
            a, b = z[n] - z[n + 1], -z[n + 1]
            m = 2 * (3 * i + j)
            out[m], out[m + 1] = _mul(a, b, ua, ub)
        return RingMatrix(out, self.k)

    def inverse(self) -> "RingMatrix":
        """Inverse of a unitary matrix (its adjoint)."""
        return self.adjoint()

    #
    # Predicates and invariants
    #

    def is_zero(self) -> bool:
        return not any(self.z)

    def is_identity(self) -> bool:
        return self.k == 0 and self.z == IDENTITY_Z

    def is_unitary(self) -> bool:
        return (self @ self.adjoint()).is_identity()

    def is_monomial(self) -> bool:
        """One unit per row and column, and no denominators."""
        if self.k != 0:
            return False
        columns = set()
        for i in range(3):
            row = self.z[6 * i : 6 * i + 6]
            hits = [j for j in range(3) if row[2 * j] or row[2 * j + 1]]
            if len(hits) != 1:
                return False
            if self.entry(i, hits[0]).norm() != 1:
                return False
            columns.add(hits[0])
        return len(columns) == 3

    def l_value(self) -> int:
        """-2 times the least entry valuation."""
        if self.is_zero():
            raise SingularException("l is undefined for the zero matrix")
        return 2 * self.k

    def sde(self) -> int:
        if self.is_zero():
            raise SingularException("sde is undefined for the zero matrix")
        return max(self.k, 0)

    def in_ring(self) -> bool:
        return True

    def min_valuation(self) -> int:
        return -self.k


def _normalize(z: tuple[int, ...], k: int) -> tuple[tuple[int, ...], int]:
    """Divide out common factors of chi."""
    if not any(z):
        return z, 0
    while all((z[n] + z[n + 1]) % 3 == 0 for n in range(0, 18, 2)):
        z = tuple(
            value
            for n in range(0, 18, 2)
            for value in ((2 * z[n] - z[n + 1]) // 3, (z[n] + z[n + 1]) // 3)
        )
        k -= 1
    return z, k


IDENTITY_Z = (1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0)

UnitaryMatrix = RingMatrix


def as_matrix(m: "Matrix3 | RingMatrix") -> Matrix3:
    if isinstance(m, RingMatrix):
        return m.to_matrix()
    return m
