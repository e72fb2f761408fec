"""Rank-3 lattices over the valuation ring at chi.

A lattice is stored through its canonical basis: the column Hermite form
over the valuation ring. The basis is lower triangular with diagonal
chi^a_i, and each entry below the diagonal in row i is the chi-digit
representative of its class modulo chi^a_i. Two lattices are equal iff
their canonical bases are identical, so the serialized basis doubles as
a hash key.
"""

from typing import Sequence

from chisynth.arithmetic.field import FieldElement
from chisynth.arithmetic.ring import format_ring_element, parse_ring_element
from chisynth.arithmetic.valuation import chi_power, reduce_mod_chi_power, v_pi
from chisynth.exceptions import (
    DocumentParseException,
    NotPiEquivalentToDualException,
    OddExponentException,
    SingularException,
)
from chisynth.matrices.matrix import Matrix3
from chisynth.matrices.ring import RingMatrix, as_matrix

Column = list[FieldElement]
Exponents = tuple[int, int, int]


def hermite_form(
    generators: Sequence[Sequence[FieldElement]],
) -> tuple[Matrix3, Exponents]:
    """Column Hermite form of the lattice spanned by the generators.

    Returns the canonical basis and the diagonal exponents.
    """
    columns: list[Column] = [list(c) for c in generators]
    exponents: list[int] = []

    for r in range(3):
        best: tuple[float, int] | None = None
        for c in range(r, len(columns)):
            x = columns[c][r]
            if x.is_zero():
                continue
            candidate = (v_pi(x), c)
            if best is None or candidate < best:
                best = candidate
        if best is None:
            raise SingularException("Generators do not span a rank-3 lattice")

        valuation, c = int(best[0]), best[1]
        columns[r], columns[c] = columns[c], columns[r]
        scale = chi_power(valuation) / columns[r][r]
        columns[r] = [x * scale for x in columns[r]]

        shift = chi_power(-valuation)
        for c in range(r + 1, len(columns)):
            x = columns[c][r]
            if x.is_zero():
                continue
            q = x * shift
            columns[c] = [y - q * z for y, z in zip(columns[c], columns[r])]
        exponents.append(valuation)

    columns = columns[:3]
    for i in (1, 2):
        shift = chi_power(-exponents[i])
        for j in range(i):
            x = columns[j][i]
            representative = reduce_mod_chi_power(x, exponents[i])
            if representative == x:
                continue
            q = (x - representative) * shift
            columns[j] = [y - q * z for y, z in zip(columns[j], columns[i])]

    return Matrix3.from_columns(columns), (exponents[0], exponents[1], exponents[2])


class Lattice:
    """Lattice spanned by the columns of a basis matrix."""

    __slots__ = ("basis", "exponents", "_key")

    basis: Matrix3
    exponents: Exponents
    _key: str | None

    def __init__(self, basis: Matrix3 | RingMatrix) -> None:
        self.basis, self.exponents = hermite_form(as_matrix(basis).columns())
        self._key = None

    @classmethod
    def from_generators(cls, generators: Sequence[Sequence[FieldElement]]) -> "Lattice":
        lattice = cls.__new__(cls)
        lattice.basis, lattice.exponents = hermite_form(generators)
        lattice._key = None
        return lattice

    @classmethod
    def standard(cls) -> "Lattice":
        """O^3, the origin of the building."""
        return cls(Matrix3.identity())

    @classmethod
    def from_key(cls, key: str) -> "Lattice":
        parts = key.split(",")
        if len(parts) != 9:
            raise DocumentParseException(f"Lattice key needs 9 entries: {key}")
        return cls(Matrix3(parse_ring_element(part) for part in parts))

    @property
    def key(self) -> str:
        """Row-major canonical basis in the "(p+qw)/chi^k" grammar."""
        if self._key is None:
            self._key = ",".join(format_ring_element(x) for x in self.basis.entries)
        return self._key

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Lattice):
            return NotImplemented
        return self.basis == other.basis

    def __hash__(self) -> int:
        return hash(self.basis)

    def __repr__(self) -> str:
        return f"Lattice({self.key})"

    def columns(self) -> list[Column]:
        return self.basis.columns()

    #
    # Operations
    #

    def dual(self) -> "Lattice":
        """Vectors pairing integrally with the lattice: basis (B*)^-1."""
        return Lattice(self.basis.adjoint().inverse())

    def contains(self, other: "Lattice") -> bool:
        """True iff other is a sublattice of self."""
        return (self.basis.inverse() @ other.basis).is_integral()

    def __le__(self, other: "Lattice") -> bool:
        return other.contains(self)

    def __lt__(self, other: "Lattice") -> bool:
        return self != other and other.contains(self)

    def scaled(self, n: int) -> "Lattice":
        """chi^n times the lattice."""
        return Lattice(self.basis * chi_power(n))

    def plus(self, other: "Lattice") -> "Lattice":
        return Lattice.from_generators(self.columns() + other.columns())

    def transformed(self, g: Matrix3 | RingMatrix) -> "Lattice":
        """The image g * L."""
        return Lattice(as_matrix(g) @ self.basis)

    def gram(self) -> Matrix3:
        """Gram matrix G_ij = <b_i, b_j> = sum_k B_ki conj(B_kj)."""
        return self.basis.transpose() @ self.basis.conj()

    @property
    def det_valuation(self) -> int:
        return sum(self.exponents)

    def is_self_dual(self) -> bool:
        """Gram matrix integral with a unit determinant."""
        gram = self.gram()
        if not gram.is_integral():
            return False
        return v_pi(gram.det()) == 0

    def is_self_dual_by_definition(self) -> bool:
        return self.dual() == self

    def normalized(self) -> "Lattice":
        """The multiple chi^s L inside O^3 but not inside chi O^3."""
        return self.scaled(-int(self.basis.min_valuation()))

    def same_class(self, other: "Lattice") -> bool:
        return self.normalized() == other.normalized()


def self_dualize(lattice: Lattice) -> Lattice:
    """Rescale a lattice whose dual is chi^i times itself into a self-dual one.

    Determinants give v(det L#) = -v(det L) and v(det chi^i L) = v(det L) + 3i,
    which pins down i. An odd i means the class holds no self-dual lattice.
    """
    a = lattice.det_valuation
    if (2 * a) % 3:
        raise NotPiEquivalentToDualException(
            f"det valuation {a} rules out dual = chi^i L"
        )
    i = -2 * a // 3
    if lattice.dual() != lattice.scaled(i):
        raise NotPiEquivalentToDualException(f"dual is not chi^{i} times {lattice}")
    if i % 2:
        raise OddExponentException(f"dual = chi^{i} L")
    return lattice.scaled(i // 2)
