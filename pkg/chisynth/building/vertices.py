"""Vertices of the building and their neighbors.

A pure vertex is the homothety class of a self-dual lattice and is named
by that lattice. An alternating vertex is the class of a lattice L with
chi L inside L# and L# strictly inside L. That member of the class has
det valuation -1 and is the one neighbors are computed from. The key is
that of chi L, the member with det valuation 2.

Neighbors are computed from the Hermitian form reduced to F3:

* pure L: every isotropic line of the form on L / chi L lifts to an
  alternating neighbor L + chi^-1 v
* alternating L: every self-dual plane through the radical of the
  antisymmetric form chi <x, y> on L / chi L lifts to a pure neighbor
  L# + span(plane); the radical is L# / chi L
"""

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import ClassVar, Union

from nxtools import logging

from chisynth.arithmetic.field import CHI, CHI_INV, FieldElement
from chisynth.arithmetic.valuation import residue_mod_chi
from chisynth.building.lattice import Lattice, self_dualize
from chisynth.exceptions import (
    BuildingInvariantException,
    DocumentParseException,
    NegativeValuationException,
    NotAlternatingException,
    NotPiEquivalentToDualException,
    NotSelfDualException,
    OddExponentException,
    SingularException,
)
from chisynth.f3 import isotropic_lines, radical_line, self_dual_planes_through
from chisynth.f3.forms import F3Matrix, F3Vector, matrix
from chisynth.matrices.matrix import Matrix3
from chisynth.matrices.ring import RingMatrix
from chisynth.types import VertexKind

ALTERNATING_DET_VALUATION = -1
ALTERNATING_KEY_DET_VALUATION = 2


@dataclass(frozen=True)
class PureVertex:
    lattice: Lattice
    kind: ClassVar[VertexKind] = "pure"

    @property
    def key(self) -> str:
        return self.lattice.key

    def transformed(self, g: Matrix3 | RingMatrix) -> "PureVertex":
        return PureVertex(self.lattice.transformed(g))


@dataclass(frozen=True)
class AlternatingVertex:
    lattice: Lattice
    kind: ClassVar[VertexKind] = "alternating"

    @cached_property
    def key(self) -> str:
        shift = (ALTERNATING_KEY_DET_VALUATION - ALTERNATING_DET_VALUATION) // 3
        return self.lattice.scaled(shift).key

    def transformed(self, g: Matrix3 | RingMatrix) -> "AlternatingVertex":
        return AlternatingVertex(self.lattice.transformed(g))


BuildingVertex = Union[PureVertex, AlternatingVertex]


def origin() -> PureVertex:
    """e0, the class of O^3."""
    return PureVertex(Lattice.standard())


def pure_vertex_of(g: Matrix3 | RingMatrix) -> PureVertex:
    """The pure vertex g e0 for g in A."""
    lattice = Lattice(g)
    if not lattice.is_self_dual():
        raise NotSelfDualException(f"{lattice} is not self-dual")
    return PureVertex(lattice)


def vertex_key(vertex: BuildingVertex) -> str:
    """Canonical serialization of the vertex class."""
    return vertex.key


def vertex_from_key(key: str) -> BuildingVertex:
    """The vertex whose key is given. Raises on non-canonical keys."""
    try:
        vertex = classify_vertex(Lattice.from_key(key))
    except (NotAlternatingException, SingularException) as e:
        raise DocumentParseException(f"Key {key} names no vertex: {e}") from e
    if vertex.key != key:
        raise DocumentParseException(f"Key {key} is not canonical")
    return vertex


#
# Classification
#


def is_alternating_lattice(lattice: Lattice) -> bool:
    """chi L inside L# and L# strictly inside L."""
    dual = lattice.dual()
    if dual == lattice or not lattice.contains(dual):
        return False
    return dual.contains(lattice.scaled(1))


def classify_vertex(lattice: Lattice) -> BuildingVertex:
    """The vertex whose class contains the lattice.

    Raises NotAlternatingException when the class is neither pure nor
    alternating, which means it is not a vertex of the building.
    """
    if lattice.is_self_dual():
        return PureVertex(lattice)
    try:
        return PureVertex(self_dualize(lattice))
    except (NotPiEquivalentToDualException, OddExponentException):
        pass

    # the class holds chi^i L0 and chi^i L0# for the alternating representative L0
    for candidate in (lattice, lattice.dual()):
        shifted = candidate.det_valuation - ALTERNATING_DET_VALUATION
        if shifted % 3:
            continue
        representative = candidate.scaled(-shifted // 3)
        if is_alternating_lattice(representative):
            return AlternatingVertex(representative)
    raise NotAlternatingException(f"{lattice} is neither pure nor alternating")


#
# Forms on quotients
#


def _residue_matrix(gram: Matrix3, factor: FieldElement | None = None) -> F3Matrix:
    """F3 matrix A with <A x, y> = sum x_i y_j res(factor * G_ij).

    That is the transpose of the entrywise residue.
    """
    try:
        return matrix(
            [
                [
                    residue_mod_chi(
                        gram[j, i] if factor is None else gram[j, i] * factor
                    )
                    for j in range(3)
                ]
                for i in range(3)
            ]
        )
    except NegativeValuationException as e:
        raise BuildingInvariantException(f"Gram matrix is not integral: {e}") from e


def _lift(basis: Matrix3, coordinates: F3Vector) -> list[FieldElement]:
    return basis.apply(coordinates)


def pure_neighbors(vertex: PureVertex) -> list[AlternatingVertex]:
    """Alternating neighbors of a pure vertex, one per isotropic line."""
    lattice = vertex.lattice
    basis = lattice.basis
    form = _residue_matrix(lattice.gram())
    result: list[AlternatingVertex] = []
    for line in isotropic_lines(form):
        lifted = [x * CHI_INV for x in _lift(basis, line.vector)]
        neighbor = Lattice.from_generators(lattice.columns() + [lifted])
        dual = neighbor.dual()
        if not (
            neighbor.contains(lattice)
            and lattice.contains(dual)
            and is_alternating_lattice(neighbor)
        ):
            raise BuildingInvariantException(
                f"Lift of {line.vector} from {lattice.key} is not alternating"
            )
        result.append(AlternatingVertex(neighbor))
    return result


def alternating_neighbors(vertex: AlternatingVertex) -> list[PureVertex]:
    """Pure neighbors of an alternating vertex, one per self-dual plane."""
    lattice = vertex.lattice
    basis = lattice.basis
    dual = lattice.dual()
    form = _residue_matrix(lattice.gram(), CHI)
    radical = radical_line(form)
    result: list[PureVertex] = []
    for plane in self_dual_planes_through(form, radical):
        generators = dual.columns() + [_lift(basis, w) for w in plane.basis()]
        neighbor = Lattice.from_generators(generators)
        if not (
            neighbor.is_self_dual()
            and lattice.contains(neighbor)
            and neighbor.contains(dual)
            and neighbor != lattice
            and neighbor != dual
        ):
            raise BuildingInvariantException(
                f"Lift of plane {plane.normal} from {lattice.key} is not self-dual"
            )
        result.append(PureVertex(neighbor))
    return result


@lru_cache(maxsize=200_000)
def neighbors(vertex: BuildingVertex) -> tuple[BuildingVertex, ...]:
    """All neighbors of a vertex, memoized."""
    found: list[BuildingVertex]
    if isinstance(vertex, PureVertex):
        found = list(pure_neighbors(vertex))
    else:
        found = list(alternating_neighbors(vertex))
    if not found:
        logging.warning(f"{vertex.kind} vertex {vertex.key} has no neighbors")
    return tuple(found)
