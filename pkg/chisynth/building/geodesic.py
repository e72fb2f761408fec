"""Adjacency of pure vertices and the geodesics between them."""

from itertools import pairwise

from chisynth.arithmetic.field import CHI
from chisynth.arithmetic.valuation import chi_power
from chisynth.building.lattice import Lattice
from chisynth.exceptions import (
    BuildingInvariantException,
    NotInAException,
    NotSelfDualException,
    SameVertexException,
)
from chisynth.matrices.cartan import cartan_decompose
from chisynth.matrices.matrix import Matrix3
from chisynth.matrices.metric import MatrixLike, is_in_A
from chisynth.matrices.ring import as_matrix


def _require_in_A(*matrices: MatrixLike) -> list[Matrix3]:
    result = []
    for m in matrices:
        if not is_in_A(m):
            raise NotInAException(f"{m!r} is not in A")
        result.append(as_matrix(m))
    return result


def lattices_adjacent(first: Lattice, second: Lattice) -> bool:
    """Self-dual lattices L != M with chi L inside M and chi M inside L."""
    if first == second:
        return False
    return first.contains(second.scaled(1)) and second.contains(first.scaled(1))


def adjacent_pures(g: MatrixLike, h: MatrixLike) -> bool:
    """True iff the pure vertices g e0 and h e0 share an alternating neighbor.

    That is, chi g^-1 h and chi h^-1 g both have integral entries.
    """
    mg, mh = _require_in_A(g, h)
    if Lattice(mg) == Lattice(mh):
        raise SameVertexException("Both matrices give the same pure vertex")
    forward = mg.inverse() @ mh * CHI
    backward = mh.inverse() @ mg * CHI
    return forward.is_integral() and backward.is_integral()


def interpolate_self_dual(g: MatrixLike, h: MatrixLike) -> list[Lattice]:
    """The self-dual lattices strictly between g O^3 and h O^3.

    With g^-1 h = k diag(chi^n, 1, chi^-n) k' and columns v1, v2, v3 of
    g k, the chain is L_i = span(chi^i v1, v2, chi^-i v3) for 0 < i < n.
    Consecutive members, ends included, are adjacent.
    """
    mg, mh = _require_in_A(g, h)
    start, end = Lattice(mg), Lattice(mh)
    for lattice in (start, end):
        if not lattice.is_self_dual():
            raise NotSelfDualException(f"{lattice} is not self-dual")

    triple = cartan_decompose(mg.inverse() @ mh)
    n, middle, low = triple.exponents
    if middle != 0 or low != -n:
        raise BuildingInvariantException(
            f"Cartan exponents {triple.exponents} are not of the form (n, 0, -n)"
        )

    if n == 0:
        return []

    v1, v2, v3 = (mg @ triple.k).columns()
    chain: list[Lattice] = []
    for i in range(1, n):
        up, down = chi_power(i), chi_power(-i)
        lattice = Lattice.from_generators(
            [[x * up for x in v1], v2, [x * down for x in v3]]
        )
        if not lattice.is_self_dual():
            raise BuildingInvariantException(f"Interpolant {i} is not self-dual")
        chain.append(lattice)

    for a, b in pairwise([start, *chain, end]):
        if not lattices_adjacent(a, b):
            raise BuildingInvariantException(f"{a.key} and {b.key} are not adjacent")
    return chain
