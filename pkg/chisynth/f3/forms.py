"""Bilinear forms on F3^3.

Matrices are numpy int64 arrays reduced mod 3. Forms are given by a
matrix A and evaluated as <x, y>_A = <Ax, y> with the standard dot
product. Vectors that name subspaces are plain tuples so that lines and
planes stay hashable.
"""

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np
import numpy.typing as npt

from chisynth.exceptions import (
    BadShapeException,
    BuildingInvariantException,
    DegenerateFormException,
    NotSymmetricException,
    SingularException,
)

F3Vector = tuple[int, int, int]
F3Matrix = npt.NDArray[np.int64]

P = 3
ZERO_VECTOR: F3Vector = (0, 0, 0)


def mod3(a: npt.ArrayLike) -> F3Matrix:
    return np.asarray(np.asarray(a, dtype=np.int64) % P, dtype=np.int64)


def _frozen(a: F3Matrix) -> F3Matrix:
    a.setflags(write=False)
    return a


IDENTITY: F3Matrix = _frozen(np.eye(3, dtype=np.int64))


def vector(*coords: int) -> F3Vector:
    x, y, z = (int(c) % P for c in coords)
    return (x, y, z)


def as_vector(v: npt.ArrayLike) -> F3Vector:
    return vector(*np.asarray(v).reshape(-1).tolist())


def matrix(rows: npt.ArrayLike) -> F3Matrix:
    a = mod3(rows)
    if a.shape != (3, 3):
        raise BadShapeException(f"Expected a 3x3 matrix, got shape {a.shape}")
    return a


def form(a: F3Matrix, x: npt.ArrayLike, y: npt.ArrayLike) -> int:
    """<x, y>_A = <Ax, y>."""
    return int(np.asarray(y) @ a @ np.asarray(x)) % P


#
# Row reduction over F3
#


def rref_mod3(a: F3Matrix) -> tuple[F3Matrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    r_mat = mod3(a).copy()
    rows, cols = r_mat.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nonzero = np.flatnonzero(r_mat[r:, c])
        if not nonzero.size:
            continue
        pivot = r + int(nonzero[0])
        if pivot != r:
            r_mat[[r, pivot]] = r_mat[[pivot, r]]
        # 1 and 2 are their own inverses mod 3
        r_mat[r] = (r_mat[r] * r_mat[r, c]) % P
        for i in range(rows):
            if i != r and r_mat[i, c]:
                r_mat[i] = (r_mat[i] - r_mat[i, c] * r_mat[r]) % P
        pivots.append(c)
        r += 1
    return r_mat, pivots


def rank_mod3(a: F3Matrix) -> int:
    return len(rref_mod3(a)[1])


def nullspace_mod3(a: F3Matrix) -> F3Matrix:
    """Right nullspace of A over F3. Columns form a basis."""
    r_mat, pivots = rref_mod3(a)
    n = r_mat.shape[1]
    free = [j for j in range(n) if j not in pivots]
    basis = np.zeros((n, len(free)), dtype=np.int64)
    for k, f in enumerate(free):
        basis[f, k] = 1
        for row, pc in enumerate(pivots):
            basis[pc, k] = -r_mat[row, f] % P
    return basis


def is_invertible(a: F3Matrix) -> bool:
    return rank_mod3(a) == 3


def is_symmetric(a: F3Matrix) -> bool:
    return bool(np.array_equal(a, a.T))


def is_antisymmetric(a: F3Matrix) -> bool:
    return not bool(np.any((a + a.T) % P))


#
# Subspaces
#


def canonical(v: F3Vector) -> F3Vector:
    """Scale v so that its first non-zero coordinate is 1."""
    for c in v:
        if c:
            return v if c == 1 else vector(*(2 * x for x in v))
    return v


@lru_cache(maxsize=1)
def all_vectors() -> F3Matrix:
    """The 27 vectors as rows, in lexicographic order."""
    grid = np.array(list(itertools.product(range(P), repeat=3)), dtype=np.int64)
    return _frozen(grid)


@lru_cache(maxsize=1)
def canonical_vectors() -> F3Matrix:
    """The 13 vectors whose first non-zero coordinate is 1, as rows."""
    grid = all_vectors()
    leading = grid[np.arange(len(grid)), (grid != 0).argmax(axis=1)]
    return _frozen(grid[leading == 1])


def _point_set(rows: F3Matrix) -> frozenset[F3Vector]:
    return frozenset(as_vector(v) for v in rows)


@dataclass(frozen=True, order=True)
class F3Line:
    """One-dimensional subspace, kept as its canonical spanning vector."""

    vector: F3Vector

    def __post_init__(self) -> None:
        v = as_vector(self.vector)
        if v == ZERO_VECTOR:
            raise ValueError("The zero vector does not span a line")
        object.__setattr__(self, "vector", canonical(v))

    def points(self) -> frozenset[F3Vector]:
        v = np.array(self.vector, dtype=np.int64)
        return _point_set(mod3(np.outer(np.arange(P), v)))

    def contains(self, v: F3Vector) -> bool:
        return as_vector(v) in self.points()

    @property
    def dimension(self) -> int:
        return 1


@dataclass(frozen=True, order=True)
class F3Plane:
    """Two-dimensional subspace {x : <normal, x> = 0}."""

    normal: F3Vector

    def __post_init__(self) -> None:
        n = as_vector(self.normal)
        if n == ZERO_VECTOR:
            raise ValueError("The zero vector does not define a plane")
        object.__setattr__(self, "normal", canonical(n))

    def points(self) -> frozenset[F3Vector]:
        grid = all_vectors()
        return _point_set(grid[(grid @ np.array(self.normal)) % P == 0])

    def contains(self, v: npt.ArrayLike) -> bool:
        return int(np.dot(self.normal, np.asarray(v))) % P == 0

    def basis(self) -> tuple[F3Vector, F3Vector]:
        """Two independent canonical vectors spanning the plane."""
        columns = nullspace_mod3(np.array([self.normal], dtype=np.int64))
        if columns.shape[1] != 2:
            raise BuildingInvariantException(f"Plane {self.normal} has no basis")
        first, second = (canonical(as_vector(c)) for c in columns.T)
        return first, second

    @property
    def dimension(self) -> int:
        return 2


F3Subspace = F3Line | F3Plane


def enumerate_lines() -> list[F3Line]:
    """All 13 lines, ordered lexicographically by canonical vector."""
    return [F3Line(as_vector(v)) for v in canonical_vectors()]


def enumerate_planes() -> list[F3Plane]:
    """All 13 planes, ordered lexicographically by canonical normal."""
    return [F3Plane(as_vector(v)) for v in canonical_vectors()]


def subspace_from_basis(columns: F3Matrix) -> F3Subspace:
    """Identify the proper subspace spanned by the columns."""
    dimension = rank_mod3(columns)
    if dimension == 1:
        nonzero = np.flatnonzero(columns.any(axis=0))
        return F3Line(as_vector(columns[:, nonzero[0]]))
    if dimension == 2:
        return F3Plane(as_vector(nullspace_mod3(columns.T)[:, 0]))
    raise DegenerateFormException(f"Span of dimension {dimension} is not proper")


def spanning_matrix(subspace: F3Subspace) -> F3Matrix:
    vectors: Sequence[F3Vector]
    if isinstance(subspace, F3Line):
        vectors = (subspace.vector,)
    else:
        vectors = subspace.basis()
    return np.array(vectors, dtype=np.int64).T


#
# Forms
#


def validate_symmetric_invertible(a: F3Matrix) -> None:
    if not is_symmetric(a):
        raise NotSymmetricException(f"{a.tolist()} is not symmetric")
    if not is_invertible(a):
        raise SingularException(f"{a.tolist()} is singular over F3")


def isotropic_lines(a: F3Matrix) -> list[F3Line]:
    """Lines V with V inside its own orthogonal complement.

    For a line spanned by v that is just <v, v>_A = 0.
    """
    validate_symmetric_invertible(a)
    candidates = canonical_vectors()
    values = np.einsum("ij,jk,ik->i", candidates, a, candidates) % P
    return [F3Line(as_vector(v)) for v in candidates[values == 0]]


def dual_subspace(a: F3Matrix, subspace: F3Subspace) -> F3Subspace:
    """V^perp = {x : <x, w>_A = 0 for every w in V}.

    That is the nullspace of W^T A for a matrix W spanning V. Raises
    DegenerateFormException when the complement is the whole space or
    zero, which only happens for degenerate forms.
    """
    w = spanning_matrix(subspace)
    return subspace_from_basis(nullspace_mod3(w.T @ a))


def validate_lemma_shape(a: F3Matrix) -> tuple[int, int]:
    """Check the antisymmetric shape with first row (0, a, b).

    Returns (a, b).
    """
    if not is_antisymmetric(a):
        raise BadShapeException(f"{a.tolist()} is not antisymmetric")
    if a[1, 2]:
        raise BadShapeException(f"{a.tolist()} has a non-zero (1, 2) entry")
    first, second = int(a[0, 1]), int(a[0, 2])
    if first == 0 and second == 0:
        raise BadShapeException(f"{a.tolist()} is zero")
    return first, second


def radical_vector(a: F3Matrix) -> F3Vector:
    """The vector (0, b, -a) pairing to zero with everything."""
    first, second = validate_lemma_shape(a)
    v = vector(0, second, -first)
    if np.any((a @ np.array(v)) % P):
        raise BuildingInvariantException(f"{v} is not in the radical")
    return v


def radical_line(a: F3Matrix) -> F3Line:
    """The radical {x : Ax = 0} of a form whose radical is a line."""
    kernel = nullspace_mod3(a)
    if kernel.shape[1] != 1:
        raise DegenerateFormException(
            f"Radical of {a.tolist()} has dimension {kernel.shape[1]}"
        )
    return F3Line(as_vector(kernel[:, 0]))


def self_dual_planes_through(a: F3Matrix, line: F3Line) -> list[F3Plane]:
    """Planes P containing the line with P^perp = P."""
    result = []
    for plane in enumerate_planes():
        if not plane.contains(line.vector):
            continue
        try:
            if dual_subspace(a, plane) == plane:
                result.append(plane)
        except DegenerateFormException:
            continue
    return result


def self_dual_planes(a: F3Matrix) -> list[F3Plane]:
    """Self-dual planes of an antisymmetric form in the (0, a, b) shape."""
    return self_dual_planes_through(a, F3Line(radical_vector(a)))


def diagonalize_symmetric(a: F3Matrix) -> tuple[F3Matrix, F3Matrix]:
    """Find B with B^T A B = D diagonal, entries in {1, 2}.

    Gram-Schmidt over F3. Candidates are tried in the order e1, e2, e3
    followed by the remaining canonical vectors, so the identity form
    comes back untouched.
    """
    validate_symmetric_invertible(a)
    rest = canonical_vectors()
    candidates = np.vstack([IDENTITY, rest[rest.sum(axis=1) != 1]])
    norms = np.einsum("ij,jk,ik->i", candidates, a, candidates) % P
    chosen: list[int] = []
    for _ in range(3):
        picked = candidates[np.array(chosen, dtype=np.intp)]
        pairings = (candidates @ a @ picked.T) % P
        usable = (norms != 0) & ~pairings.any(axis=1)
        if not usable.any():
            raise SingularException(f"{a.tolist()} has no orthogonal basis")
        chosen.append(int(np.flatnonzero(usable)[0]))
    b = candidates[chosen].T.copy()
    return b, mod3(b.T @ a @ b)


def enumerate_symmetric_invertible() -> list[F3Matrix]:
    """All symmetric invertible 3x3 matrices over F3."""
    result = []
    for d0, d1, d2, x01, x02, x12 in itertools.product(range(P), repeat=6):
        a = matrix([[d0, x01, x02], [x01, d1, x12], [x02, x12, d2]])
        if is_invertible(a):
            result.append(a)
    return result


def enumerate_lemma_antisymmetric() -> list[F3Matrix]:
    """The 8 antisymmetric matrices with first row (0, a, b), (a, b) != 0."""
    return [
        lemma_antisymmetric(first, second)
        for first, second in itertools.product(range(P), repeat=2)
        if first or second
    ]


def lemma_antisymmetric(first: int, second: int) -> F3Matrix:
    return matrix(
        [
            [0, first, second],
            [-first, 0, 0],
            [-second, 0, 0],
        ]
    )
