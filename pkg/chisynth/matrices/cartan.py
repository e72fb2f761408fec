"""Cartan decomposition g = k diag(chi^l1, chi^l2, chi^l3) k'.

k and k' lie in GL3 over the valuation ring and l1 >= l2 >= l3. The
elimination mirrors a Smith normal form over a discrete valuation ring:
the pivot is always an entry of least valuation, so every multiplier
used to clear its row and column is integral.
"""

from dataclasses import dataclass

from chisynth.arithmetic.field import FieldElement
from chisynth.arithmetic.valuation import chi_power, v_pi
from chisynth.exceptions import SingularException
from chisynth.matrices.matrix import Matrix3
from chisynth.matrices.ring import RingMatrix, as_matrix

Rows = list[list[FieldElement]]


@dataclass(frozen=True)
class CartanTriple:
    k: Matrix3
    exponents: tuple[int, int, int]
    k_prime: Matrix3

    def diagonal(self) -> Matrix3:
        return Matrix3.diagonal(*(chi_power(e) for e in self.exponents))

    def recompose(self) -> Matrix3:
        return self.k @ self.diagonal() @ self.k_prime


def _swap_rows(rows: Rows, a: int, b: int) -> None:
    rows[a], rows[b] = rows[b], rows[a]


def _swap_columns(rows: Rows, a: int, b: int) -> None:
    for row in rows:
        row[a], row[b] = row[b], row[a]


def _find_pivot(m: Rows, t: int) -> tuple[int, int]:
    best: tuple[float, int, int] | None = None
    for i in range(t, 3):
        for j in range(t, 3):
            if m[i][j].is_zero():
                continue
            candidate = (v_pi(m[i][j]), i, j)
            if best is None or candidate < best:
                best = candidate
    if best is None:
        raise SingularException("Matrix is not invertible")
    return best[1], best[2]


def cartan_decompose(g: Matrix3 | RingMatrix) -> CartanTriple:
    """Decompose an invertible matrix.

    Pivot ties are broken by the smallest (row, column) pair.
    """
    m = as_matrix(g).rows()
    left = Matrix3.identity().rows()
    right = Matrix3.identity().rows()
    exponents: list[int] = []

    for t in range(3):
        i, j = _find_pivot(m, t)
        _swap_rows(m, t, i)
        _swap_rows(left, t, i)
        _swap_columns(m, t, j)
        _swap_columns(right, t, j)

        pivot = m[t][t]
        pivot_inverse = pivot.inverse()

        for i in range(t + 1, 3):
            c = m[i][t] * pivot_inverse
            if c.is_zero():
                continue
            m[i] = [x - c * y for x, y in zip(m[i], m[t])]
            left[i] = [x - c * y for x, y in zip(left[i], left[t])]

        for j in range(t + 1, 3):
            c = m[t][j] * pivot_inverse
            if c.is_zero():
                continue
            for row in m:
                row[j] = row[j] - c * row[t]
            for row in right:
                row[j] = row[j] - c * row[t]

        valuation = int(v_pi(pivot))
        # divide row t by the unit part of the pivot
        scale = chi_power(valuation) * pivot_inverse
        m[t] = [x * scale for x in m[t]]
        left[t] = [x * scale for x in left[t]]
        exponents.append(valuation)

    # D = left * g * right; reorder the diagonal descending
    order = sorted(range(3), key=lambda t: -exponents[t])
    q = Matrix3.from_rows(
        [[1 if c == order[r] else 0 for c in range(3)] for r in range(3)]
    )
    left_inverse = Matrix3.from_rows(left).inverse()
    right_inverse = Matrix3.from_rows(right).inverse()
    return CartanTriple(
        k=left_inverse @ q.transpose(),
        exponents=(
            exponents[order[0]],
            exponents[order[1]],
            exponents[order[2]],
        ),
        k_prime=q @ right_inverse,
    )
