"""The length function l(g) and the metric it induces on A / GL3(O).

A is the set of invertible g with g*g in GL3 over the valuation ring;
its right cosets are exactly the self-dual lattices g O^3.
"""

from fractions import Fraction

from chisynth.arithmetic.valuation import v_pi
from chisynth.exceptions import NotInAException, SingularException
from chisynth.matrices.matrix import Matrix3
from chisynth.matrices.ring import RingMatrix, as_matrix

MatrixLike = Matrix3 | RingMatrix


def l_value(g: MatrixLike) -> int:
    """-2 times the least valuation among the entries of g."""
    if isinstance(g, RingMatrix):
        return g.l_value()
    if not g.is_invertible():
        raise SingularException("l is defined for invertible matrices only")
    return -2 * int(g.min_valuation())


def is_in_A(g: MatrixLike) -> bool:
    """True iff g*g is integral with a unit determinant."""
    if isinstance(g, RingMatrix) and g.is_unitary():
        return True
    m = as_matrix(g)
    if not m.is_invertible():
        raise SingularException("Membership in A needs an invertible matrix")
    gram = m.adjoint() @ m
    if not gram.is_integral():
        return False
    return v_pi(gram.det()) == 0


def tilde_d(g: MatrixLike, h: MatrixLike) -> Fraction:
    """(l(g^-1 h) + l(h^-1 g)) / 2 for g, h in A."""
    for m in (g, h):
        if not is_in_A(m):
            raise NotInAException(f"{m!r} is not in A")
    unitary = [isinstance(m, RingMatrix) and m.is_unitary() for m in (g, h)]
    if all(unitary):
        # h^-1 g is then the adjoint of g^-1 h
        assert isinstance(g, RingMatrix) and isinstance(h, RingMatrix)
        forward = g.adjoint() @ h
        return Fraction(forward.l_value() + forward.adjoint().l_value(), 2)
    mg = as_matrix(g)
    mh = as_matrix(h)
    return Fraction(
        l_value(mg.inverse() @ mh) + l_value(mh.inverse() @ mg),
        2,
    )


def sde(u: MatrixLike) -> int:
    """Smallest denominator exponent: max(-v_pi(entry)), floored at 0."""
    if isinstance(u, RingMatrix):
        return u.sde()
    if not u.is_invertible():
        raise SingularException("sde is defined for invertible matrices only")
    return max(0, -int(u.min_valuation()))
