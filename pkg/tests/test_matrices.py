import random
from fractions import Fraction

import pytest

from chisynth.arithmetic import CHI, CHI_INV, OMEGA, FieldElement
from chisynth.exceptions import (
    DocumentParseException,
    NotInAException,
    SingularException,
)
from chisynth.matrices import (
    ALPHABET,
    Matrix3,
    RingMatrix,
    cartan_decompose,
    enumerate_monomials,
    eval_word,
    format_word,
    gate,
    gate_counts,
    invert_word,
    is_in_A,
    l_value,
    parse_word,
    sde,
    tilde_d,
)
from tests.common import random_invertible_matrix, seeded_words

MINUS_P = RingMatrix.from_entries([-1, 0, 0, 0, 0, -1, 0, -1, 0])


@pytest.mark.order(2)
def test_generators_are_unitary():
    for name in (*ALPHABET, "X"):
        assert gate(name).is_unitary()
    with pytest.raises(ValueError):
        gate("Q")  # type: ignore


def test_generator_orders():
    h = gate("H")
    assert h @ h == MINUS_P
    assert eval_word("HHHH").is_identity()
    assert eval_word("SSS").is_identity()
    assert eval_word("RR").is_identity()
    x = gate("X")
    assert (x @ x @ x).is_identity()
    assert not (x @ x).is_identity()


def test_ring_matrix_conversions():
    h = gate("H")
    assert h.k == 1
    assert RingMatrix.from_matrix(h.to_matrix()) == h
    assert h.to_matrix().is_unitary()
    assert h.adjoint() == eval_word("HHH")
    assert (-h) @ (-h) == MINUS_P


def test_l_and_sde():
    h = gate("H")
    assert l_value(h) == 2
    assert sde(h) == 1
    assert l_value(h.to_matrix()) == 2
    assert sde(RingMatrix.identity()) == 0
    assert l_value(gate("S")) == 0
    assert sde(Matrix3.diagonal(CHI, 1, 1)) == 0
    with pytest.raises(SingularException):
        sde(Matrix3.zero())
    with pytest.raises(SingularException):
        l_value(Matrix3.diagonal(1, 1, 0))


def test_l_properties():
    words = seeded_words(60, (3, 8, 20), seed=11)
    for a, b in zip(words, words[1:]):
        g = eval_word(a)
        h = eval_word(b)
        assert l_value(g @ h) <= l_value(g) + l_value(h)
        assert l_value(g.adjoint()) == l_value(g)
        assert l_value(g) == 2 * sde(g)


def test_membership_in_A():
    assert is_in_A(gate("H"))
    assert is_in_A(Matrix3.identity())
    assert is_in_A(Matrix3.diagonal(OMEGA, 1, -1))
    assert not is_in_A(Matrix3.diagonal(CHI, 1, 1))
    # g*g = diag(3, 1, 1/3) has a unit determinant but is not integral
    assert not is_in_A(Matrix3.diagonal(CHI, 1, CHI_INV))
    assert l_value(Matrix3.diagonal(CHI, 1, CHI_INV)) == 2
    assert not is_in_A(Matrix3.diagonal(FieldElement(Fraction(1, 3)), 1, 1))
    with pytest.raises(SingularException):
        is_in_A(Matrix3.diagonal(1, 0, 1))


def test_tilde_d():
    identity = RingMatrix.identity()
    h = gate("H")
    assert tilde_d(identity, identity) == 0
    assert tilde_d(identity, h) == 2
    assert tilde_d(h, identity) == 2
    k = Matrix3.from_rows([[1, 1, 0], [0, 1, 0], [0, 0, 1]])
    assert tilde_d(Matrix3.identity(), k) == 0
    with pytest.raises(NotInAException):
        tilde_d(identity, Matrix3.diagonal(CHI, 1, 1))


def test_tilde_d_is_a_metric_on_words():
    words = seeded_words(30, (2, 6, 12), seed=5)
    matrices = [eval_word(word) for word in words]
    for g, h, k in zip(matrices, matrices[1:], matrices[2:]):
        assert tilde_d(g, h) == tilde_d(h, g)
        assert tilde_d(g, h) <= tilde_d(g, k) + tilde_d(k, h)
        assert tilde_d(g, g) == 0


def test_cartan_of_h():
    triple = cartan_decompose(gate("H"))
    assert triple.exponents == (1, 0, -1)
    assert triple.recompose() == gate("H").to_matrix()
    assert triple.k.is_unimodular()
    assert triple.k_prime.is_unimodular()


def test_cartan_recomposition():
    rng = random.Random(7)
    for _ in range(500):
        g = random_invertible_matrix(rng)
        triple = cartan_decompose(g)
        assert triple.recompose() == g
        assert triple.k.is_unimodular()
        assert triple.k_prime.is_unimodular()
        l1, l2, l3 = triple.exponents
        assert l1 >= l2 >= l3
        assert -2 * l3 == l_value(g)


def test_cartan_of_unitaries():
    for word in seeded_words(20, (4, 15), seed=3):
        u = eval_word(word)
        n = sde(u)
        assert cartan_decompose(u).exponents == (n, 0, -n)


def test_cartan_rejects_singular():
    with pytest.raises(SingularException):
        cartan_decompose(Matrix3.diagonal(1, 1, 0))


def test_words():
    assert eval_word("").is_identity()
    assert eval_word(()).is_identity()
    assert eval_word("H") == gate("H")
    assert eval_word("HS") == gate("H") @ gate("S")
    assert invert_word(("H", "S", "R")) == ("R", "S", "S", "H", "H", "H")
    for word in seeded_words(20, (1, 7, 30), seed=9):
        assert (eval_word(invert_word(word)) @ eval_word(word)).is_identity()


def test_parse_and_format_words():
    assert parse_word("H S\n# comment\nR,H\n") == ("H", "S", "R", "H")
    assert parse_word("") == ()
    assert format_word(("H", "S")) == "HS"
    assert gate_counts("HHSR") == {"H": 2, "S": 1, "R": 1}
    with pytest.raises(DocumentParseException):
        parse_word("HX")


def test_l_and_cartan_are_monomial_invariant():
    monomials = enumerate_monomials()
    words = seeded_words(30, (5, 12), seed=13)
    rng = random.Random(14)
    for word in words:
        g = eval_word(word)
        k = rng.choice(monomials).to_ring()
        k_prime = rng.choice(monomials).to_ring()
        moved = k @ g @ k_prime
        assert l_value(moved) == l_value(g)
        assert cartan_decompose(moved).exponents == cartan_decompose(g).exponents


def test_cartan_of_diagonals():
    assert cartan_decompose(Matrix3.identity()).exponents == (0, 0, 0)
    triple = cartan_decompose(Matrix3.diagonal(1, CHI, CHI * CHI))
    assert triple.exponents == (2, 1, 0)
    assert triple.recompose() == Matrix3.diagonal(1, CHI, CHI * CHI)
