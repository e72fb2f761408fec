import random

import pytest

from chisynth.arithmetic import CHI, OMEGA
from chisynth.building import (
    AlternatingVertex,
    Lattice,
    PureVertex,
    classify_vertex,
    hermite_form,
    is_alternating_lattice,
    self_dualize,
    vertex_from_key,
)
from chisynth.exceptions import (
    DocumentParseException,
    NotAlternatingException,
    NotPiEquivalentToDualException,
    SingularException,
)
from chisynth.matrices import Matrix3, eval_word
from tests.common import (
    alternating_lattice,
    random_invertible_matrix,
    random_lattice_bases,
    seeded_words,
)

STANDARD_KEY = ",".join(
    "(1+0w)" if i == j else "(0+0w)" for i in range(3) for j in range(3)
)


@pytest.mark.order(4)
def test_standard_lattice():
    standard = Lattice.standard()
    assert standard.key == STANDARD_KEY
    assert standard.exponents == (0, 0, 0)
    assert standard.is_self_dual()
    assert standard.dual() == standard


def test_hermite_form_is_canonical():
    rng = random.Random(21)
    unimodular = [
        Matrix3.from_rows([[1, 1, 0], [0, 1, 0], [0, 0, 1]]),
        Matrix3.diagonal(OMEGA, -1, 1),
        Matrix3.from_rows([[0, 1, 0], [0, 0, 1], [1, 0, 0]]),
    ]
    for _ in range(20):
        m = random_invertible_matrix(rng)
        lattice = Lattice(m)
        for k in unimodular:
            assert Lattice(m @ k) == lattice
            assert Lattice(m @ k).key == lattice.key
        basis, exponents = hermite_form(m.columns())
        assert exponents == lattice.exponents
        assert basis == lattice.basis
        assert all(basis[i, j].is_zero() for i in range(3) for j in range(i + 1, 3))


def test_hermite_form_exponents():
    lattice = Lattice(Matrix3.diagonal(CHI, 1, CHI * CHI))
    assert lattice.exponents == (1, 0, 2)
    assert lattice.det_valuation == 3
    with pytest.raises(SingularException):
        Lattice(Matrix3.diagonal(1, 1, 0))


def test_keys_round_trip():
    rng = random.Random(22)
    for _ in range(10):
        lattice = Lattice(random_invertible_matrix(rng))
        assert lattice.basis.in_ring()
        assert Lattice.from_key(lattice.key) == lattice
    for word in seeded_words(10, (3, 9), seed=1):
        lattice = Lattice(eval_word(word))
        assert Lattice.from_key(lattice.key) == lattice
    with pytest.raises(DocumentParseException):
        Lattice.from_key("(1+0w),(0+0w)")


def test_dual_is_an_involution():
    for basis in random_lattice_bases(200, seed=23):
        lattice = Lattice(basis)
        assert lattice.dual().dual() == lattice
        assert lattice.dual().det_valuation == -lattice.det_valuation


def test_dual_reverses_inclusion():
    for basis in random_lattice_bases(200, seed=24):
        big = Lattice(basis)
        small = big.scaled(1)
        assert big.contains(small)
        assert small < big
        assert small.dual().contains(big.dual())
        assert not big.dual().contains(small.dual())


def test_scaling_and_sums():
    standard = Lattice.standard()
    assert standard.scaled(1) < standard
    assert standard <= standard
    assert not standard < standard
    assert standard.plus(standard.scaled(-1)) == standard.scaled(-1)
    assert standard.scaled(3).same_class(standard)
    assert standard.scaled(-2).normalized() == standard
    assert not standard.same_class(alternating_lattice())


def test_self_dualize():
    standard = Lattice.standard()
    for n in range(-3, 4):
        assert self_dualize(standard.scaled(n)) == standard
    with pytest.raises(NotPiEquivalentToDualException):
        self_dualize(Lattice(Matrix3.diagonal(CHI, 1, 1)))


def test_gram_check_matches_definition():
    lattices = [Lattice(eval_word(w)) for w in seeded_words(15, (2, 6, 12), seed=4)]
    lattices += [
        Lattice(Matrix3.diagonal(CHI, 1, 1)),
        Lattice.standard().scaled(1),
        alternating_lattice(),
    ]
    lattices += [Lattice(basis) for basis in random_lattice_bases(200, seed=25)]
    for lattice in lattices:
        assert lattice.is_self_dual() == lattice.is_self_dual_by_definition()
    assert all(lattice.is_self_dual() for lattice in lattices[:15])


def test_unitaries_preserve_self_duality():
    for word in seeded_words(10, (5, 20), seed=8):
        u = eval_word(word)
        assert Lattice.standard().transformed(u) == Lattice(u)
        assert Lattice(u).is_self_dual()


def test_alternating_lattice():
    lattice = alternating_lattice()
    dual = lattice.dual()
    assert is_alternating_lattice(lattice)
    assert lattice.det_valuation == -1
    assert lattice.contains(dual)
    assert dual.contains(lattice.scaled(1))
    assert lattice.contains(Lattice.standard())
    assert Lattice.standard().contains(dual)
    assert not is_alternating_lattice(Lattice.standard())
    assert not is_alternating_lattice(dual)


def test_classify_vertex():
    standard = Lattice.standard()
    assert classify_vertex(standard) == PureVertex(standard)
    assert classify_vertex(standard.scaled(1)) == PureVertex(standard)
    assert classify_vertex(standard.scaled(-3)) == PureVertex(standard)
    lattice = alternating_lattice()
    for member in (lattice, lattice.scaled(2), lattice.scaled(-1), lattice.dual()):
        vertex = classify_vertex(member)
        assert isinstance(vertex, AlternatingVertex)
        assert vertex.lattice == lattice
        assert vertex.key == lattice.scaled(1).key
        assert Lattice.from_key(vertex.key).det_valuation == 2
        assert vertex_from_key(vertex.key) == vertex
    assert vertex_from_key(standard.key) == PureVertex(standard)
    with pytest.raises(DocumentParseException):
        vertex_from_key(lattice.key)
    with pytest.raises(DocumentParseException):
        vertex_from_key(standard.scaled(1).key)
    with pytest.raises(NotAlternatingException):
        classify_vertex(Lattice(Matrix3.diagonal(CHI, 1, 1)))
