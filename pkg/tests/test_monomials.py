import pytest

from chisynth.matrices import (
    MONOMIAL_COUNT,
    MonomialMatrix,
    RingMatrix,
    d_gate,
    enumerate_monomials,
    eval_word,
    gate,
    monomial_word_table,
)


@pytest.mark.order(3)
def test_enumerate_monomials():
    monomials = enumerate_monomials()
    assert len(monomials) == MONOMIAL_COUNT
    assert len(set(monomials)) == MONOMIAL_COUNT
    assert len({m.to_ring() for m in monomials}) == MONOMIAL_COUNT
    for m in monomials[::37]:
        ring = m.to_ring()
        assert ring.is_unitary()
        assert ring.is_monomial()
        assert ring.sde() == 0
        assert MonomialMatrix.from_ring(ring) == m


def test_monomial_group_is_closed():
    monomials = enumerate_monomials()
    members = set(monomials)
    for a in monomials[::101]:
        assert a.inverse() in members
        assert (a @ a.inverse()).to_ring().is_identity()
        for b in monomials[::53]:
            assert a @ b in members


def test_from_ring_rejects_non_monomials():
    with pytest.raises(ValueError):
        MonomialMatrix.from_ring(gate("H"))
    with pytest.raises(ValueError):
        MonomialMatrix.from_ring(RingMatrix.from_entries([1, 1, 0, 0, 1, 0, 0, 0, 1]))


def test_scalar_class():
    for m in enumerate_monomials()[::29]:
        representative = m.scalar_class()
        assert representative.phases[0] == 0
        assert representative.permutation == m.permutation
        assert representative.scalar_class() == representative


def test_word_table_covers_and_verifies():
    table = monomial_word_table()
    assert len(table) == MONOMIAL_COUNT
    assert set(table) == set(enumerate_monomials())
    for m, word in table.items():
        assert eval_word(word) == m.to_ring()


def test_word_table_shortest_words():
    table = monomial_word_table()
    assert table[MonomialMatrix.from_ring(RingMatrix.identity())] == ()
    assert table[MonomialMatrix.from_ring(gate("S"))] == ("S",)
    assert table[MonomialMatrix.from_ring(gate("R"))] == ("R",)
    x = MonomialMatrix.from_ring(gate("X"))
    assert eval_word(table[x]) == gate("X")


def test_d_gate():
    assert d_gate(0, 0, 0).is_identity()
    for a in range(3):
        for b in range(3):
            for c in range(3):
                d = d_gate(a, b, c)
                assert d.is_diagonal()
                assert d.is_monomial()
                assert d == d_gate(a + 3, b, c - 3)
