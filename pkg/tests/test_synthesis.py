from fractions import Fraction

import pytest

from chisynth.arithmetic import FieldElement
from chisynth.exceptions import (
    DescentStuckException,
    NotInRingException,
    NotUnitaryException,
)
from chisynth.matrices import (
    Matrix3,
    RingMatrix,
    enumerate_monomials,
    eval_word,
    gate,
)
from chisynth.synthesis import (
    CLAIMED_H_ORBIT,
    SynthesisResult,
    descent_candidates,
    descent_step,
    exact_synthesize,
    orbit_stabilizer_of_H_vertex,
    orbit_stabilizer_of_origin,
    random_unitary,
    random_word,
    verify,
    word_length_fit,
)
from tests.common import seeded_unitaries, seeded_words


@pytest.mark.order(6)
def test_descent_candidates():
    candidates = descent_candidates()
    assert len(candidates) == 2 * 1296
    assert candidates[0].exponent == 1
    assert candidates[0].matrix == gate("H")
    assert candidates[1296].exponent == 3
    for candidate in candidates[::97]:
        inverse = eval_word(candidate.inverse_word)
        assert (inverse @ candidate.matrix).is_identity()


def test_synthesize_identity():
    result = exact_synthesize(RingMatrix.identity())
    assert result.word == []
    assert result.steps == 0
    assert result.initial_l == 0
    assert result.sde == 0


def test_synthesize_h():
    result = exact_synthesize(gate("H"))
    assert result.steps == 1
    assert result.decrements == [2]
    assert result.initial_l == 2
    assert result.sde == 1
    assert eval_word(result.word) == gate("H")
    assert exact_synthesize(gate("H").to_matrix()).word == result.word


def test_synthesize_monomials():
    for m in enumerate_monomials()[::43]:
        result = exact_synthesize(m.to_ring())
        assert result.steps == 0
        assert verify(result.gate_word, m.to_ring())


def test_synthesize_random_words():
    for word in seeded_words(100, (1, 10, 50, 200), seed=1000):
        u = eval_word(word)
        result = exact_synthesize(u)
        assert eval_word(result.word) == u
        assert all(d > 0 for d in result.decrements)
        assert sum(result.decrements) == result.initial_l
        assert result.initial_l == 2 * result.sde
        assert result.steps == len(result.decrements) <= result.sde
        assert sum(result.gate_counts.values()) == len(result.word)


def test_synthesis_is_deterministic():
    for u in seeded_unitaries(5, 30, seed=40):
        assert exact_synthesize(u).word == exact_synthesize(u).word


def test_synthesis_rejects_bad_input():
    with pytest.raises(NotUnitaryException):
        exact_synthesize(RingMatrix.from_entries([1, 1, 0, 0, 1, 0, 0, 0, 1]))
    with pytest.raises(NotInRingException):
        exact_synthesize(Matrix3.diagonal(FieldElement(Fraction(1, 2)), 1, 1))


def test_descent_step():
    u = next(u for u in seeded_unitaries(20, 12, seed=7) if u.sde() > 0)
    candidate, after = descent_step(u)
    assert after.l_value() < u.l_value()
    assert candidate.matrix @ u == after
    with pytest.raises(DescentStuckException) as info:
        descent_step(RingMatrix.identity())
    assert info.value.matrix == RingMatrix.identity()
    assert info.value.exit_code == 4


def test_verify():
    u = eval_word("HSR")
    assert verify(("H", "S", "R"), u)
    assert verify(["H", "S", "R"], u.to_matrix())
    assert not verify(("H",), u)
    assert not verify((), Matrix3.diagonal(FieldElement(Fraction(1, 2)), 1, 1))


def test_result_document():
    result = exact_synthesize(gate("H"))
    data = result.dict(by_alias=True)
    assert data["initialL"] == 2
    assert sum(data["gateCounts"].values()) == len(result.word)
    assert SynthesisResult(**data) == result


def test_random_unitaries_are_seeded():
    assert random_word(0, 5) == ()
    assert random_word(12, 5) == random_word(12, 5)
    assert random_unitary(20, 3) == random_unitary(20, 3)
    assert random_word(40, 1) != random_word(40, 2)
    word, u = random_unitary(15, 9)
    assert len(word) == 15
    assert eval_word(word) == u
    with pytest.raises(ValueError):
        random_word(-1, 0)


def test_orbit_of_h_vertex():
    report = orbit_stabilizer_of_H_vertex()
    assert (report.orbit_size, report.stabilizer_order) == CLAIMED_H_ORBIT
    assert report.product == 1296


def test_orbit_of_origin():
    report = orbit_stabilizer_of_origin()
    assert report.orbit_size == 1
    assert report.stabilizer_order == 1296


def test_word_length_fit():
    words = seeded_words(12, (2, 10, 30), seed=60)
    results = [exact_synthesize(eval_word(w)) for w in words]
    slope, _ = word_length_fit(results)
    assert slope > 0
    single = exact_synthesize(gate("H"))
    assert word_length_fit([single]) == (0.0, float(len(single.word)))
    with pytest.raises(ValueError):
        word_length_fit([])
