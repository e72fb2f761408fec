"""Exact synthesis by descent in the building.

Starting from U, each step multiplies on the left by a candidate
c = H^e Q (e in {1, 3}, Q monomial) that strictly lowers l. Once l is 0
the remainder is monomial and is looked up in the word table. Since

    U = c1^-1 c2^-1 ... cm^-1 M,

the emitted word is the words of c1^-1, ..., cm^-1 followed by the word
of M, read left to right.
"""

import statistics
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from nxtools import logging
from pydantic import Field

from chisynth.exceptions import (
    DescentStuckException,
    NotInRingException,
    NotUnitaryException,
    SynthesisVerificationException,
)
from chisynth.matrices.gates import GateWord, eval_word, gate, gate_counts
from chisynth.matrices.matrix import Matrix3
from chisynth.matrices.monomials import (
    MonomialMatrix,
    enumerate_monomials,
    monomial_word_table,
)
from chisynth.matrices.ring import RingMatrix
from chisynth.types import ChisynthModel, GateLetter

H_EXPONENTS = (1, 3)


class SynthesisResult(ChisynthModel):
    word: list[GateLetter] = Field(default_factory=list)
    steps: int = Field(0, description="Number of descent steps")
    initial_l: int = Field(0, description="l of the input matrix")
    sde: int = Field(0, description="sde of the input matrix")
    gate_counts: dict[str, int] = Field(default_factory=dict)
    decrements: list[int] = Field(
        default_factory=list,
        description="Drop of l at each descent step",
    )

    @property
    def gate_word(self) -> GateWord:
        return tuple(self.word)


@dataclass(frozen=True)
class DescentCandidate:
    exponent: int
    monomial: MonomialMatrix
    scalar_class: MonomialMatrix
    matrix: RingMatrix
    inverse_word: GateWord


@lru_cache(maxsize=1)
def descent_candidates() -> tuple[DescentCandidate, ...]:
    """H^e Q for e in (1, 3) and every monomial Q, in tie-break order."""
    table = monomial_word_table()
    h = gate("H")
    result: list[DescentCandidate] = []
    for exponent in H_EXPONENTS:
        power = RingMatrix.identity()
        for _ in range(exponent):
            power = power @ h
        # (H^e Q)^-1 = Q^-1 H^(4 - e)
        tail: GateWord = ("H",) * (4 - exponent)
        for monomial in enumerate_monomials():
            result.append(
                DescentCandidate(
                    exponent=exponent,
                    monomial=monomial,
                    scalar_class=monomial.scalar_class(),
                    matrix=power @ monomial.to_ring(),
                    inverse_word=table[monomial.inverse()] + tail,
                )
            )
    return tuple(result)


def _as_unitary(u: RingMatrix | Matrix3) -> RingMatrix:
    if isinstance(u, Matrix3):
        if not u.in_ring():
            raise NotInRingException("Entries must lie in Z[1/chi]")
        u = RingMatrix.from_matrix(u)
    if not u.is_unitary():
        raise NotUnitaryException("U U* is not the identity")
    return u


def descent_step(current: RingMatrix) -> tuple[DescentCandidate, RingMatrix]:
    """The first candidate of least resulting l, provided l drops.

    A scalar unit factor does not change l, so l is evaluated once per
    (exponent, scalar class) pair.
    """
    current_l = current.l_value()
    levels: dict[tuple[int, MonomialMatrix], int] = {}
    best: DescentCandidate | None = None
    best_l = current_l
    for candidate in descent_candidates():
        key = (candidate.exponent, candidate.scalar_class)
        level = levels.get(key)
        if level is None:
            level = (candidate.matrix @ current).l_value()
            levels[key] = level
        if level < best_l:
            best, best_l = candidate, level
    if best is None:
        raise DescentStuckException(
            current,
            f"No candidate lowers l = {current_l}",
            log=True,
        )
    return best, best.matrix @ current


def exact_synthesize(u: RingMatrix | Matrix3) -> SynthesisResult:
    """A gate word over H, S, R evaluating exactly to u."""
    target = _as_unitary(u)
    current = target
    initial_l = current.l_value()
    word: list[GateLetter] = []
    decrements: list[int] = []

    level = initial_l
    while level > 0:
        candidate, current = descent_step(current)
        after = current.l_value()
        decrements.append(level - after)
        word.extend(candidate.inverse_word)
        logging.debug(f"Descent step {len(decrements)}: l {level} -> {after}")
        level = after

    word.extend(monomial_word_table()[MonomialMatrix.from_ring(current)])

    if eval_word(word) != target:
        raise SynthesisVerificationException(log=True)

    if decrements:
        distribution = dict(sorted(Counter(decrements).items()))
        logging.debug(f"l decrements per step: {distribution}")

    return SynthesisResult(
        word=word,
        steps=len(decrements),
        initial_l=initial_l,
        sde=target.sde(),
        gate_counts=gate_counts(word),
        decrements=decrements,
    )


def verify(word: GateWord | list[GateLetter], u: RingMatrix | Matrix3) -> bool:
    """Exact equality of eval_word(word) and u."""
    if isinstance(u, Matrix3):
        if not u.in_ring():
            return False
        u = RingMatrix.from_matrix(u)
    return eval_word(word) == u


def word_length_fit(results: list[SynthesisResult]) -> tuple[float, float]:
    """Least-squares (slope, intercept) of word length against sde."""
    if not results:
        raise ValueError("No results to fit")
    sdes = [r.sde for r in results]
    lengths = [len(r.word) for r in results]
    try:
        slope, intercept = statistics.linear_regression(sdes, lengths)
    except statistics.StatisticsError:
        return 0.0, float(statistics.fmean(lengths))
    return slope, intercept
