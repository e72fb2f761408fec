"""The monomial group U3(Z[w]) and a gate word for each of its elements.

A monomial matrix is a permutation matrix whose non-zero entries are
units of Z[w]; there are 3! * 6^3 = 1296 of them and they are exactly
the unitaries with sde 0.
"""

import itertools
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from nxtools import logging

from chisynth.arithmetic.eisenstein import UNIT_INDEX, UNITS
from chisynth.config import chiconfig
from chisynth.exceptions import CoverageIncompleteException
from chisynth.matrices.gates import ALPHABET, GateWord, eval_word, gate
from chisynth.matrices.ring import RingMatrix

MONOMIAL_COUNT = 1296


@dataclass(frozen=True)
class MonomialMatrix:
    """Row i carries the unit UNITS[phases[i]] in column permutation[i]."""

    permutation: tuple[int, int, int]
    phases: tuple[int, int, int]

    def to_ring(self) -> RingMatrix:
        entries = [0] * 18
        for i in range(3):
            unit = UNITS[self.phases[i]]
            n = 2 * (3 * i + self.permutation[i])
            entries[n] = unit.a
            entries[n + 1] = unit.b
        return RingMatrix(entries, 0)

    @classmethod
    def from_ring(cls, m: RingMatrix) -> "MonomialMatrix":
        if not m.is_monomial():
            raise ValueError("Matrix is not monomial")
        permutation = []
        phases = []
        for i in range(3):
            for j in range(3):
                entry = m.entry(i, j)
                if entry:
                    permutation.append(j)
                    phases.append(UNIT_INDEX[entry])
        return cls(tuple(permutation), tuple(phases))  # type: ignore

    def __matmul__(self, other: "MonomialMatrix") -> "MonomialMatrix":
        return MonomialMatrix.from_ring(self.to_ring() @ other.to_ring())

    def inverse(self) -> "MonomialMatrix":
        return MonomialMatrix.from_ring(self.to_ring().adjoint())

    def scalar_class(self) -> "MonomialMatrix":
        """Representative of self modulo scalar units: first phase is 1."""
        inverse = UNITS[self.phases[0]].conj()
        scalar = RingMatrix.from_entries([inverse, 0, 0, 0, inverse, 0, 0, 0, inverse])
        return MonomialMatrix.from_ring(self.to_ring() @ scalar)


@lru_cache(maxsize=1)
def enumerate_monomials() -> tuple[MonomialMatrix, ...]:
    """Permutations in lexicographic order, then phase triples."""
    return tuple(
        MonomialMatrix(permutation, phases)  # type: ignore
        for permutation in itertools.permutations(range(3))
        for phases in itertools.product(range(len(UNITS)), repeat=3)
    )


def _search(bound: int) -> dict[RingMatrix, GateWord]:
    """Breadth-first search from I over right multiplication by H, S, R.

    States with l above the bound are pruned. Generators are tried in
    alphabet order, so the first word reaching a state is the shortest
    and, among those, the lexicographically least.
    """
    start = RingMatrix.identity()
    seen: dict[RingMatrix, GateWord] = {start: ()}
    found: dict[RingMatrix, GateWord] = {start: ()}
    generators = [(letter, gate(letter)) for letter in ALPHABET]
    queue = deque([start])
    while queue and len(found) < MONOMIAL_COUNT:
        state = queue.popleft()
        word = seen[state]
        for letter, generator in generators:
            successor = state @ generator
            if successor in seen or successor.l_value() > bound:
                continue
            successor_word = word + (letter,)
            seen[successor] = successor_word
            if successor.is_monomial():
                found[successor] = successor_word
            queue.append(successor)
    logging.debug(f"Word search with l <= {bound} visited {len(seen)} states")
    return found


@lru_cache(maxsize=1)
def monomial_word_table() -> dict[MonomialMatrix, GateWord]:
    """A verified gate word for every monomial matrix."""
    for bound in chiconfig.table_bounds:
        logging.info(f"Searching monomial words with l <= {bound}")
        found = _search(bound)
        if len(found) == MONOMIAL_COUNT:
            break
        logging.warning(f"Only {len(found)} monomials reached with l <= {bound}")
    else:
        raise CoverageIncompleteException(
            f"Monomial words missing at bounds {chiconfig.table_bounds}"
        )

    table: dict[MonomialMatrix, GateWord] = {}
    for matrix, word in found.items():
        if eval_word(word) != matrix:
            raise CoverageIncompleteException(f"Word {word} does not verify")
        table[MonomialMatrix.from_ring(matrix)] = word
    longest = max(len(word) for word in table.values())
    logging.goodnews(f"Monomial word table ready, longest word has {longest} letters")
    return table


def d_gate(a: int, b: int, c: int) -> RingMatrix:
    """X^2 S^a X S^b X S^c X^2, a diagonal matrix."""
    x = gate("X")
    s = gate("S")
    result = x @ x
    for exponent in (a, b, c):
        for _ in range(exponent % 3):
            result = result @ s
        result = result @ x
    return result @ x
