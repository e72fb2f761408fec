import random
from fractions import Fraction

from chisynth.arithmetic.eisenstein import EisensteinInteger
from chisynth.arithmetic.field import CHI_INV, FieldElement
from chisynth.arithmetic.valuation import chi_power
from chisynth.building.lattice import Lattice
from chisynth.matrices.gates import GateWord
from chisynth.matrices.matrix import Matrix3
from chisynth.matrices.ring import RingMatrix
from chisynth.synthesis.sampling import random_unitary, random_word


def fe(a: int | Fraction, b: int | Fraction = 0) -> FieldElement:
    return FieldElement(a, b)


def random_fraction(rng: random.Random, spread: int = 40) -> Fraction:
    return Fraction(rng.randint(-spread, spread), rng.randint(1, 18))


def random_field_element(rng: random.Random, nonzero: bool = True) -> FieldElement:
    while True:
        x = FieldElement(random_fraction(rng), random_fraction(rng))
        if not (nonzero and x.is_zero()):
            return x


def random_eisenstein(rng: random.Random, spread: int = 500) -> EisensteinInteger:
    while True:
        z = EisensteinInteger(
            rng.randint(-spread, spread),
            rng.randint(-spread, spread),
        )
        if z:
            return z


def random_invertible_matrix(rng: random.Random) -> Matrix3:
    while True:
        m = Matrix3(random_field_element(rng, nonzero=False) for _ in range(9))
        if m.is_invertible():
            return m


def seeded_words(count: int, lengths: tuple[int, ...], seed: int = 0) -> list[GateWord]:
    return [random_word(lengths[i % len(lengths)], seed + i) for i in range(count)]


def seeded_unitaries(count: int, length: int, seed: int = 0) -> list[RingMatrix]:
    return [random_unitary(length, seed + i)[1] for i in range(count)]


def alternating_lattice() -> Lattice:
    """O^3 + chi^-1 (1, 1, 1), an alternating neighbor of the origin."""
    return Lattice.from_generators(
        Lattice.standard().columns() + [[CHI_INV, CHI_INV, CHI_INV]]
    )


def random_lattice_bases(count: int, seed: int = 0) -> list[Matrix3]:
    """Random bases, every other one a generator product times chi powers."""
    rng = random.Random(seed)
    result = []
    for i in range(count):
        if i % 2 == 0:
            result.append(random_invertible_matrix(rng))
            continue
        u = random_unitary(rng.randint(1, 8), seed + i)[1].to_matrix()
        powers = [chi_power(rng.randint(-2, 2)) for _ in range(3)]
        result.append(u @ Matrix3.diagonal(*powers))
    return result
