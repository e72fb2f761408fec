import random

from chisynth.matrices.gates import ALPHABET, GateWord, eval_word
from chisynth.matrices.ring import RingMatrix


def random_word(length: int, seed: int) -> GateWord:
    """Uniform word over H, S, R; identical for identical arguments."""
    if length < 0:
        raise ValueError("Word length must not be negative")
    rng = random.Random(seed)
    return tuple(rng.choice(ALPHABET) for _ in range(length))


def random_unitary(length: int, seed: int) -> tuple[GateWord, RingMatrix]:
    word = random_word(length, seed)
    return word, eval_word(word)
