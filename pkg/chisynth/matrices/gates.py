"""The qutrit Clifford+R generators and words over them.

H = (i / sqrt 3) F with F the 3x3 Fourier matrix, and i / sqrt 3 = -w^2 / chi,
so H is stored as (-w^2 F) / chi. S = diag(1, w, 1), R = diag(1, 1, -1) and
X is the cyclic shift |j> -> |j + 1>.
"""

from functools import lru_cache
from typing import Iterable, Sequence, cast

from chisynth.exceptions import DocumentParseException
from chisynth.matrices.ring import RingMatrix
from chisynth.types import GateLetter, GateName

GateWord = tuple[GateLetter, ...]

ALPHABET: tuple[GateLetter, ...] = ("H", "S", "R")

INVERSE_LETTERS: dict[GateLetter, GateWord] = {
    "H": ("H", "H", "H"),
    "S": ("S", "S"),
    "R": ("R",),
}

GATE_ENTRIES: dict[GateName, tuple[list[int], int]] = {
    # -w^2 = 1 + w, (1 + w)w = -1, (1 + w)w^2 = -w
    "H": (
        [1, 1, 1, 1, 1, 1]
        + [1, 1, -1, 0, 0, -1]
        + [1, 1, 0, -1, -1, 0],
        1,
    ),
    "S": ([1, 0, 0, 0, 0, 0] + [0, 0, 0, 1, 0, 0] + [0, 0, 0, 0, 1, 0], 0),
    "R": ([1, 0, 0, 0, 0, 0] + [0, 0, 1, 0, 0, 0] + [0, 0, 0, 0, -1, 0], 0),
    "X": ([0, 0, 0, 0, 1, 0] + [1, 0, 0, 0, 0, 0] + [0, 0, 1, 0, 0, 0], 0),
}


@lru_cache(maxsize=8)
def gate(name: GateName) -> RingMatrix:
    """Exact matrix of a generator."""
    if name not in GATE_ENTRIES:
        raise ValueError(f"Unknown gate {name}")
    entries, k = GATE_ENTRIES[name]
    return RingMatrix(entries, k)


def eval_word(word: Iterable[str]) -> RingMatrix:
    """Left-to-right product of the generators; the empty word gives I."""
    result = RingMatrix.identity()
    for letter in word:
        result = result @ gate(cast(GateName, letter))
    return result


def invert_word(word: Sequence[GateLetter]) -> GateWord:
    """A positive word for the inverse, using H^-1 = H^3, S^-1 = S^2, R^-1 = R."""
    result: list[GateLetter] = []
    for letter in reversed(word):
        result.extend(INVERSE_LETTERS[letter])
    return tuple(result)


def parse_word(text: str) -> GateWord:
    """Read letters from text, ignoring whitespace and '#' comment lines."""
    letters: list[GateLetter] = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        for char in line:
            if char.isspace() or char == ",":
                continue
            if char not in ALPHABET:
                raise DocumentParseException(f"Unexpected gate letter '{char}'")
            letters.append(cast(GateLetter, char))
    return tuple(letters)


def format_word(word: Sequence[str]) -> str:
    return "".join(word)


def gate_counts(word: Sequence[str]) -> dict[str, int]:
    return {letter: sum(1 for x in word if x == letter) for letter in ALPHABET}
