from chisynth.matrices.cartan import CartanTriple, cartan_decompose
from chisynth.matrices.gates import (
    ALPHABET,
    GateWord,
    eval_word,
    format_word,
    gate,
    gate_counts,
    invert_word,
    parse_word,
)
from chisynth.matrices.matrix import Matrix3
from chisynth.matrices.metric import is_in_A, l_value, sde, tilde_d
from chisynth.matrices.monomials import (
    MONOMIAL_COUNT,
    MonomialMatrix,
    d_gate,
    enumerate_monomials,
    monomial_word_table,
)
from chisynth.matrices.ring import RingMatrix, UnitaryMatrix, as_matrix

__all__ = [
    "ALPHABET",
    "MONOMIAL_COUNT",
    "CartanTriple",
    "GateWord",
    "Matrix3",
    "MonomialMatrix",
    "RingMatrix",
    "UnitaryMatrix",
    "as_matrix",
    "cartan_decompose",
    "d_gate",
    "enumerate_monomials",
    "eval_word",
    "format_word",
    "gate",
    "gate_counts",
    "invert_word",
    "is_in_A",
    "l_value",
    "monomial_word_table",
    "parse_word",
    "sde",
    "tilde_d",
]
