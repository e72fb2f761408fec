"""Elements of Z[1/chi] written as z / chi^k.

This is the entry grammar of matrix documents and lattice keys:
"(p+qw)" or "(p+qw)/chi^k" with integers p, q and k > 0.
"""

import re

from chisynth.arithmetic.eisenstein import EisensteinInteger
from chisynth.arithmetic.field import FieldElement
from chisynth.arithmetic.valuation import chi_power, v_pi
from chisynth.exceptions import DocumentParseException, NotInRingException

RING_ELEMENT_REGEX = re.compile(
    r"^\(\s*(?P<p>-?\d+)\s*(?P<sign>[+-])\s*(?P<q>-?\d+)\s*w\s*\)"
    r"(?:\s*/\s*chi\^(?P<k>\d+))?$"
)


def is_power_of_three(n: int) -> bool:
    while n % 3 == 0:
        n //= 3
    return n == 1


def in_ring(x: FieldElement) -> bool:
    """True when the only denominators are powers of 3."""
    return is_power_of_three(x.denominator)


def chi_fraction(x: FieldElement) -> tuple[EisensteinInteger, int]:
    """Write x = z / chi^k with z in Z[w] and the least k >= 0."""
    if not in_ring(x):
        raise NotInRingException(f"{x} has a denominator prime to 3")
    if x.is_zero():
        return EisensteinInteger(0, 0), 0
    k = max(0, -int(v_pi(x)))
    return (x * chi_power(k)).to_eisenstein(), k


def format_ring_element(x: FieldElement) -> str:
    z, k = chi_fraction(x)
    if k == 0:
        return f"({z.a}+{z.b}w)"
    return f"({z.a}+{z.b}w)/chi^{k}"


def parse_ring_element(text: str) -> FieldElement:
    match = RING_ELEMENT_REGEX.match(text.strip())
    if match is None:
        raise DocumentParseException(f"Unable to parse ring element '{text}'")
    q = int(match["q"])
    if match["sign"] == "-":
        q = -q
    z = FieldElement.from_parts(int(match["p"]), q, 1)
    k = int(match["k"] or 0)
    return z * chi_power(-k)
