"""The chi-adic valuation on Q(w), residues and digit expansions.

chi = 1 - w generates the only prime above 3 and chi * conj(chi) = 3,
so v_pi(x) = v_3(norm(x)) and v_pi(3) = 2.
"""

import math
from functools import lru_cache

from chisynth.arithmetic.eisenstein import EisensteinInteger
from chisynth.arithmetic.field import CHI, CHI_INV, ZERO, FieldElement
from chisynth.exceptions import NegativeValuationException

# v_pi(0). math.inf compares greater than every int and absorbs addition.
VALUATION_INFINITY = math.inf

Valuation = int | float


def v3(n: int) -> int:
    """3-adic valuation of a non-zero integer."""
    if n == 0:
        raise ValueError("v3(0) is infinite")
    n = abs(n)
    count = 0
    while n % 3 == 0:
        n //= 3
        count += 1
    return count


def v_pi(x: FieldElement | EisensteinInteger | int) -> Valuation:
    """chi-adic valuation, computed from the norm."""
    if isinstance(x, int):
        return VALUATION_INFINITY if x == 0 else 2 * v3(x)
    if isinstance(x, EisensteinInteger):
        if not x:
            return VALUATION_INFINITY
        return v3(x.norm())
    a, b, d = x.parts
    if a == 0 and b == 0:
        return VALUATION_INFINITY
    return v3(a * a - a * b + b * b) - 2 * v3(d)


def v_pi_by_division(x: FieldElement | EisensteinInteger) -> Valuation:
    """Brute-force valuation: count exact divisions by chi.

    Slow reference implementation used to cross-check v_pi.
    """
    if isinstance(x, FieldElement):
        if x.is_zero():
            return VALUATION_INFINITY
        numerator = v_pi_by_division(x.numerator())
        # d is a rational integer, and 3 = -w^2 chi^2 contributes two per factor
        return numerator - 2 * v3(x.denominator)
    if not x:
        return VALUATION_INFINITY
    count = 0
    while x.divisible_by_chi():
        x = x.div_chi()
        count += 1
    return count


def residue_mod_chi(x: FieldElement) -> int:
    """Reduce an element of the valuation ring to F3.

    When v_pi(x) >= 0 the reduced denominator is prime to 3, so it can be
    inverted modulo 3; w reduces to 1.
    """
    valuation = v_pi(x)
    if valuation < 0:
        raise NegativeValuationException(f"v_pi({x}) = {valuation}")
    if valuation > 0:
        return 0
    a, b, d = x.parts
    return (a + b) * pow(d, -1, 3) % 3


@lru_cache(maxsize=256)
def chi_power(n: int) -> FieldElement:
    """chi^n for any integer n."""
    if n >= 0:
        return CHI**n
    return CHI_INV ** (-n)


def chi_digits(x: FieldElement, k: int) -> list[int]:
    """First k digits of the chi-adic expansion with digits in {0, 1, 2}."""
    digits: list[int] = []
    remainder = x
    for _ in range(k):
        digit = residue_mod_chi(remainder)
        digits.append(digit)
        if digit:
            remainder = remainder - digit
        remainder = remainder * CHI_INV
    return digits


def from_chi_digits(digits: list[int], shift: int = 0) -> FieldElement:
    """chi^shift * sum(d_i chi^i)."""
    total = ZERO
    for i, digit in enumerate(digits):
        if digit:
            total = total + chi_power(i + shift) * digit
    return total


def reduce_mod_chi_power(x: FieldElement, e: int) -> FieldElement:
    """Canonical representative of x modulo chi^e in the valuation ring.

    The representative is chi^m * sum(d_i chi^i) with m = v_pi(x) and the
    digits of x / chi^m, truncated below chi^e; zero when v_pi(x) >= e.
    """
    if v_pi(x) >= e:
        return ZERO
    unit, m = unit_part(x)
    return from_chi_digits(chi_digits(unit, e - m), m)


def unit_part(x: FieldElement) -> tuple[FieldElement, int]:
    """Split x = u * chi^m with v_pi(u) = 0."""
    m = int(v_pi(x))
    return x * chi_power(-m), m

