from chisynth.arithmetic.eisenstein import UNITS, EisensteinInteger
from chisynth.arithmetic.field import (
    CHI,
    CHI_BAR,
    CHI_INV,
    OMEGA,
    OMEGA2,
    ONE,
    ZERO,
    FieldElement,
    format_field_element,
    parse_field_element,
)
from chisynth.arithmetic.ring import (
    chi_fraction,
    format_ring_element,
    in_ring,
    parse_ring_element,
)
from chisynth.arithmetic.valuation import (
    VALUATION_INFINITY,
    Valuation,
    chi_digits,
    chi_power,
    reduce_mod_chi_power,
    residue_mod_chi,
    v_pi,
    v_pi_by_division,
)

__all__ = [
    "CHI",
    "CHI_BAR",
    "CHI_INV",
    "OMEGA",
    "OMEGA2",
    "ONE",
    "UNITS",
    "VALUATION_INFINITY",
    "ZERO",
    "EisensteinInteger",
    "FieldElement",
    "Valuation",
    "chi_digits",
    "chi_fraction",
    "chi_power",
    "format_field_element",
    "format_ring_element",
    "in_ring",
    "parse_field_element",
    "parse_ring_element",
    "reduce_mod_chi_power",
    "residue_mod_chi",
    "v_pi",
    "v_pi_by_division",
]
