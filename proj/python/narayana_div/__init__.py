"""Prime divisibility and p-adic orders of Narayana numbers."""

from ._core import (
    CarryTrace,
    DivisibilityVerdict,
    RowImage,
    ValuationReport,
    binomial_exact,
    binomial_valuation_by_addition,
    binomial_valuation_by_indices,
    build_row,
    catalan_exact,
    check_corollary_div,
    check_corollary_notdiv,
    decompose,
    increment,
    is_prime,
    narayana_exact,
    narayana_valuation,
    prime_divides_narayana,
    reconstruct,
    render,
    run_cli,
    valuation,
    verify,
)

__all__ = [
    "CarryTrace",
    "DivisibilityVerdict",
    "RowImage",
    "ValuationReport",
    "binomial_exact",
    "binomial_valuation_by_addition",
    "binomial_valuation_by_indices",
    "build_row",
    "catalan_exact",
    "check_corollary_div",
    "check_corollary_notdiv",
    "decompose",
    "increment",
    "is_prime",
    "narayana_exact",
    "narayana_valuation",
    "prime_divides_narayana",
    "reconstruct",
    "render",
    "run_cli",
    "valuation",
    "verify",
]
