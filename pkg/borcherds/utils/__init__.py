"""
Utility modules for integer arithmetic.

This package contains the small number-theoretic helpers used by the
series, form and congruence packages.
"""

from .arith import (
    divisor_power_sums,
    factorize,
    inverse_mod,
    is_prime,
    is_square,
    is_squarefree,
    lcm_of,
    p_adic_valuation,
    squarefree_decomposition,
    squarefree_part,
)

__all__ = [
    "divisor_power_sums",
    "factorize",
    "inverse_mod",
    "is_prime",
    "is_square",
    "is_squarefree",
    "lcm_of",
    "p_adic_valuation",
    "squarefree_decomposition",
    "squarefree_part",
]
