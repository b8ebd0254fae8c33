#!/usr/bin/env python3
"""
Set-size thresholds, weights and Sturm bounds for congruences between
logarithmic derivatives.
"""

import math
from fractions import Fraction
from typing import Iterable, Optional, Union

from ..errors import PreconditionError
from ..utils.arith import factorize, is_prime


def index_gamma0(N: int) -> int:
    """[SL2(Z) : Gamma0(N)] = N prod_{p | N} (1 + 1/p)."""
    if N < 1:
        raise PreconditionError(f"level must be positive, got {N}")
    index = N
    for p in factorize(N):
        index = index // p * (p + 1)
    return index


def class_number_upper_bound(disc_abs: int) -> float:
    """h(-d) <= sqrt(d) (log d + 2) / pi."""
    if disc_abs < 3:
        raise PreconditionError(f"bound holds for |disc| >= 3, got {disc_abs}")
    return math.sqrt(disc_abs) * (math.log(disc_abs) + 2) / math.pi


def _check_prime_power(p: int, j: int) -> None:
    if not is_prime(p):
        raise PreconditionError(f"{p} is not prime")
    if j < 1:
        raise PreconditionError(f"exponent must be positive, got {j}")


def congruence_weight(p: int, j: int, class_number_sum: int, N: int = 1) -> int:
    """
    Weight [SL2(Z):Gamma0(N)] (p - 1) p^(j-1) sum h(Dm) + 2 of the holomorphic
    form congruent to L_D modulo p^j.
    """
    _check_prime_power(p, j)
    return index_gamma0(N) * (p - 1) * p ** (j - 1) * class_number_sum + 2


def lhat_weight(h_S: int, p: int, j: int) -> int:
    """Weight 12 h_S p^(j-1) + 2 of the modified series for p = 2, 3."""
    _check_prime_power(p, j)
    return 12 * h_S * p ** (j - 1) + 2


def sturm_bound(weight: int, N: int = 1) -> Fraction:
    """weight * [SL2(Z):Gamma0(N)] / 12."""
    return Fraction(weight * index_gamma0(N), 12)


def required_set_size(
    p: int,
    j: int,
    h_S: int,
    N: int = 1,
    variant: str = "i",
    D_S: Optional[int] = None,
    support: Iterable[int] = (),
) -> Union[Fraction, float]:
    """
    Threshold that #S must strictly exceed for a dependence modulo p^j.

    Variant "i" is ((p-1) p^(j-1) h_S + 2) / 12 * index (exact). Variant "ii"
    replaces h_S by the class number bound at the largest discriminant:
    ((p-1) p^(j-1) sum_m sqrt|D_S m| (log|D_S m| + 2) + 2 pi) / (12 pi) * index^2,
    the sum running over the principal-part support m (for f_d, m = -d).

    Args:
        p: Prime
        j: Exponent
        h_S: Set class number (variant "i")
        N: Level
        variant: "i" or "ii"
        D_S: Largest discriminant of S (variant "ii")
        support: Principal-part exponents m < 0 (variant "ii")

    Returns:
        Fraction for variant "i", float for variant "ii"
    """
    _check_prime_power(p, j)
    index = index_gamma0(N)
    if variant == "i":
        return Fraction((p - 1) * p ** (j - 1) * h_S + 2, 12) * index
    if variant == "ii":
        support = list(support)
        if D_S is None or not support:
            raise PreconditionError("variant ii needs D_S and the principal-part support")
        total = 0.0
        for m in support:
            n = abs(D_S * m)
            total += math.sqrt(n) * (math.log(n) + 2)
        return ((p - 1) * p ** (j - 1) * total + 2 * math.pi) / (12 * math.pi) * index ** 2
    raise PreconditionError(f"unknown threshold variant {variant!r}")


def lhat_set_size(p: int, j: int, h_S: int, N: int = 1) -> Fraction:
    """Threshold (12 h_S p^(j-1) + 2) * index / 12 that #S must reach for p = 2, 3."""
    return sturm_bound(lhat_weight(h_S, p, j), N)
