#!/usr/bin/env python3
"""
Classical level one q-expansions.

This module contains theta, the Eisenstein series E_k, Delta, j and the
weight 1/2 form f_3 built from them. Every builder takes the truncation T
and returns a series whose coefficients below q**T are exact.
"""

import logging
import threading
from fractions import Fraction
from math import comb, gcd
from typing import Dict, List, Optional, Sequence

from ..errors import IntegralityError, PreconditionError
from ..qseries import (
    QQ,
    ZZ,
    ExactSeries,
    add,
    d_operator,
    invert,
    mul,
    mul_dilated,
    pow_int,
    scale,
    shift,
    truncate,
)
from ..utils.arith import divisor_power_sums

logger = logging.getLogger(__name__)

_bernoulli_cache: List[Fraction] = [Fraction(1)]
_bernoulli_lock = threading.Lock()


def bernoulli(n: int) -> Fraction:
    """
    Bernoulli number B_n (B_1 = -1/2) from sum_{k<=m} C(m+1, k) B_k = 0.

    Values are cached; the cache is filled under a lock.
    """
    if n < 0:
        raise PreconditionError(f"Bernoulli index must be non-negative, got {n}")
    if n < len(_bernoulli_cache):
        return _bernoulli_cache[n]
    with _bernoulli_lock:
        while len(_bernoulli_cache) <= n:
            m = len(_bernoulli_cache)
            total = sum(comb(m + 1, k) * b for k, b in enumerate(_bernoulli_cache))
            _bernoulli_cache.append(-total / (m + 1))
    return _bernoulli_cache[n]


def theta(T: int) -> ExactSeries:
    """1 + 2 sum_{n>=1} q^(n^2)."""
    if T <= 0:
        raise PreconditionError(f"truncation must be positive, got {T}")
    coeffs = [0] * T
    coeffs[0] = 1
    n = 1
    while n * n < T:
        coeffs[n * n] = 2
        n += 1
    return ExactSeries.make(ZZ, coeffs, 0, T)


def eisenstein(k: int, T: int) -> ExactSeries:
    """
    Normalised Eisenstein series E_k = 1 - (2k / B_k) sum sigma_{k-1}(n) q^n.

    Args:
        k: Even weight, at least 4
        T: Truncation

    Returns:
        ExactSeries: Over ZZ when -2k/B_k is integral, over QQ otherwise
    """
    if k < 4 or k % 2:
        raise PreconditionError(f"Eisenstein weight must be even and >= 4, got {k}")
    if T <= 0:
        raise PreconditionError(f"truncation must be positive, got {T}")
    factor = Fraction(-2 * k) / bernoulli(k)
    sigma = divisor_power_sums(k - 1, T)
    if factor.denominator == 1:
        c = factor.numerator
        return ExactSeries.make(ZZ, [1] + [c * s for s in sigma[1:]], 0, T)
    return ExactSeries.make(QQ, [Fraction(1)] + [factor * s for s in sigma[1:]], 0, T)


def eta_cube_product(T: int) -> ExactSeries:
    """prod_{n>=1} (1 - q^n)^3 = sum_{n>=0} (-1)^n (2n+1) q^(n(n+1)/2)."""
    coeffs = [0] * max(T, 0)
    n = 0
    while n * (n + 1) // 2 < T:
        coeffs[n * (n + 1) // 2] = (-1) ** n * (2 * n + 1)
        n += 1
    return ExactSeries.make(ZZ, coeffs, 0, T)


def _delta_over_q(T: int) -> ExactSeries:
    """prod (1 - q^n)^24 to truncation T."""
    return pow_int(eta_cube_product(T), 8)


def delta(T: int) -> ExactSeries:
    """The discriminant Delta = q prod (1 - q^n)^24."""
    if T <= 0:
        raise PreconditionError(f"truncation must be positive, got {T}")
    if T == 1:
        return ExactSeries.make(ZZ, [], 0, 1)
    return shift(_delta_over_q(T - 1), 1)


def delta_inverse(T: int) -> ExactSeries:
    """1/Delta = q^-1 prod (1 - q^n)^-24."""
    return shift(invert(_delta_over_q(T + 1)), -1)


def j_invariant(T: int) -> ExactSeries:
    """The modular invariant j = E_4^3 / Delta = q^-1 + 744 + 196884 q + ..."""
    if T <= 0:
        raise PreconditionError(f"truncation must be positive, got {T}")
    e4_cubed = pow_int(eisenstein(4, T + 1), 3)
    result = shift(mul(e4_cubed, invert(_delta_over_q(T + 1))), -1)
    logger.debug("built j to q^%d", T - 1)
    return result


def f3_series(T: int) -> ExactSeries:
    """
    The weight 1/2 form f_3 = q^-3 - 248 q + 26752 q^4 - ... to truncation T.

    f_3 = -(1/10) [(theta * (D E_10)(4 tau) - 5 (D theta) E_10(4 tau)) / Delta(4 tau) + 304 theta]

    Raises:
        IntegralityError: If the bracket is not divisible by 10
    """
    if T <= 0:
        raise PreconditionError(f"truncation must be positive, got {T}")
    wide = T + 4
    quarter = (wide + 3) // 4 + 1
    th = theta(wide)
    e10 = eisenstein(10, quarter)
    numerator = add(
        mul_dilated(th, d_operator(e10), 4),
        scale(mul_dilated(d_operator(th), e10, 4), -5),
    )
    bracket = add(mul_dilated(numerator, delta_inverse(quarter), 4), scale(th, 304))
    bracket = truncate(bracket, T)
    values = []
    for n, c in enumerate(bracket.coeffs, start=bracket.valuation):
        q, r = divmod(c, -10)
        if r:
            raise IntegralityError(f"coefficient {c} of q^{n} in the f_3 bracket is not divisible by 10")
        values.append(q)
    logger.debug("built f_3 to q^%d", T - 1)
    return ExactSeries.make(ZZ, values, bracket.valuation, bracket.trunc)


def eisenstein_congruence_report(
    weights: Sequence[int], modulus: int, T: int
) -> Dict[int, Optional[int]]:
    """
    Check E_k = 1 (mod modulus) coefficientwise below q^T.

    Args:
        weights: Eisenstein weights to test
        modulus: Any modulus >= 2 (prime powers and composites such as 24)
        T: Truncation

    Returns:
        dict: weight -> first exponent where the congruence fails, or None
    """
    report: Dict[int, Optional[int]] = {}
    for k in weights:
        series = eisenstein(k, T)
        report[k] = None
        for n in range(T):
            c = Fraction(series.coefficient(n)) - (1 if n == 0 else 0)
            if gcd(c.denominator, modulus) != 1 or c.numerator % modulus:
                report[k] = n
                break
    return report
