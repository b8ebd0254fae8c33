#!/usr/bin/env python3
"""
Untwisted Borcherds products q^rho prod_{n>=1} (1 - q^n)^a(n).
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import Mapping, Union

from ..errors import PreconditionError
from ..qseries import QQ, ZZ, ExactSeries, change_ring, exp_series, shift

logger = logging.getLogger(__name__)

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class ProductExpansion:
    """
    A product split as q^rho * tail, with rho the (possibly fractional)
    Weyl vector and tail a power series with constant term 1.
    """

    rho: Fraction
    tail: ExactSeries

    @property
    def trunc(self) -> Fraction:
        """First exponent of q^rho * tail that is not known."""
        return self.rho + self.tail.trunc

    def to_series(self) -> ExactSeries:
        """
        Return q^rho * tail as an ExactSeries.

        Raises:
            PreconditionError: If rho is not an integer
        """
        if self.rho.denominator != 1:
            raise PreconditionError(
                f"Weyl vector {self.rho} is fractional; use rho and tail separately"
            )
        return shift(self.tail, int(self.rho))


def untwisted_product(exponents: Mapping[int, int], rho: Rational, T: int) -> ProductExpansion:
    """
    Expand q^rho prod_{n>=1} (1 - q^n)^exponents[n].

    The tail is computed as exp(-sum_n a(n) sum_k q^(nk) / k), which is the
    same formal series as the product and does not depend on the size of
    the exponents.

    Args:
        exponents: Mapping n -> a(n) (for a form f, a(n) = c_f(n^2)); missing n mean 0
        rho: Weyl vector
        T: Every exponent below T is known in the result

    Returns:
        ProductExpansion: rho and the tail (over ZZ when integral)
    """
    rho = Fraction(rho)
    if any(n <= 0 for n in exponents):
        raise PreconditionError("product exponents are indexed by n >= 1")
    tail_trunc = T - floor(rho)
    if tail_trunc <= 0:
        raise PreconditionError(f"truncation {T} lies below the Weyl vector {rho}")
    log_coeffs = [Fraction(0)] * tail_trunc
    for n, a in exponents.items():
        if not a or n >= tail_trunc:
            continue
        for k in range(1, (tail_trunc - 1) // n + 1):
            log_coeffs[n * k] -= Fraction(a, k)
    tail = exp_series(ExactSeries.make(QQ, log_coeffs, 0, tail_trunc))
    if all(c.denominator == 1 for c in tail.coeffs):
        tail = change_ring(tail, ZZ)
    logger.debug("expanded product with %d exponents to q^%d", len(exponents), T - 1)
    return ProductExpansion(rho, tail)
