#!/usr/bin/env python3
"""
Kronecker symbols and discriminant bookkeeping.
"""

import logging
from fractions import Fraction
from math import gcd, isqrt
from typing import Tuple

import gmpy2

from ..errors import PreconditionError
from ..utils.arith import factorize, is_square, is_squarefree, squarefree_part

logger = logging.getLogger(__name__)


def kronecker(D: int, n: int) -> int:
    """
    Kronecker symbol (D/n) for arbitrary integers D and n.

    The odd positive part of n goes through the Jacobi symbol; the factors
    -1 and 2 use the Kronecker extension ((D/-1) = sign D, (D/2) from D mod 8).
    """
    if n == 0:
        return 1 if abs(D) == 1 else 0
    result = 1
    if n < 0:
        n = -n
        if D < 0:
            result = -1
    twos = 0
    while n % 2 == 0:
        n //= 2
        twos += 1
    if twos:
        if D % 2 == 0:
            return 0
        if D % 8 in (3, 5) and twos % 2:
            result = -result
    if n == 1:
        return result
    return result * int(gmpy2.jacobi(D % n, n))


def is_discriminant(D: int) -> bool:
    return D % 4 in (0, 1)


def is_fundamental(D: int) -> bool:
    """True iff D is a fundamental discriminant."""
    if D % 4 == 1:
        return is_squarefree(D)
    if D % 4 == 0:
        m = D // 4
        return m % 4 in (2, 3) and is_squarefree(m)
    return False


def fundamental_part(disc: int) -> Tuple[int, int]:
    """
    Split a discriminant as disc = D0 * f**2 with D0 fundamental.

    Returns:
        tuple: (D0, f)
    """
    if disc == 0 or not is_discriminant(disc) or is_square(disc):
        raise PreconditionError(f"{disc} is not a non-square discriminant")
    s = squarefree_part(disc)
    D0 = s if s % 4 == 1 else 4 * s
    return D0, isqrt(disc // D0)


def _unit_count(disc: int) -> int:
    return {-3: 6, -4: 4}.get(disc, 2)


def analytic_class_number(disc: int) -> int:
    """
    Class number of the order of discriminant disc < 0 from character sums.

    The maximal order uses h = (w / (2|D0|)) |sum_{n<|D0|} (D0/n) n|, and the
    order of conductor f multiplies by f / [O*:O_f*] prod_{p|f} (1 - (D0/p)/p).
    """
    if disc >= 0:
        raise PreconditionError(f"discriminant must be negative, got {disc}")
    D0, f = fundamental_part(disc)
    total = sum(kronecker(D0, n) * n for n in range(1, -D0))
    h0 = Fraction(_unit_count(D0) * abs(total), 2 * -D0)
    if f == 1:
        return int(h0)
    h = h0 * f / (_unit_count(D0) // 2)
    for p in factorize(f):
        h *= 1 - Fraction(kronecker(D0, p), p)
    return int(h)


def validate_twist(D: int, d: int) -> None:
    """
    Check that D can twist the index d.

    D must be a positive non-square discriminant prime to d. Non-fundamental
    D are accepted with a warning.

    Raises:
        PreconditionError: If D is not admissible
    """
    if D <= 1 or not is_discriminant(D) or is_square(D):
        raise PreconditionError(f"D = {D} is not a positive non-square discriminant")
    if d and gcd(D, d) != 1:
        raise PreconditionError(f"D = {D} is not prime to d = {d}")
    if not is_fundamental(D):
        logger.warning("D = %d is not a fundamental discriminant; continuing", D)
