#!/usr/bin/env python3
"""
Genus characters of forms of discriminant -dD.
"""

import logging
from math import gcd
from typing import Optional

from ..errors import GenusSearchError, PreconditionError
from .forms import QuadForm
from .symbols import kronecker

logger = logging.getLogger(__name__)

SEARCH_BOUND = 50


def smallest_represented(Q: QuadForm, coprime_to: int, bound: int = SEARCH_BOUND) -> Optional[int]:
    """Smallest n = Q(x, y) > 0 with gcd(n, coprime_to) = 1 and |x|, |y| <= bound."""
    best = None
    for x in range(-bound, bound + 1):
        for y in range(0, bound + 1):
            n = Q(x, y)
            if n <= 0 or (best is not None and n >= best):
                continue
            if gcd(n, coprime_to) == 1:
                best = n
    return best


def genus_character(Q: QuadForm, D: int, d: int, bound: int = SEARCH_BOUND) -> int:
    """
    Genus character chi_D(Q) of a form Q of discriminant -dD.

    The value is 0 when gcd(a, b, c, D) > 1 and otherwise (D/n) for the
    smallest value n represented by Q that is prime to 2dD (or, failing
    that within the search box, prime to D).

    Args:
        Q: Form of discriminant -dD
        D: Twist discriminant
        d: Index with -dD = disc(Q)
        bound: Search box half-width for represented values

    Returns:
        int: -1, 0 or 1

    Raises:
        PreconditionError: If disc(Q) != -dD
        GenusSearchError: If no usable represented value lies in the box
    """
    if Q.discriminant != -d * D:
        raise PreconditionError(f"{Q} has discriminant {Q.discriminant}, expected {-d * D}")
    if gcd(gcd(gcd(Q.a, Q.b), Q.c), D) > 1:
        return 0
    n = smallest_represented(Q, 2 * d * D, bound)
    if n is None:
        logger.debug("no value of %s prime to %d; relaxing to %d", Q, 2 * d * D, D)
        n = smallest_represented(Q, D, bound)
    if n is None:
        raise GenusSearchError(
            f"no value of {Q} prime to {D} with |x|, |y| <= {bound}; raise the bound"
        )
    return kronecker(D, n)
