#!/usr/bin/env python3
"""
Admissible twist discriminants and the set class number h_S.
"""

import logging
from math import ceil, gcd
from typing import Iterable, List, Tuple

from ..errors import PreconditionError
from ..quadforms import class_number, is_fundamental, kronecker
from ..utils.arith import is_square
from .bounds import index_gamma0, lhat_set_size, required_set_size

logger = logging.getLogger(__name__)


def is_square_mod(D: int, modulus: int) -> bool:
    return any(r * r % modulus == D % modulus for r in range(modulus))


def s_p_membership(D: int, d: int, p: int, N: int = 1) -> bool:
    """
    True iff (-dD / p) is 0 or -1, i.e. p is ramified or inert in Q(sqrt(-dD)).

    Only the principal-part exponent m = -d of f_d is tested. D must be a
    non-square D > 1 that is a square modulo 4N.
    """
    if D <= 1 or is_square(D) or not is_square_mod(D, 4 * N):
        return False
    return kronecker(-d * D, p) in (0, -1)


def admissible_discriminants(
    d: int,
    p: int,
    upper: int,
    N: int = 1,
    lower: int = 2,
    allow_ramified: bool = False,
    fundamental_only: bool = False,
) -> List[int]:
    """
    Discriminants D in [lower, upper] usable for congruences modulo p.

    D must be a non-square, a square modulo 4N, prime to d and have p inert
    in Q(sqrt(-dD)); ramified primes are admitted only with allow_ramified.

    Returns:
        list: Admissible D in increasing order
    """
    result = []
    for D in range(max(lower, 2), upper + 1):
        if gcd(D, d) != 1 or not s_p_membership(D, d, p, N):
            continue
        if kronecker(-d * D, p) == 0 and not allow_ramified:
            continue
        if fundamental_only and not is_fundamental(D):
            continue
        result.append(D)
    return result


def h_S(S: Iterable[int], d: int, N: int = 1) -> int:
    """max over D in S of [SL2(Z):Gamma0(N)] * h(-dD)."""
    S = list(S)
    if not S:
        raise PreconditionError("h_S needs a nonempty set of discriminants")
    return index_gamma0(N) * max(class_number(-d * D) for D in S)


def choose_discriminant_set(
    d: int,
    p: int,
    j: int = 1,
    N: int = 1,
    fundamental_only: bool = True,
    allow_ramified: bool = True,
    limit: int = 5000,
) -> Tuple[int, ...]:
    """
    Take admissible D in increasing order until #S exceeds the ceiling of
    the threshold, so the coefficient matrix has more columns than rows.

    The threshold is the p = 2, 3 one for those primes and the strict one
    otherwise; it grows with h_S, so it is recomputed after every step.

    Raises:
        PreconditionError: If no such set exists below limit
    """
    S: List[int] = []
    for D in admissible_discriminants(
        d, p, limit, N, allow_ramified=allow_ramified, fundamental_only=fundamental_only
    ):
        S.append(D)
        hs = h_S(S, d, N)
        if p in (2, 3):
            threshold = lhat_set_size(p, j, hs, N)
        else:
            threshold = required_set_size(p, j, hs, N)
        if len(S) >= ceil(threshold) + 1:
            logger.info("chose %d discriminants up to %d (h_S = %d)", len(S), D, hs)
            return tuple(S)
    raise PreconditionError(f"no admissible set found with discriminants below {limit}")
