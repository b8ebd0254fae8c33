#!/usr/bin/env python3
"""
Elementary integer arithmetic shared by the series and form modules.

This module contains factorisation by trial division, squarefree parts,
divisor power sums and small helpers around gmpy2.
"""

from functools import reduce
from math import gcd
from typing import Dict, Iterable, List, Tuple

import gmpy2


def factorize(n: int) -> Dict[int, int]:
    """
    Factor a nonzero integer by trial division.

    Args:
        n: Integer to factor (the sign is ignored)

    Returns:
        dict: Mapping prime -> exponent
    """
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor 0")
    factors: Dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    p = 5
    step = 2
    while p * p <= n:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += step
        step = 6 - step
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def squarefree_decomposition(n: int) -> Tuple[int, int]:
    """Write n = s * t**2 with s squarefree carrying the sign of n; return (s, t)."""
    s, t = (-1 if n < 0 else 1), 1
    for p, e in factorize(n).items():
        t *= p ** (e // 2)
        if e % 2:
            s *= p
    return s, t


def squarefree_part(n: int) -> int:
    return squarefree_decomposition(n)[0]


def is_squarefree(n: int) -> bool:
    return n != 0 and all(e == 1 for e in factorize(n).values())


def is_square(n: int) -> bool:
    return n >= 0 and bool(gmpy2.is_square(n))


def is_prime(n: int) -> bool:
    return n >= 2 and bool(gmpy2.is_prime(n))


def lcm_of(values: Iterable[int]) -> int:
    return reduce(lambda x, y: x * y // gcd(x, y), values, 1)


def inverse_mod(a: int, modulus: int) -> int:
    """Inverse of a modulo modulus; raises ZeroDivisionError if none exists."""
    return int(gmpy2.invert(a, modulus))


def p_adic_valuation(n: int, p: int) -> int:
    """Exponent of p in n; by convention a large sentinel for n = 0."""
    if n == 0:
        return 1 << 30
    return int(gmpy2.remove(n, p)[1])


def divisor_power_sums(k: int, count: int) -> List[int]:
    """
    Table of sigma_k(n) = sum_{d | n} d**k for 0 <= n < count.

    The entry at n = 0 is 0.
    """
    sigma = [0] * max(count, 0)
    for d in range(1, count):
        dk = d ** k
        for m in range(d, count, d):
            sigma[m] += dk
    return sigma
