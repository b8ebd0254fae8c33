#!/usr/bin/env python3
"""
Packed big-integer multiplication of coefficient lists.

Long products are evaluated by Kronecker substitution: both coefficient
lists are packed into one integer each (fixed-width two's complement slots),
the two integers are multiplied with GMP, and the slots of the product are
read back. Short products fall back to the schoolbook loop.
"""

import logging
from typing import List, Optional, Sequence

from gmpy2 import mpz

logger = logging.getLogger(__name__)

SCHOOLBOOK_CUTOFF = 24


def _max_bits(values: Sequence[int]) -> int:
    return max((abs(v).bit_length() for v in values), default=0)


def _schoolbook(a: Sequence[int], b: Sequence[int], n: int) -> List[int]:
    out = [0] * n
    for i, x in enumerate(a):
        if not x or i >= n:
            continue
        for j in range(min(len(b), n - i)):
            y = b[j]
            if y:
                out[i + j] += x * y
    return out


def _pack(values: Sequence[int], width: int) -> int:
    """Pack signed integers into width-byte slots, least significant first."""
    data = b"".join(v.to_bytes(width, "little", signed=True) for v in values)
    packed = int.from_bytes(data, "little")
    negatives = [i for i, v in enumerate(values) if v < 0]
    if negatives:
        # every negative slot borrowed one unit from the slot above it
        borrow = bytearray(width * (len(values) + 1))
        for i in negatives:
            borrow[width * (i + 1)] = 1
        packed -= int.from_bytes(borrow, "little")
    return packed


def _unpack(packed: int, width: int, count: int) -> List[int]:
    """Inverse of _pack for a value whose slots are known to fit."""
    half = 1 << (8 * width - 1)
    offset = int.from_bytes((b"\x00" * (width - 1) + b"\x80") * count, "little")
    data = (packed + offset).to_bytes(width * count, "little")
    return [
        int.from_bytes(data[i * width : (i + 1) * width], "little") - half
        for i in range(count)
    ]


def mul_integer_lists(
    a: Sequence[int], b: Sequence[int], n: Optional[int] = None
) -> List[int]:
    """
    Multiply two integer coefficient lists, keeping the first n coefficients.

    Args:
        a: Coefficients of the first factor, constant term first
        b: Coefficients of the second factor
        n: Number of product coefficients wanted (default: full product)

    Returns:
        list: The truncated Cauchy product
    """
    if not a or not b:
        return [0] * (n or 0)
    full = len(a) + len(b) - 1
    n = full if n is None else n
    if n <= 0:
        return []
    squaring = a is b
    a = a[:n]
    b = b[:n]
    if min(len(a), len(b)) < SCHOOLBOOK_CUTOFF:
        out = _schoolbook(a, b, min(n, full))
        return out + [0] * (n - len(out))

    bits = _max_bits(a) + _max_bits(b) + min(len(a), len(b)).bit_length() + 2
    width = (bits + 7) // 8
    packed_a = _pack(a, width)
    packed_b = packed_a if squaring else _pack(b, width)
    product = int(mpz(packed_a) * mpz(packed_b))
    count = len(a) + len(b) - 1
    out = _unpack(product, width, count)[:n]
    logger.debug(
        "packed product %dx%d with %d-byte slots", len(a), len(b), width
    )
    return out + [0] * (n - len(out))


def mul_residue_lists(
    a: Sequence[int], b: Sequence[int], n: int, modulus: int
) -> List[int]:
    """Truncated product of two lists of residues, reduced modulo modulus."""
    return [c % modulus for c in mul_integer_lists(a, b, n)]
