#!/usr/bin/env python3
"""
Linear algebra over Z/p^k.

Matrices are lists of rows of Python integers. Over the field Z/p the kernel
comes from the reduced row echelon form; over Z/p^k (k > 1) it is read off
the Howell form of [M^T | I], whose rows with zero left block span exactly
the kernel.
"""

import logging
from typing import List, Optional, Sequence, Tuple

from ..errors import PreconditionError
from ..utils.arith import inverse_mod, is_prime, p_adic_valuation

logger = logging.getLogger(__name__)

Matrix = List[List[int]]


def _check(p: int, k: int) -> int:
    if not is_prime(p):
        raise PreconditionError(f"{p} is not prime")
    if k < 1:
        raise PreconditionError(f"exponent must be positive, got {k}")
    return p ** k


def _width(M: Sequence[Sequence[int]]) -> int:
    widths = {len(row) for row in M}
    if len(widths) > 1:
        raise PreconditionError("matrix rows have different lengths")
    return widths.pop() if widths else 0


def transpose(M: Sequence[Sequence[int]], ncols: Optional[int] = None) -> Matrix:
    ncols = _width(M) if ncols is None else ncols
    return [[row[c] for row in M] for c in range(ncols)]


def mat_vec_mod(M: Sequence[Sequence[int]], v: Sequence[int], modulus: int) -> List[int]:
    """M v modulo modulus."""
    return [sum(a * b for a, b in zip(row, v)) % modulus for row in M]


def has_unit_entry(v: Sequence[int], p: int) -> bool:
    return any(x % p for x in v)


def rref_mod_prime(M: Sequence[Sequence[int]], p: int) -> Tuple[Matrix, List[int]]:
    """
    Reduced row echelon form over Z/p.

    Returns:
        tuple: (nonzero rows of the echelon form, pivot columns)
    """
    _check(p, 1)
    ncols = _width(M)
    rows = [[x % p for x in row] for row in M]
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = inverse_mod(rows[r][c], p)
        rows[r] = [x * inv % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                factor = rows[i][c]
                rows[i] = [(x - factor * y) % p for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank_mod_prime(M: Sequence[Sequence[int]], p: int) -> int:
    return len(rref_mod_prime(M, p)[1])


def nullspace_mod_prime(M: Sequence[Sequence[int]], p: int, ncols: Optional[int] = None) -> Matrix:
    """
    Basis of {v : M v = 0} over Z/p, one vector per free column.

    Args:
        M: Matrix over Z/p
        p: Prime
        ncols: Column count (needed only when M has no rows)

    Returns:
        list: Basis vectors, each with a 1 at its free column
    """
    ncols = _width(M) if ncols is None else ncols
    rows, pivots = rref_mod_prime(M, p) if M else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for row, c in zip(rows, pivots):
            v[c] = -row[f] % p
        basis.append(v)
    return basis


def howell_form(M: Sequence[Sequence[int]], p: int, k: int) -> Matrix:
    """
    Howell form of the row span of M over the local ring Z/p^k.

    Each pivot is a power p^v, entries above a pivot are reduced, and for
    every pivot row its multiple p^(k-v) * row is fed back into the
    elimination, so the rows with zeros in the first i columns span every
    element of the span with that property.

    Returns:
        list: Nonzero rows ordered by pivot column
    """
    modulus = _check(p, k)
    ncols = _width(M)
    pending = [[x % modulus for x in row] for row in M]
    pending = [row for row in pending if any(row)]
    done: List[Tuple[int, List[int]]] = []
    for c in range(ncols):
        candidates = [i for i, row in enumerate(pending) if row[c]]
        if not candidates:
            continue
        best = min(candidates, key=lambda i: p_adic_valuation(pending[i][c], p))
        row = pending.pop(best)
        v = p_adic_valuation(row[c], p)
        unit = row[c] // p ** v
        inv = inverse_mod(unit, modulus)
        row = [x * inv % modulus for x in row]
        pivot = p ** v

        def eliminate(other: List[int]) -> List[int]:
            factor = other[c] // pivot
            return [(x - factor * y) % modulus for x, y in zip(other, row)]

        pending = [eliminate(other) if other[c] else other for other in pending]
        done = [(pc, eliminate(other) if other[c] else other) for pc, other in done]
        if v > 0:
            saturated = [x * p ** (k - v) % modulus for x in row]
            if any(saturated):
                pending.append(saturated)
        pending = [other for other in pending if any(other)]
        done.append((c, row))
    return [row for _, row in done]


def _pivot(row: Sequence[int]) -> int:
    return next(c for c, x in enumerate(row) if x)


def kernel_mod_prime_power(M: Sequence[Sequence[int]], p: int, k: int, ncols: Optional[int] = None) -> Matrix:
    """
    Generators of {v : M v = 0} over Z/p^k.

    For k = 1 this is the nullspace basis over the field. For k > 1 the
    Howell form of the s x (r + s) matrix [M^T | I] is computed; its rows
    whose first r entries vanish are (0, v) with M v = 0 and generate the
    kernel.

    Args:
        M: r x s matrix
        p: Prime
        k: Exponent of the modulus
        ncols: Column count s (needed only when M has no rows)

    Returns:
        list: Kernel generators of length s
    """
    _check(p, k)
    s = _width(M) if ncols is None else ncols
    if k == 1:
        return nullspace_mod_prime(M, p, s)
    r = len(M)
    augmented = [
        [M[i][col] for i in range(r)] + [1 if c == col else 0 for c in range(s)]
        for col in range(s)
    ]
    howell = howell_form(augmented, p, k)
    kernel = [row[r:] for row in howell if _pivot(row) >= r]
    logger.debug("kernel of a %dx%d matrix modulo %d^%d has %d generators", r, s, p, k, len(kernel))
    return kernel


def in_span(vectors: Sequence[Sequence[int]], v: Sequence[int], p: int, k: int = 1) -> bool:
    """
    Whether v lies in the Z/p^k-span of vectors.

    v is reduced against the Howell form of the vectors; it lies in the span
    iff the reduction reaches zero.
    """
    modulus = _check(p, k)
    v = [x % modulus for x in v]
    if not vectors:
        return not any(v)
    for row in howell_form(vectors, p, k):
        c = _pivot(row)
        if not v[c]:
            continue
        pivot = row[c]
        if v[c] % pivot:
            return False
        factor = v[c] // pivot
        v = [(x - factor * y) % modulus for x, y in zip(v, row)]
    return not any(v)
