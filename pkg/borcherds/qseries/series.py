#!/usr/bin/env python3
"""
Truncated Laurent series with exact coefficients.

An ExactSeries stores the coefficients of q**valuation, ..., q**(trunc - 1)
densely; every exponent at or beyond trunc is unknown, and asking for such
a coefficient raises TruncationError instead of returning zero. Values are
immutable, so every operation below is a pure function.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from ..errors import (
    NotInvertibleError,
    PreconditionError,
    RingMismatchError,
    TruncationError,
)
from .rings import CoefficientRing, Integers, Rationals, Residues

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExactSeries:
    """
    A truncated Laurent series sum c_n q**n over a coefficient ring.

    Use ExactSeries.make to build instances; it enforces the normal form
    (leading coefficient nonzero, exactly trunc - valuation stored
    coefficients, zero series stored with valuation == trunc).
    """

    ring: CoefficientRing
    valuation: int
    coeffs: Tuple[Any, ...]
    trunc: int

    @classmethod
    def make(
        cls,
        ring: CoefficientRing,
        coeffs: Sequence[Any],
        valuation: int = 0,
        trunc: Optional[int] = None,
    ) -> "ExactSeries":
        """
        Build a series in normal form.

        Args:
            ring: Coefficient ring
            coeffs: Coefficients of q**valuation, q**(valuation + 1), ...
            valuation: Exponent of the first entry of coeffs
            trunc: First unknown exponent (default: just past the last entry)

        Returns:
            ExactSeries: The normalised series
        """
        if trunc is None:
            trunc = valuation + len(coeffs)
        length = max(trunc - valuation, 0)
        values = [ring.coerce(c) for c in coeffs[:length]]
        values.extend([ring.zero] * (length - len(values)))
        start = 0
        while start < len(values) and ring.is_zero(values[start]):
            start += 1
        if start == len(values):
            return cls(ring, trunc, (), trunc)
        return cls(ring, valuation + start, tuple(values[start:]), trunc)

    @classmethod
    def from_dict(
        cls, ring: CoefficientRing, terms: Mapping[int, Any], trunc: int
    ) -> "ExactSeries":
        """Build a series from an exponent -> coefficient mapping."""
        kept = {n: c for n, c in terms.items() if n < trunc}
        if not kept:
            return cls(ring, trunc, (), trunc)
        low = min(kept)
        values = [ring.zero] * (trunc - low)
        for n, c in kept.items():
            values[n - low] = c
        return cls.make(ring, values, low, trunc)

    @property
    def relative_precision(self) -> int:
        return self.trunc - self.valuation

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading_coefficient(self) -> Any:
        if not self.coeffs:
            return self.ring.zero
        return self.coeffs[0]

    def coefficient(self, n: int) -> Any:
        """Coefficient of q**n; raises TruncationError if n >= trunc."""
        if n >= self.trunc:
            raise TruncationError(
                f"coefficient of q^{n} requested but series is known only below q^{self.trunc}"
            )
        if n < self.valuation:
            return self.ring.zero
        return self.coeffs[n - self.valuation]

    __getitem__ = coefficient

    def coefficients(self, start: int, stop: int) -> List[Any]:
        """Coefficients of q**start, ..., q**(stop - 1)."""
        return [self.coefficient(n) for n in range(start, stop)]

    def items(self) -> Iterator[Tuple[int, Any]]:
        """Yield (exponent, coefficient) for the nonzero known coefficients."""
        for i, c in enumerate(self.coeffs):
            if not self.ring.is_zero(c):
                yield self.valuation + i, c

    def as_dict(self) -> Dict[int, Any]:
        return dict(self.items())

    # arithmetic sugar -------------------------------------------------

    def __add__(self, other):
        if isinstance(other, ExactSeries):
            return add(self, other)
        return add(self, constant(self.ring, other, self.trunc))

    __radd__ = __add__

    def __neg__(self):
        return neg(self)

    def __sub__(self, other):
        if isinstance(other, ExactSeries):
            return sub(self, other)
        return sub(self, constant(self.ring, other, self.trunc))

    def __rsub__(self, other):
        return add(neg(self), constant(self.ring, other, self.trunc))

    def __mul__(self, other):
        if isinstance(other, ExactSeries):
            return mul(self, other)
        return scale(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        return pow_int(self, e)

    def __str__(self) -> str:
        from .text import render_series

        return render_series(self)


def _same_ring(a: ExactSeries, b: ExactSeries) -> CoefficientRing:
    if a.ring != b.ring:
        raise RingMismatchError(f"cannot combine series over {a.ring} and {b.ring}")
    return a.ring


def zero(ring: CoefficientRing, trunc: int) -> ExactSeries:
    return ExactSeries(ring, trunc, (), trunc)


def constant(ring: CoefficientRing, c: Any, trunc: int) -> ExactSeries:
    """The constant series c + O(q**trunc)."""
    if trunc <= 0:
        return zero(ring, trunc)
    return ExactSeries.make(ring, [c], 0, trunc)


def one(ring: CoefficientRing, trunc: int) -> ExactSeries:
    return constant(ring, 1, trunc)


def monomial(ring: CoefficientRing, n: int, c: Any = 1, trunc: Optional[int] = None) -> ExactSeries:
    """The series c*q**n, exact up to trunc (default n + 1)."""
    if trunc is None:
        trunc = n + 1
    return ExactSeries.make(ring, [c], n, trunc)


def add(a: ExactSeries, b: ExactSeries) -> ExactSeries:
    ring = _same_ring(a, b)
    trunc = min(a.trunc, b.trunc)
    low = min(a.valuation, b.valuation)
    if low >= trunc:
        return zero(ring, trunc)
    values = [ring.zero] * (trunc - low)
    for series in (a, b):
        for i, c in enumerate(series.coeffs):
            n = series.valuation + i - low
            if n >= len(values):
                break
            values[n] = ring.add(values[n], c)
    return ExactSeries.make(ring, values, low, trunc)


def neg(a: ExactSeries) -> ExactSeries:
    return ExactSeries(a.ring, a.valuation, tuple(a.ring.neg(c) for c in a.coeffs), a.trunc)


def sub(a: ExactSeries, b: ExactSeries) -> ExactSeries:
    return add(a, neg(b))


def scale(a: ExactSeries, c: Any) -> ExactSeries:
    """Multiply every coefficient by the ring element c."""
    c = a.ring.coerce(c)
    return ExactSeries.make(a.ring, [a.ring.mul(c, x) for x in a.coeffs], a.valuation, a.trunc)


def shift(a: ExactSeries, k: int) -> ExactSeries:
    """Multiply by q**k."""
    return ExactSeries(a.ring, a.valuation + k, a.coeffs, a.trunc + k)


def truncate(a: ExactSeries, trunc: int) -> ExactSeries:
    """Forget every coefficient at or beyond trunc."""
    if trunc >= a.trunc:
        return a
    return ExactSeries.make(a.ring, a.coeffs, a.valuation, trunc)


def change_ring(a: ExactSeries, ring: CoefficientRing) -> ExactSeries:
    """Coerce every coefficient into another ring (e.g. ZZ -> QQ)."""
    return ExactSeries.make(ring, a.coeffs, a.valuation, a.trunc)


def mul(a: ExactSeries, b: ExactSeries) -> ExactSeries:
    """Cauchy product; valuations add and the relative precision is the smaller one."""
    ring = _same_ring(a, b)
    trunc = min(a.trunc + b.valuation, b.trunc + a.valuation)
    if a.is_zero() or b.is_zero():
        return zero(ring, trunc)
    valuation = a.valuation + b.valuation
    n = trunc - valuation
    return ExactSeries.make(ring, ring.mul_sequences(a.coeffs, b.coeffs, n), valuation, trunc)


def mul_dilated(a: ExactSeries, b: ExactSeries, k: int) -> ExactSeries:
    """
    Compute a * dilate(b, k) without materialising the zeros of dilate(b, k).

    The coefficients of a are split by exponent residue modulo k and each
    residue class is multiplied against b on its own.
    """
    if k == 1:
        return mul(a, b)
    ring = _same_ring(a, b)
    trunc = min(a.trunc + k * b.valuation, k * b.trunc + a.valuation)
    if a.is_zero() or b.is_zero():
        return zero(ring, trunc)
    valuation = a.valuation + k * b.valuation
    n = trunc - valuation
    values = [ring.zero] * max(n, 0)
    for r in range(min(k, n)):
        count = (n - r + k - 1) // k
        part = list(a.coeffs[r::k])
        if not part:
            continue
        product = ring.mul_sequences(part, b.coeffs, count)
        for s, c in enumerate(product):
            values[r + k * s] = c
    return ExactSeries.make(ring, values, valuation, trunc)


def invert(a: ExactSeries) -> ExactSeries:
    """
    Multiplicative inverse by Newton iteration b <- b * (2 - a * b).

    Raises:
        NotInvertibleError: If a is zero or its leading coefficient is not a unit
    """
    ring = a.ring
    if a.is_zero() or not ring.is_unit(a.leading_coefficient):
        raise NotInvertibleError(
            f"leading coefficient {ring.render(a.leading_coefficient)} is not a unit of {ring}"
        )
    n = a.relative_precision
    b = [ring.inverse(a.leading_coefficient)]
    two = ring.coerce(2)
    prec = 1
    while prec < n:
        prec = min(2 * prec, n)
        ab = ring.mul_sequences(a.coeffs[:prec], b, prec)
        correction = [ring.neg(c) for c in ab]
        correction[0] = ring.add(correction[0], two)
        b = ring.mul_sequences(b, correction, prec)
        logger.debug("newton inversion step to %d coefficients", prec)
    return ExactSeries.make(ring, b, -a.valuation, n - a.valuation)


def pow_int(a: ExactSeries, e: int) -> ExactSeries:
    """Integer power by binary exponentiation; negative powers invert first."""
    if e == 0:
        return one(a.ring, a.relative_precision)
    if e < 0:
        a, e = invert(a), -e
    result = None
    base = a
    while e:
        if e & 1:
            result = base if result is None else mul(result, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return result


def d_operator(a: ExactSeries) -> ExactSeries:
    """Apply q d/dq: the coefficient of q**n is multiplied by n."""
    ring = a.ring
    values = [ring.mul(c, ring.coerce(a.valuation + i)) for i, c in enumerate(a.coeffs)]
    return ExactSeries.make(ring, values, a.valuation, a.trunc)


def _require_rationals(a: ExactSeries, what: str) -> None:
    if not a.ring.contains_rationals:
        raise PreconditionError(f"{what} needs a ring containing QQ, got {a.ring}")


def exp_series(a: ExactSeries) -> ExactSeries:
    """
    Formal exponential of a series with positive valuation.

    Uses n e_n = sum_{k=1}^{n} k a_k e_{n-k}.
    """
    _require_rationals(a, "exp")
    ring = a.ring
    if a.is_zero():
        return one(ring, a.trunc)
    if a.valuation < 1:
        raise PreconditionError("exp needs a series with valuation >= 1")
    n = a.trunc
    weighted = [
        (k, ring.mul(ring.coerce(k), a.coefficient(k)))
        for k in range(a.valuation, n)
        if not ring.is_zero(a.coefficient(k))
    ]
    e = [ring.one] + [ring.zero] * (n - 1)
    for m in range(1, n):
        total = ring.zero
        for k, ka in weighted:
            if k > m:
                break
            total = ring.add(total, ring.mul(ka, e[m - k]))
        e[m] = ring.divide_by_integer(total, m)
    return ExactSeries.make(ring, e, 0, n)


def log_series(a: ExactSeries) -> ExactSeries:
    """
    Formal logarithm of a series with constant term 1.

    Uses n l_n = n a_n - sum_{k=1}^{n-1} k l_k a_{n-k}.
    """
    _require_rationals(a, "log")
    ring = a.ring
    if a.valuation != 0 or a.leading_coefficient != ring.one:
        raise PreconditionError("log needs a series with constant term 1")
    n = a.trunc
    coeffs = list(a.coeffs)
    support = [i for i in range(1, n) if not ring.is_zero(coeffs[i])]
    weighted = [ring.zero] * n  # k * l_k
    for m in range(1, n):
        total = ring.mul(ring.coerce(m), coeffs[m])
        for i in support:
            if i >= m:
                break
            total = ring.sub(total, ring.mul(weighted[m - i], coeffs[i]))
        weighted[m] = total
    values = [ring.zero] + [ring.divide_by_integer(weighted[m], m) for m in range(1, n)]
    return ExactSeries.make(ring, values, 0, n)


def dilate(a: ExactSeries, k: int) -> ExactSeries:
    """Substitute q -> q**k."""
    if k < 1:
        raise PreconditionError(f"dilation factor must be positive, got {k}")
    if k == 1:
        return a
    ring = a.ring
    if a.is_zero():
        return zero(ring, k * a.trunc)
    values = [ring.zero] * (k * a.relative_precision)
    values[::k] = a.coeffs
    return ExactSeries.make(ring, values, k * a.valuation, k * a.trunc)


def reduce_mod(a: ExactSeries, p: int, j: int = 1) -> ExactSeries:
    """
    Reduce an integral (or p-integral rational) series modulo p**j.

    Returns:
        ExactSeries: The series over Residues(p, j)
    """
    if not isinstance(a.ring, (Integers, Rationals, Residues)):
        raise PreconditionError(f"cannot reduce a series over {a.ring} modulo {p}^{j}")
    ring = Residues(p, j)
    if isinstance(a.ring, Residues) and (a.ring.p != p or a.ring.j < j):
        raise PreconditionError(f"cannot reduce {a.ring} to {ring}")
    return ExactSeries.make(ring, a.coeffs, a.valuation, a.trunc)


def agree(a: ExactSeries, b: ExactSeries) -> bool:
    """True if a and b have equal coefficients below their common truncation."""
    _same_ring(a, b)
    trunc = min(a.trunc, b.trunc)
    return truncate(a, trunc) == truncate(b, trunc)
