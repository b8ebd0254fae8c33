#!/usr/bin/env python3
"""
The Kohnen plus-space basis f_0, f_3, f_4, f_7, ... of weakly holomorphic
weight 1/2 forms.

f_0 is theta and f_3 comes from the Eisenstein construction in
classical.f3_series. Every further f_d is f_{d-4} * j(4 tau) with the
principal parts of the smaller basis elements and the constant term
eliminated, so that f_d = q^-d + sum_{n>0} A(n, d) q^n.
"""

import logging
import time
from dataclasses import dataclass
from typing import TYPE_CHECKING, Dict, List, Optional

from ..errors import CacheError, IntegralityError, PreconditionError, PrecisionError
from ..qseries import ExactSeries, mul_dilated, scale, sub, truncate
from .classical import f3_series, j_invariant, theta

if TYPE_CHECKING:
    from .cache import CoefficientCache

logger = logging.getLogger(__name__)


def is_plus_space_index(d: int) -> bool:
    return d >= 0 and d % 4 in (0, 3)


@dataclass(frozen=True)
class PlusSpaceForm:
    """
    One basis element f_d with its integer q-expansion.

    precision is the largest exponent whose coefficient is known.
    """

    d: int
    series: ExactSeries

    @property
    def precision(self) -> int:
        return self.series.trunc - 1

    def coefficient(self, n: int) -> int:
        """A(n, d), the coefficient of q^n."""
        if n > self.precision:
            raise PrecisionError(
                f"A({n}, {self.d}) needs f_{self.d} to precision {n}, have {self.precision}"
            )
        return self.series.coefficient(n)

    A = coefficient

    def require_precision(self, needed: int) -> None:
        if self.precision < needed:
            raise PrecisionError(
                f"f_{self.d} is known to q^{self.precision}; q^{needed} is required"
            )

    def truncated(self, precision: int) -> "PlusSpaceForm":
        return PlusSpaceForm(self.d, truncate(self.series, precision + 1))

    def principal_part(self) -> Dict[int, int]:
        return {n: c for n, c in self.series.items() if n < 0}


def f3(T: int) -> PlusSpaceForm:
    """f_3 as a PlusSpaceForm to truncation T."""
    return PlusSpaceForm(3, f3_series(T))


def check_normalised(d: int, series: ExactSeries) -> None:
    """
    Verify q^-d normalisation, zero constant term (d > 0) and the
    plus-space support condition.

    Raises:
        IntegralityError: If any condition fails
    """
    for n, c in series.items():
        if n % 4 not in (0, 1):
            raise IntegralityError(f"f_{d} has nonzero coefficient at q^{n}, outside the plus space")
        if n < 0 and n != -d:
            raise IntegralityError(f"f_{d} has leftover principal part {c}*q^{n}")
        if n == 0 and d > 0:
            raise IntegralityError(f"f_{d} has nonzero constant term {c}")
    if series.coefficient(-d) != 1:
        raise IntegralityError(f"f_{d} does not start with q^-{d}")


def kohnen_basis(d_max: int, T: int) -> List[PlusSpaceForm]:
    """
    Build f_d for every plus-space index d <= d_max.

    Each multiplication by j(4 tau) loses four exponents of precision, so the
    seeds are built with 4 * (d_max // 4) extra exponents of headroom.

    Args:
        d_max: Largest index wanted
        T: Truncation of the returned forms

    Returns:
        list: PlusSpaceForm for d = 0, 3, 4, 7, 8, ... <= d_max
    """
    if d_max < 0:
        raise PreconditionError(f"d_max must be non-negative, got {d_max}")
    if T <= 0:
        raise PreconditionError(f"truncation must be positive, got {T}")
    start = time.perf_counter()
    indices = [d for d in range(d_max + 1) if is_plus_space_index(d)]
    top = T + 4 * (d_max // 4)
    forms: Dict[int, ExactSeries] = {0: theta(top)}
    if d_max >= 3:
        forms[3] = f3_series(top)
        check_normalised(3, forms[3])
    if d_max >= 4:
        jq = j_invariant((top + d_max) // 4 + 2)
    for d in indices:
        if d < 4:
            continue
        raw = mul_dilated(forms[d - 4], jq, 4)
        for e in sorted((k for k in forms if 0 < k < d), reverse=True):
            c = raw.coefficient(-e)
            if c:
                raw = sub(raw, scale(forms[e], c))
        c0 = raw.coefficient(0)
        if c0:
            raw = sub(raw, scale(forms[0], c0))
        check_normalised(d, raw)
        forms[d] = raw
    basis = [PlusSpaceForm(d, truncate(forms[d], T)) for d in indices]
    logger.debug(
        "built plus-space basis to d=%d, q^%d in %.2fs", d_max, T - 1, time.perf_counter() - start
    )
    return basis


def plus_space_form(
    d: int, precision: int, cache: Optional["CoefficientCache"] = None
) -> PlusSpaceForm:
    """
    Return f_d known at least up to q^precision, using the cache when given.

    Args:
        d: Plus-space index (d = 0 or 3 mod 4)
        precision: Largest exponent needed
        cache: Optional on-disk coefficient cache

    Returns:
        PlusSpaceForm: f_d truncated to exactly the requested precision
    """
    if not is_plus_space_index(d):
        raise PreconditionError(f"d = {d} is not a plus-space index (d = 0, 3 mod 4)")
    if cache is not None:
        cached = cache.load(d, precision)
        if cached is not None:
            logger.info("f_%d to q^%d loaded from cache", d, precision)
            return cached.truncated(precision)
        logger.info("f_%d to q^%d not cached; building", d, precision)
    basis = kohnen_basis(d, precision + 1)
    if cache is not None:
        for form in basis:
            try:
                cache.save(form)
            except CacheError as e:
                logger.warning("could not cache f_%d: %s", form.d, e)
    return basis[-1]
