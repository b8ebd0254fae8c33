#!/usr/bin/env python3
"""
Numerical values of j at Heegner points and Hilbert class polynomials.

This is the only place floating point enters the package. Values are
computed with mpmath from the exact integer q-expansion of j, and class
polynomials are rounded to integers with an explicit residual check.
"""

import logging
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

import mpmath

from ..errors import PreconditionError, PrecisionError, RecognitionError
from ..qseries import ExactSeries, add, constant, mul
from ..quadforms import HeegnerPoint, heegner_point, reduced_forms
from .classical import j_invariant

logger = logging.getLogger(__name__)

MIN_DIGITS = 30
DEFAULT_MAX_J_TERMS = 5000
DEFAULT_MAX_DIGITS = 4000


@lru_cache(maxsize=8)
def _j_coefficients(trunc: int) -> Tuple[int, ...]:
    """Coefficients of j from q^-1 up to q^(trunc - 1)."""
    return j_invariant(trunc).coeffs


def j_terms_needed(imaginary_part: float, digits: int) -> int:
    """
    Number of q-expansion terms of j needed at a point with the given
    imaginary part so the tail stays below 10^-(digits + 5).

    Uses c(n) <= exp(4 pi sqrt(n)) and |q| = exp(-2 pi y).
    """
    y = float(imaginary_part)
    if y <= 0:
        raise PreconditionError("point must lie in the upper half plane")
    target = -(digits + 5) * math.log(10)
    n = 1
    while True:
        exponent = 4 * math.pi * math.sqrt(n) - 2 * math.pi * y * n
        if n * y * y > 1 and exponent < target:
            return n
        n += 1


def eval_j_at_heegner(
    point: HeegnerPoint, digits: int, max_j_terms: int = DEFAULT_MAX_J_TERMS
) -> mpmath.mpc:
    """
    Evaluate j(tau) at a Heegner point from the q-expansion of j.

    Args:
        point: Heegner point (-b + i sqrt(d)) / (2a)
        digits: Decimal digits of accuracy wanted (at least 30)
        max_j_terms: Cap on the number of q-expansion terms

    Returns:
        mpmath.mpc: j(tau) carrying digits + 10 working digits

    Raises:
        PrecisionError: If more than max_j_terms terms would be needed
    """
    if digits < MIN_DIGITS:
        raise PreconditionError(f"at least {MIN_DIGITS} digits are required, got {digits}")
    y = math.sqrt(point.d) / (2 * point.a)
    terms = j_terms_needed(y, digits)
    if terms > max_j_terms:
        raise PrecisionError(
            f"j at {point} needs {terms} terms for {digits} digits; limit is {max_j_terms}"
        )
    trunc = max(64, 1 << terms.bit_length())
    coefficients = _j_coefficients(trunc)[: terms + 2]
    with mpmath.workdps(digits + 10):
        q = mpmath.expjpi(2 * point.tau())
        value = mpmath.polyval(list(reversed(coefficients)), q) / q
    return value


@dataclass(frozen=True)
class ClassPolynomial:
    """
    The integral polynomial prod_Q (X - j(tau_Q)) over reduced forms of disc.

    The Hilbert class polynomial is this polynomial raised to the power
    1/omega_denominator (omega is 3 for disc -3 and 2 for disc -4).
    Coefficients are listed constant term first.
    """

    disc: int
    coefficients: Tuple[int, ...]
    omega_denominator: int = 1
    residual: float = field(default=0.0, compare=False)
    digits: int = field(default=0, compare=False)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def render(self, variable: str = "X", root: bool = True) -> str:
        terms: List[str] = []
        for i in range(self.degree, -1, -1):
            c = self.coefficients[i]
            if c == 0:
                continue
            power = "" if i == 0 else (variable if i == 1 else f"{variable}^{i}")
            magnitude = abs(c)
            if power and magnitude == 1:
                body = power
            elif power:
                body = f"{magnitude}*{power}"
            else:
                body = str(magnitude)
            if not terms:
                terms.append(f"-{body}" if c < 0 else body)
            else:
                terms.append(f"{'-' if c < 0 else '+'} {body}")
        text = " ".join(terms) or "0"
        if root and self.omega_denominator > 1:
            return f"({text})^(1/{self.omega_denominator})"
        return text

    def evaluate(self, series: ExactSeries) -> ExactSeries:
        """The series H(series) by Horner's rule (the stored polynomial, no root taken)."""
        result = constant(series.ring, self.coefficients[-1], series.trunc)
        for c in reversed(self.coefficients[:-1]):
            result = add(mul(result, series), constant(series.ring, c, series.trunc))
        return result

    def reversed_in_delta(self, delta_series: ExactSeries) -> ExactSeries:
        """
        Delta^h H(1/Delta) = sum_i c_i Delta^(h - i), a holomorphic series
        with constant term 1.

        Raises:
            PreconditionError: If the class polynomial has a fractional exponent
        """
        if self.omega_denominator != 1:
            raise PreconditionError(
                f"class polynomial of discriminant {self.disc} carries exponent "
                f"1/{self.omega_denominator}; choose a discriminant below -4"
            )
        ring = delta_series.ring
        trunc = delta_series.trunc
        result = constant(ring, self.coefficients[0], trunc)
        for c in self.coefficients[1:]:
            result = add(mul(result, delta_series), constant(ring, c, trunc))
        return result


def _expand_roots(roots: Sequence[mpmath.mpc]) -> List[mpmath.mpc]:
    poly = [mpmath.mpc(1)]
    for r in roots:
        poly = [mpmath.mpc(0)] + poly
        for i in range(len(poly) - 1):
            poly[i] -= r * poly[i + 1]
    return poly


def hilbert_class_polynomial(
    disc: int,
    digits: Optional[int] = None,
    max_digits: int = DEFAULT_MAX_DIGITS,
    max_j_terms: int = DEFAULT_MAX_J_TERMS,
) -> ClassPolynomial:
    """
    Compute prod_Q (X - j(tau_Q)) with integer coefficients.

    The working precision starts at 20 h + 30 digits (or digits if given)
    and doubles until every coefficient is within 10^-(digits/2) of an
    integer.

    Args:
        disc: Negative discriminant
        digits: Starting precision
        max_digits: Give up beyond this precision
        max_j_terms: Passed to eval_j_at_heegner

    Returns:
        ClassPolynomial: Monic integral polynomial with its omega denominator

    Raises:
        RecognitionError: If rounding never succeeds below max_digits
    """
    data = reduced_forms(disc)
    h = data.class_number
    omega = max(data.stabilizer_orders)
    digits = max(digits or 20 * h + 30, MIN_DIGITS)
    while digits <= max_digits:
        with mpmath.workdps(digits + 10):
            roots = [
                eval_j_at_heegner(heegner_point(Q), digits, max_j_terms)
                for Q in data.reduced_forms
            ]
            poly = _expand_roots(roots)
            rounded = [int(mpmath.nint(c.real)) for c in poly]
            residual = max(abs(c - r) for c, r in zip(poly, rounded))
            tolerance = mpmath.mpf(10) ** (-(digits // 2))
            if residual < tolerance:
                logger.debug("class polynomial of %d recognised at %d digits", disc, digits)
                return ClassPolynomial(disc, tuple(rounded), omega, float(residual), digits)
        logger.warning(
            "class polynomial of %d: rounding residual %s at %d digits; retrying",
            disc, mpmath.nstr(residual, 5), digits,
        )
        digits *= 2
    raise RecognitionError(
        f"class polynomial of {disc} not recognised below {max_digits} digits; "
        f"raise max_digits"
    )
