#!/usr/bin/env python3
"""
Twisted Borcherds products.

The twisted product of a plus-space form f_d by a positive discriminant D
is prod_m P(q^m)^A(D m^2, d), where the factor P is the rational function
exp(-sqrt(D) sum_r (D/r) t^r / r) over Q(sqrt(D)). The sign argument
selects the P_{-D} convention (radical sqrt(-D), character (-D/r)).
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import mpmath

from ..errors import PreconditionError, RecognitionError
from ..qseries import ExactSeries, QuadExt, QuadNumber, add, dilate, exp_series, scale, truncate
from ..quadforms import (
    genus_character,
    heegner_point,
    is_discriminant,
    kronecker,
    reduced_forms,
    validate_twist,
)
from ..utils.arith import is_square, squarefree_decomposition
from ..modforms import PlusSpaceForm, eval_j_at_heegner, j_invariant
from ..modforms.heegner import MIN_DIGITS

logger = logging.getLogger(__name__)

DENOMINATOR_BOUND = 10 ** 6
GUARD_DIGITS = 40


def twist_field(D: int, sign: int = 1) -> Tuple[QuadExt, int]:
    """
    The field Q(sqrt(sign * D)) and the integer t with sqrt(sign * D) = t sqrt(r).

    Returns:
        tuple: (QuadExt(r), t)
    """
    if sign not in (1, -1):
        raise PreconditionError(f"sign must be +1 or -1, got {sign}")
    r, t = squarefree_decomposition(sign * D)
    return QuadExt(r), t


def log_pd_series(D: int, T: int, sign: int = 1) -> ExactSeries:
    """log P(t) = -sqrt(sign D) sum_{r>=1} (sign D / r) t^r / r, to truncation T."""
    if D <= 1 or not is_discriminant(D) or is_square(D):
        raise PreconditionError(f"D = {D} is not a positive non-square discriminant")
    ring, t = twist_field(D, sign)
    coeffs = [ring.zero] + [
        QuadNumber(Fraction(0), Fraction(-t * kronecker(sign * D, r), r)) for r in range(1, T)
    ]
    return ExactSeries.make(ring, coeffs, 0, T)


def pd_series(D: int, T: int, sign: int = 1) -> ExactSeries:
    """
    Expand P_D(t) (sign = +1) or P_{-D}(t) (sign = -1) exactly to truncation T.

    Args:
        D: Positive non-square discriminant
        T: Truncation
        sign: Convention selector

    Returns:
        ExactSeries: Over QuadExt(squarefree part of sign * D)
    """
    return exp_series(log_pd_series(D, T, sign))


def twisted_log(f: PlusSpaceForm, D: int, T: int, sign: int = 1) -> ExactSeries:
    """sum_{m=1}^{T} A(D m^2, d) log P(q^m), known for exponents <= T."""
    f.require_precision(D * T * T)
    log_p = log_pd_series(D, T + 1, sign)
    total = ExactSeries.make(log_p.ring, [], 0, T + 1)
    for m in range(1, T + 1):
        a = f.coefficient(D * m * m)
        if a:
            total = add(total, scale(truncate(dilate(log_p, m), T + 1), a))
    return total


def twisted_product_psi(f: PlusSpaceForm, D: int, T: int, sign: int = 1) -> ExactSeries:
    """
    The twisted product prod_{m=1}^{T} P(q^m)^A(D m^2, d) up to q^T.

    The exponents A(D m^2, d) are far too large for repeated squaring, so the
    product is evaluated as the exponential of the summed logarithms.

    Raises:
        PrecisionError: If f is known below q^(D T^2)
    """
    if f.d:
        validate_twist(D, f.d)
    return exp_series(twisted_log(f, D, T, sign))


# numeric class polynomial expansion ------------------------------------


@dataclass(frozen=True)
class TwistedClassExpansion:
    """
    H_{D,-d}(j) recognised from numerical values of j.

    residual is the largest distance between a computed coefficient and the
    rational it was recognised as; digits is the precision that succeeded.
    """

    D: int
    d: int
    series: ExactSeries
    residual: float = field(default=0.0, compare=False)
    digits: int = field(default=0, compare=False)


def _mp_mul(a: Sequence, b: Sequence, n: int) -> List:
    out = [mpmath.mpc(0)] * n
    for i, x in enumerate(a[:n]):
        if x == 0:
            continue
        for k, y in enumerate(b[: n - i]):
            out[i + k] += x * y
    return out


def _mp_inverse(a: Sequence, n: int) -> List:
    """Inverse of a power series with constant term 1."""
    out = [mpmath.mpc(1)] + [mpmath.mpc(0)] * (n - 1)
    for m in range(1, n):
        out[m] = -mpmath.fsum(a[k] * out[m - k] for k in range(1, min(m, len(a) - 1) + 1))
    return out


def _mp_to_fraction(x) -> Fraction:
    numerator, denominator = mpmath.libmp.to_rational(mpmath.mpf(x)._mpf_)
    value = Fraction(int(numerator), int(denominator))
    return value.limit_denominator(DENOMINATOR_BOUND)


def _integer_digits(x) -> int:
    """Decimal digits of x before the point."""
    if not x:
        return 0
    return max(0, int(mpmath.floor(mpmath.log10(abs(x)))) + 1)


def _recognise(value, digits: int) -> Tuple[Fraction, mpmath.mpf]:
    """
    The rational with denominator at most DENOMINATOR_BOUND closest to value.

    With digits significant digits, value keeps digits - _integer_digits(value)
    digits after the point. At least GUARD_DIGITS of them are required, and
    the rational must lie within 10^-(half of them) of value.

    Returns:
        tuple: (rational, absolute residual)

    Raises:
        RecognitionError: If too few digits remain after the point or no
            such rational is close enough
    """
    spare = digits - _integer_digits(value)
    if spare < GUARD_DIGITS:
        raise RecognitionError(
            f"{mpmath.nstr(value, 15)} keeps {spare} digits after the point at {digits} digits"
        )
    rational = _mp_to_fraction(value)
    error = abs(mpmath.mpf(rational.numerator) / rational.denominator - value)
    if error > mpmath.mpf(10) ** -(spare // 2):
        raise RecognitionError(
            f"{mpmath.nstr(value, 15)} is not within 10^-{spare // 2} of a small-denominator rational"
        )
    return rational, error


def _class_polynomial_series(j_coeffs, factors, n: int) -> List:
    """prod (q (j - j_Q))^chi as a power series with n coefficients."""
    series = [mpmath.mpc(1)] + [mpmath.mpc(0)] * (n - 1)
    for value, chi in factors:
        if chi == 0:
            continue
        factor = [mpmath.mpc(c) for c in j_coeffs[:n]]
        factor[1] -= value
        if chi < 0:
            factor = _mp_inverse(factor, n)
        series = _mp_mul(series, factor, n)
    return series


def _conjugate_pair(j_coeffs, points, characters, digits: int, n: int) -> Tuple[List, List]:
    """Expansions for chi and for -chi at the given precision."""
    values = [eval_j_at_heegner(point, digits) for point in points]
    plus = _class_polynomial_series(j_coeffs, list(zip(values, characters)), n)
    minus = _class_polynomial_series(j_coeffs, [(v, -c) for v, c in zip(values, characters)], n)
    return plus, minus


def _coefficient_digits(j_coeffs, points, characters, n: int) -> int:
    """Digits before the point of the largest coefficient, from a low-precision pass."""
    with mpmath.workdps(MIN_DIGITS + 10):
        plus, minus = _conjugate_pair(j_coeffs, points, characters, MIN_DIGITS, n)
        return max(_integer_digits(abs(c)) for c in plus + minus)


def recognise_twisted_class_polynomial(
    D: int, d: int, T: int, digits: Optional[int] = None, max_digits: int = 2000
) -> TwistedClassExpansion:
    """
    q-expansion of H_{D,-d}(j) = prod_Q (j - j(tau_Q))^chi_D(Q) up to q^T.

    The j(tau_Q) are evaluated numerically. The expansion is computed twice,
    once with chi and once with -chi (the Galois conjugate); half the sum and
    the sqrt(r)-scaled half difference of the two are rational and are
    recognised by continued fractions with denominators up to 10^6.

    The starting precision covers the size of the largest coefficient plus
    twice GUARD_DIGITS (and at least 20 h + 60 or digits if given); it
    doubles after every failed recognition.

    Args:
        D: Positive twist discriminant, prime to d
        d: Plus-space index, -dD the discriminant of the forms
        T: Largest exponent wanted
        digits: Smallest starting precision
        max_digits: Precision ceiling for the doubling retries

    Returns:
        TwistedClassExpansion: Series over QuadExt(squarefree part of D),
            exponents <= T known, with the largest recognition residual

    Raises:
        RecognitionError: If recognition fails below max_digits
    """
    validate_twist(D, d)
    ring, _ = twist_field(D, 1)
    data = reduced_forms(-d * D)
    if max(data.stabilizer_orders) > 1:
        raise PreconditionError(f"discriminant {-d * D} has forms with nontrivial stabilizers")
    points = [heegner_point(Q) for Q in data.reduced_forms]
    characters = [genus_character(Q, D, d) for Q in data.reduced_forms]
    order = sum(characters)
    n = T + 1 + abs(order)
    j_coeffs = j_invariant(n + 1).coeffs
    size = _coefficient_digits(j_coeffs, points, characters, n)
    digits = max(digits or 20 * data.class_number + 60, size + 2 * GUARD_DIGITS)
    while digits <= max_digits:
        try:
            with mpmath.workdps(digits + 10):
                plus, minus = _conjugate_pair(j_coeffs, points, characters, digits, n)
                root = mpmath.sqrt(ring.radicand)
                coeffs = []
                residual = mpmath.mpf(0)
                for c, c_conj in zip(plus, minus):
                    x, error_x = _recognise((c.real + c_conj.real) / 2, digits)
                    y, error_y = _recognise((c.real - c_conj.real) / (2 * root), digits)
                    residual = max(residual, error_x, error_y)
                    coeffs.append(QuadNumber(x, y))
            logger.debug(
                "recognised H_{%d,%d}(j) to q^%d at %d digits, residual %s",
                D, -d, T, digits, mpmath.nstr(residual, 5),
            )
            series = ExactSeries.make(ring, coeffs, -order, T + 1)
            return TwistedClassExpansion(D, d, series, float(residual), digits)
        except RecognitionError as e:
            logger.warning("recognition at %d digits failed (%s); retrying", digits, e)
            digits *= 2
    raise RecognitionError(
        f"H_{{{D},{-d}}}(j) not recognised below {max_digits} digits"
    )


def twisted_class_polynomial_expansion(
    D: int, d: int, T: int, digits: Optional[int] = None, max_digits: int = 2000
) -> ExactSeries:
    """The series of recognise_twisted_class_polynomial."""
    return recognise_twisted_class_polynomial(D, d, T, digits, max_digits).series
