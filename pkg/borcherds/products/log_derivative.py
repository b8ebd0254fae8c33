#!/usr/bin/env python3
"""
Logarithmic derivatives of twisted Borcherds products.

The normalised logarithmic derivative L_D = (-1/sqrt(-D)) D(Psi)/Psi of the
product twisted by D has the integer q-expansion

    L_D = sum_{m, n >= 1} m A(D m^2, d) (-D/n) q^(mn),

which log_deriv evaluates directly. log_deriv_via_product recomputes it
from the product itself as a consistency check. lhat is the modification
used for the primes 2 and 3.
"""

import logging
from dataclasses import dataclass
from math import gcd
from typing import Optional

from ..errors import ConsistencyError, PreconditionError
from ..modforms import ClassPolynomial, PlusSpaceForm, delta, hilbert_class_polynomial
from ..qseries import (
    ZZ,
    ExactSeries,
    d_operator,
    invert,
    mul,
    pow_int,
    reduce_mod,
    scale,
    truncate,
)
from ..quadforms import kronecker, validate_twist
from .twisted import twist_field, twisted_product_psi

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LogDerivSeries:
    """L_D for f_d, exact over ZZ for the exponents 1..precision."""

    d: int
    D: int
    series: ExactSeries

    @property
    def precision(self) -> int:
        return self.series.trunc - 1

    def coefficient(self, n: int) -> int:
        return self.series.coefficient(n)

    def reduce(self, p: int, j: int = 1) -> ExactSeries:
        """The series modulo p^j."""
        return reduce_mod(self.series, p, j)


def log_deriv(f: PlusSpaceForm, D: int, T: int) -> LogDerivSeries:
    """
    Coefficients q^1..q^T of L_D from the coefficients of f.

    Args:
        f: Plus-space form f_d known to q^(D T^2)
        D: Twist discriminant
        T: Number of coefficients

    Returns:
        LogDerivSeries: Integer series with truncation T + 1

    Raises:
        PrecisionError: If f is not known far enough
    """
    if T < 1:
        raise PreconditionError(f"need at least one coefficient, got T = {T}")
    validate_twist(D, f.d)
    f.require_precision(D * T * T)
    values = [0] * (T + 1)
    for m in range(1, T + 1):
        a = f.coefficient(D * m * m)
        if not a:
            continue
        for n in range(1, T // m + 1):
            chi = kronecker(-D, n)
            if chi and gcd(n, D) > 1:
                raise ConsistencyError(f"(-{D}/{n}) = {chi} although gcd({n}, {D}) > 1")
            if chi:
                values[m * n] += m * a * chi
    return LogDerivSeries(f.d, D, ExactSeries.make(ZZ, values, 0, T + 1))


def log_deriv_via_product(f: PlusSpaceForm, D: int, T: int) -> LogDerivSeries:
    """
    Recompute L_D as (1 / (-sqrt(-D))) D(Psi) / Psi from the twisted product
    in the P_{-D} convention, and check that it equals log_deriv.

    Raises:
        ConsistencyError: If the two computations disagree or the quotient
            is not an integer series
    """
    direct = log_deriv(f, D, T)
    psi = twisted_product_psi(f, D, T, sign=-1)
    ring, t = twist_field(D, -1)
    quotient = mul(d_operator(psi), invert(psi))
    normaliser = ring.inverse(ring.coerce((0, -t)))
    quotient = truncate(scale(quotient, normaliser), T + 1)
    values = []
    for n, c in enumerate(quotient.coefficients(0, T + 1)):
        if c.y != 0 or c.x.denominator != 1:
            raise ConsistencyError(f"coefficient {ring.render(c)} of q^{n} is not an integer")
        values.append(int(c.x))
    via_product = LogDerivSeries(f.d, D, ExactSeries.make(ZZ, values, 0, T + 1))
    if via_product.series != direct.series:
        raise ConsistencyError(f"log derivative of the product twisted by {D} disagrees with the direct sum")
    return via_product


@dataclass(frozen=True)
class LhatContext:
    """
    Set-level data for the p = 2, 3 modification.

    h_S is the maximum of index * h(-dD) over the discriminants D of the set
    and index is [SL2(Z) : Gamma0(N)]. LhatContext.trivial() has both zero,
    which leaves L_D unchanged.
    """

    h_S: int
    index: int = 1

    @classmethod
    def trivial(cls) -> "LhatContext":
        return cls(0, 0)


def lhat_modulus_exponent(p: int, j: int) -> int:
    """lhat is taken modulo 2^(j+1) for p = 2 and 3^j for p = 3."""
    if p == 2:
        return j + 1
    if p == 3:
        return j
    raise PreconditionError(f"the modified series is defined for p in {{2, 3}}, got {p}")


def lhat(
    f: PlusSpaceForm,
    D: int,
    p: int,
    j: int,
    context: LhatContext,
    T: int,
    class_polynomial: Optional[ClassPolynomial] = None,
) -> ExactSeries:
    """
    The modified series L_D * Delta^(h_S p^(j-1)) * H_{-dD}(1/Delta)^(index p^(j-1))
    reduced modulo 2^(j+1) (p = 2) or 3^j (p = 3).

    H(1/Delta) is expanded as Delta^-h (Delta^h H(1/Delta)) so every factor is
    a power series.

    Args:
        f: Plus-space form f_d
        D: Twist discriminant
        p: 2 or 3
        j: Exponent of the congruence
        context: Set-level h_S and index
        T: Number of coefficients
        class_polynomial: Precomputed H_{-dD} (computed when omitted)

    Returns:
        ExactSeries: Over Residues(p, j + 1) or Residues(p, j), exponents <= T

    Raises:
        PreconditionError: If H_{-dD} has a fractional exponent or h_S is too small
    """
    if j < 1:
        raise PreconditionError(f"exponent j must be positive, got {j}")
    e = lhat_modulus_exponent(p, j)
    reduced = log_deriv(f, D, T).reduce(p, e)
    k = context.index * p ** (j - 1)
    delta_power = context.h_S * p ** (j - 1)
    if k == 0 and delta_power == 0:
        return reduced
    if class_polynomial is None:
        class_polynomial = hilbert_class_polynomial(-f.d * D)
    h = class_polynomial.degree
    if delta_power < h * k:
        raise PreconditionError(
            f"h_S = {context.h_S} is smaller than index * h({-f.d * D}) = {context.index * h}"
        )
    delta_mod = reduce_mod(delta(T + 1), p, e)
    factor = pow_int(class_polynomial.reversed_in_delta(delta_mod), k)
    if delta_power > h * k:
        factor = mul(factor, pow_int(delta_mod, delta_power - h * k))
    return truncate(mul(reduced, factor), T + 1)
