#!/usr/bin/env python3
"""
Positive definite binary quadratic forms.

This module contains Gauss reduction, enumeration of the reduced forms of a
negative discriminant, class numbers and the Heegner points attached to
forms.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt
from typing import Tuple

import mpmath

from ..errors import PreconditionError
from .symbols import fundamental_part, is_discriminant

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class QuadForm:
    """The form a x^2 + b xy + c y^2."""

    a: int
    b: int
    c: int

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def is_positive_definite(self) -> bool:
        return self.a > 0 and self.discriminant < 0

    def is_primitive(self) -> bool:
        return gcd(gcd(self.a, self.b), self.c) == 1

    def is_reduced(self) -> bool:
        a, b, c = self.a, self.b, self.c
        if not (abs(b) <= a <= c):
            return False
        return b >= 0 or (abs(b) != a and a != c)

    def __call__(self, x: int, y: int) -> int:
        return self.a * x * x + self.b * x * y + self.c * y * y

    def act(self, alpha: int, beta: int, gamma: int, delta: int) -> "QuadForm":
        """The form (x, y) -> Q(alpha x + beta y, gamma x + delta y)."""
        a, b, c = self.a, self.b, self.c
        return QuadForm(
            self(alpha, gamma),
            2 * a * alpha * beta + b * (alpha * delta + beta * gamma) + 2 * c * gamma * delta,
            self(beta, delta),
        )

    def __str__(self) -> str:
        return f"[{self.a},{self.b},{self.c}]"


@dataclass(frozen=True)
class HeegnerPoint:
    """The point tau = (-b + i sqrt(d)) / (2a) of the upper half plane."""

    a: int
    b: int
    d: int

    def tau(self) -> mpmath.mpc:
        """tau at the current mpmath working precision."""
        return mpmath.mpc(-self.b, mpmath.sqrt(self.d)) / (2 * self.a)

    @property
    def imaginary_part(self) -> mpmath.mpf:
        return mpmath.sqrt(self.d) / (2 * self.a)


@dataclass(frozen=True)
class FormClassData:
    """Reduced representatives of the primitive classes of a discriminant."""

    discriminant: int
    reduced_forms: Tuple[QuadForm, ...]
    stabilizer_orders: Tuple[int, ...]

    @property
    def class_number(self) -> int:
        return len(self.reduced_forms)


def _normalized(a: int, b: int, c: int) -> Tuple[int, int, int]:
    if -a < b <= a:
        return a, b, c
    r = (a - b) // (2 * a)
    return a, b + 2 * r * a, a * r * r + b * r + c


def reduce(Q: QuadForm) -> QuadForm:
    """
    Return the reduced form SL2(Z)-equivalent to Q.

    Raises:
        PreconditionError: If Q is not positive definite
    """
    if not Q.is_positive_definite():
        raise PreconditionError(f"{Q} is not positive definite")
    a, b, c = _normalized(Q.a, Q.b, Q.c)
    while a > c or (a == c and b < 0):
        s = (c + b) // (2 * c)
        a, b, c = c, -b + 2 * s * c, c * s * s - b * s + a
    return QuadForm(*_normalized(a, b, c))


def stabilizer_order(Q: QuadForm) -> int:
    """Order of the stabilizer of a reduced form in PSL2(Z)."""
    if Q.a == Q.b == Q.c:
        return 3
    if Q.b == 0 and Q.a == Q.c:
        return 2
    return 1


def _check_discriminant(disc: int) -> None:
    if disc >= 0 or not is_discriminant(disc):
        raise PreconditionError(f"{disc} is not a negative discriminant")


def hurwitz_forms(disc: int) -> Tuple[QuadForm, ...]:
    """All reduced forms of discriminant disc, imprimitive ones included."""
    _check_discriminant(disc)
    forms = []
    for a in range(1, isqrt(-disc // 3) + 1):
        for b in range(-a + 1, a + 1):
            if (b - disc) % 2:
                continue
            numerator = b * b - disc
            if numerator % (4 * a):
                continue
            c = numerator // (4 * a)
            if c < a or (b < 0 and a == c):
                continue
            forms.append(QuadForm(a, b, c))
    return tuple(sorted(forms))


@lru_cache(maxsize=None)
def reduced_forms(disc: int) -> FormClassData:
    """
    Reduced primitive forms of a negative discriminant.

    Args:
        disc: Negative integer congruent to 0 or 1 mod 4

    Returns:
        FormClassData: Forms sorted by (a, b, c) with their stabilizer orders
    """
    forms = tuple(Q for Q in hurwitz_forms(disc) if Q.is_primitive())
    logger.debug("discriminant %d has %d reduced primitive forms", disc, len(forms))
    return FormClassData(disc, forms, tuple(stabilizer_order(Q) for Q in forms))


def class_number(disc: int) -> int:
    """Number of primitive classes of discriminant disc (the order's class number)."""
    return reduced_forms(disc).class_number


def field_class_number(disc: int) -> int:
    """Class number of the maximal order of Q(sqrt(disc))."""
    D0, _ = fundamental_part(disc)
    return class_number(D0)


def heegner_point(Q: QuadForm) -> HeegnerPoint:
    """The root of Q(tau, 1) = 0 in the upper half plane."""
    if not Q.is_positive_definite():
        raise PreconditionError(f"{Q} is not positive definite")
    return HeegnerPoint(Q.a, Q.b, -Q.discriminant)
