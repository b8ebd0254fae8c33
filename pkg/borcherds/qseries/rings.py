#!/usr/bin/env python3
"""
Coefficient rings for exact q-series.

This module defines the abstract ring interface and the four tagged rings
the series arithmetic works over: the integers, the rationals, a real or
imaginary quadratic extension Q(sqrt(r)), and the residues modulo p**j.
Each ring knows how to multiply whole coefficient sequences, so long
products can use packed big-integer multiplication.
"""

import re
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, List, NamedTuple, Sequence

from ..errors import NotInvertibleError, PreconditionError
from ..utils.arith import inverse_mod, is_prime, is_squarefree, lcm_of
from .packing import mul_integer_lists, mul_residue_lists


class CoefficientRing(ABC):
    """Abstract base class for the coefficient rings of ExactSeries."""

    contains_rationals = False

    @property
    @abstractmethod
    def tag(self) -> str:
        """Short printable name of the ring."""

    @property
    def zero(self) -> Any:
        return self.coerce(0)

    @property
    def one(self) -> Any:
        return self.coerce(1)

    @abstractmethod
    def coerce(self, value: Any) -> Any:
        """Convert an int, Fraction or ring element to canonical form."""

    @abstractmethod
    def add(self, x: Any, y: Any) -> Any:
        pass

    @abstractmethod
    def neg(self, x: Any) -> Any:
        pass

    @abstractmethod
    def mul(self, x: Any, y: Any) -> Any:
        pass

    @abstractmethod
    def is_unit(self, x: Any) -> bool:
        pass

    @abstractmethod
    def inverse(self, x: Any) -> Any:
        """Multiplicative inverse; raises NotInvertibleError for non-units."""

    def sub(self, x: Any, y: Any) -> Any:
        return self.add(x, self.neg(y))

    def is_zero(self, x: Any) -> bool:
        return x == self.zero

    def divide_by_integer(self, x: Any, n: int) -> Any:
        """Divide by a nonzero integer (exp/log recurrences)."""
        return self.mul(x, self.inverse(self.coerce(n)))

    def render(self, x: Any) -> str:
        return str(x)

    def parse(self, text: str) -> Any:
        return self.coerce(Fraction(text.strip()))

    def mul_sequences(self, a: Sequence[Any], b: Sequence[Any], n: int) -> List[Any]:
        """
        Truncated Cauchy product of two coefficient sequences.

        Args:
            a: First sequence, constant term first
            b: Second sequence
            n: Number of output coefficients

        Returns:
            list: The first n coefficients of the product
        """
        out = [self.zero] * n
        for i, x in enumerate(a[:n]):
            if self.is_zero(x):
                continue
            for j, y in enumerate(b[: n - i]):
                out[i + j] = self.add(out[i + j], self.mul(x, y))
        return out

    def __str__(self) -> str:
        return self.tag


@dataclass(frozen=True)
class Integers(CoefficientRing):
    """The ring Z; elements are Python ints."""

    @property
    def tag(self) -> str:
        return "ZZ"

    def coerce(self, value: Any) -> int:
        if isinstance(value, Fraction):
            if value.denominator != 1:
                raise PreconditionError(f"{value} is not an integer")
            return int(value.numerator)
        return int(value)

    def add(self, x: int, y: int) -> int:
        return x + y

    def neg(self, x: int) -> int:
        return -x

    def mul(self, x: int, y: int) -> int:
        return x * y

    def is_unit(self, x: int) -> bool:
        return x in (1, -1)

    def inverse(self, x: int) -> int:
        if x not in (1, -1):
            raise NotInvertibleError(f"{x} is not a unit in ZZ")
        return x

    def divide_by_integer(self, x: int, n: int) -> int:
        q, r = divmod(x, n)
        if r:
            raise NotInvertibleError(f"{x} is not divisible by {n} in ZZ")
        return q

    def parse(self, text: str) -> int:
        return int(text.strip())

    def mul_sequences(self, a: Sequence[int], b: Sequence[int], n: int) -> List[int]:
        return mul_integer_lists(a, b, n)


@dataclass(frozen=True)
class Rationals(CoefficientRing):
    """The field Q; elements are fractions.Fraction."""

    contains_rationals = True

    @property
    def tag(self) -> str:
        return "QQ"

    def coerce(self, value: Any) -> Fraction:
        return Fraction(value)

    def add(self, x: Fraction, y: Fraction) -> Fraction:
        return x + y

    def neg(self, x: Fraction) -> Fraction:
        return -x

    def mul(self, x: Fraction, y: Fraction) -> Fraction:
        return x * y

    def is_unit(self, x: Fraction) -> bool:
        return x != 0

    def inverse(self, x: Fraction) -> Fraction:
        if x == 0:
            raise NotInvertibleError("0 is not invertible in QQ")
        return 1 / x

    def divide_by_integer(self, x: Fraction, n: int) -> Fraction:
        return x / n

    def mul_sequences(
        self, a: Sequence[Fraction], b: Sequence[Fraction], n: int
    ) -> List[Fraction]:
        a, b = a[:n], b[:n]
        if not a or not b:
            return [Fraction(0)] * n
        da = lcm_of(x.denominator for x in a)
        db = lcm_of(y.denominator for y in b)
        na = [x.numerator * (da // x.denominator) for x in a]
        nb = [y.numerator * (db // y.denominator) for y in b]
        denominator = da * db
        return [Fraction(c, denominator) for c in mul_integer_lists(na, nb, n)]


class QuadNumber(NamedTuple):
    """The number x + y*sqrt(r) of a fixed quadratic field."""

    x: Fraction
    y: Fraction


_RADICAL_PATTERN = re.compile(r"^(-?)(?:([\d/]+)\*)?sqrt\((-?\d+)\)$")


@dataclass(frozen=True)
class QuadExt(CoefficientRing):
    """
    The quadratic field Q(sqrt(radicand)).

    The radicand is a squarefree integer other than 0 and 1; negative
    radicands give imaginary quadratic fields.
    """

    radicand: int
    contains_rationals = True

    def __post_init__(self):
        if self.radicand in (0, 1) or not is_squarefree(self.radicand):
            raise PreconditionError(
                f"QuadExt needs a squarefree radicand other than 0, 1; got {self.radicand}"
            )

    @property
    def tag(self) -> str:
        return f"QQ(sqrt({self.radicand}))"

    def coerce(self, value: Any) -> QuadNumber:
        if isinstance(value, QuadNumber):
            return QuadNumber(Fraction(value.x), Fraction(value.y))
        if isinstance(value, tuple) and len(value) == 2:
            return QuadNumber(Fraction(value[0]), Fraction(value[1]))
        return QuadNumber(Fraction(value), Fraction(0))

    def add(self, u: QuadNumber, v: QuadNumber) -> QuadNumber:
        return QuadNumber(u.x + v.x, u.y + v.y)

    def neg(self, u: QuadNumber) -> QuadNumber:
        return QuadNumber(-u.x, -u.y)

    def mul(self, u: QuadNumber, v: QuadNumber) -> QuadNumber:
        return QuadNumber(
            u.x * v.x + self.radicand * u.y * v.y, u.x * v.y + u.y * v.x
        )

    def norm(self, u: QuadNumber) -> Fraction:
        return u.x * u.x - self.radicand * u.y * u.y

    def conjugate(self, u: QuadNumber) -> QuadNumber:
        return QuadNumber(u.x, -u.y)

    def is_unit(self, u: QuadNumber) -> bool:
        return u.x != 0 or u.y != 0

    def inverse(self, u: QuadNumber) -> QuadNumber:
        n = self.norm(u)
        if n == 0:
            raise NotInvertibleError("0 is not invertible")
        return QuadNumber(u.x / n, -u.y / n)

    def divide_by_integer(self, u: QuadNumber, n: int) -> QuadNumber:
        return QuadNumber(u.x / n, u.y / n)

    def render(self, u: QuadNumber) -> str:
        if u.y == 0:
            return str(u.x)
        radical = f"sqrt({self.radicand})"
        y_abs = abs(u.y)
        y_text = radical if y_abs == 1 else f"{y_abs}*{radical}"
        if u.x == 0:
            return f"({'-' if u.y < 0 else ''}{y_text})"
        return f"({u.x} {'-' if u.y < 0 else '+'} {y_text})"

    def parse(self, text: str) -> QuadNumber:
        body = text.strip()
        if body.startswith("(") and body.endswith(")"):
            body = body[1:-1].strip()
        if "sqrt" not in body:
            return self.coerce(Fraction(body))
        x, negate = Fraction(0), False
        for sign in (" + ", " - "):
            head, found, tail = body.rpartition(sign)
            if found:
                x, negate, body = Fraction(head.strip()), sign == " - ", tail.strip()
                break
        match = _RADICAL_PATTERN.match(body.replace(" ", ""))
        if not match or int(match.group(3)) != self.radicand:
            raise PreconditionError(f"cannot parse {text!r} as an element of {self.tag}")
        y = Fraction(match.group(2)) if match.group(2) else Fraction(1)
        if match.group(1) == "-":
            y = -y
        return QuadNumber(x, -y if negate else y)

    def mul_sequences(
        self, a: Sequence[QuadNumber], b: Sequence[QuadNumber], n: int
    ) -> List[QuadNumber]:
        rationals = Rationals()
        ax, ay = [u.x for u in a[:n]], [u.y for u in a[:n]]
        bx, by = [v.x for v in b[:n]], [v.y for v in b[:n]]
        xx = rationals.mul_sequences(ax, bx, n)
        yy = rationals.mul_sequences(ay, by, n)
        mixed = rationals.mul_sequences(
            [s + t for s, t in zip(ax, ay)], [s + t for s, t in zip(bx, by)], n
        )
        return [
            QuadNumber(xx[i] + self.radicand * yy[i], mixed[i] - xx[i] - yy[i])
            for i in range(n)
        ]


@dataclass(frozen=True)
class Residues(CoefficientRing):
    """The ring Z/p**j; elements are canonical representatives in [0, p**j)."""

    p: int
    j: int = 1
    modulus: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not is_prime(self.p):
            raise PreconditionError(f"{self.p} is not prime")
        if self.j < 1:
            raise PreconditionError(f"exponent must be positive, got {self.j}")
        object.__setattr__(self, "modulus", self.p ** self.j)

    @property
    def tag(self) -> str:
        return f"Z/{self.p}^{self.j}"

    def coerce(self, value: Any) -> int:
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise NotInvertibleError(
                    f"denominator of {value} is not invertible modulo {self.modulus}"
                )
            return (
                value.numerator * inverse_mod(value.denominator, self.modulus)
            ) % self.modulus
        return int(value) % self.modulus

    def add(self, x: int, y: int) -> int:
        return (x + y) % self.modulus

    def neg(self, x: int) -> int:
        return (-x) % self.modulus

    def mul(self, x: int, y: int) -> int:
        return (x * y) % self.modulus

    def is_unit(self, x: int) -> bool:
        return x % self.p != 0

    def inverse(self, x: int) -> int:
        if x % self.p == 0:
            raise NotInvertibleError(f"{x} is not a unit modulo {self.modulus}")
        return inverse_mod(x, self.modulus)

    def parse(self, text: str) -> int:
        return self.coerce(int(text.strip()))

    def mul_sequences(self, a: Sequence[int], b: Sequence[int], n: int) -> List[int]:
        return mul_residue_lists(a, b, n, self.modulus)


ZZ = Integers()
QQ = Rationals()
