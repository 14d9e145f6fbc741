"""Exact rationals, a shared factorial table, and the extended factorial.

The extended factorial lambda(s) is s! for s >= 0 and has a simple pole at
every negative integer.  Quotients of such values are evaluated with a small
pole calculus: a pole upstairs cancels a pole downstairs (ratio of residues),
while a surplus pole downstairs sends the quotient to zero.
"""
from __future__ import annotations

import enum
import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Union

from .errors import InvalidArgument

Rational = Fraction
RationalLike = Union[int, Fraction, str]


def to_rational(x: RationalLike) -> Fraction:
    """Coerce an int, Fraction or "p/q" string.  Floats are refused."""
    if isinstance(x, bool):
        raise InvalidArgument("booleans are not rationals")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidArgument(f"not a rational literal: {x!r}") from exc
    raise InvalidArgument(f"cannot build an exact rational from {type(x).__name__}")


def format_rational(q: RationalLike) -> str:
    q = to_rational(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def sign(n: int) -> int:
    """(-1)**n as an int, valid for negative n."""
    return -1 if n % 2 else 1


class FactorialTable:
    """Memoized n! up to ``bound``; larger arguments are computed directly.

    Readers never take the lock; the table only grows, and growth happens
    under the lock, so a reader sees either the old or the extended list.
    """

    def __init__(self, bound: int = 512):
        self.bound = bound
        self._values: List[int] = [1]
        self._lock = threading.Lock()

    def __call__(self, n: int) -> int:
        if n < 0:
            raise InvalidArgument("factorial of a negative integer")
        values = self._values
        if n < len(values):
            return values[n]
        if n > self.bound:
            return math.factorial(n)
        with self._lock:
            values = list(self._values)
            while len(values) <= n:
                values.append(values[-1] * len(values))
            self._values = values
        return values[n]


factorial = FactorialTable()


class Kind(str, enum.Enum):
    FINITE = "Finite"
    POLE = "Pole"


@dataclass(frozen=True)
class ExtFactorialValue:
    kind: Kind
    value: Fraction

    @property
    def is_pole(self) -> bool:
        return self.kind is Kind.POLE

    def __str__(self) -> str:
        return f"{self.kind.value}({format_rational(self.value)})"


def ext_factorial(s: int) -> ExtFactorialValue:
    if s >= 0:
        return ExtFactorialValue(Kind.FINITE, Fraction(factorial(s)))
    n = -s
    return ExtFactorialValue(Kind.POLE, Fraction(sign(n - 1), factorial(n - 1)))


def binomial(n: int, k: int) -> Fraction:
    if n < 0:
        raise InvalidArgument("binomial expects n >= 0; use ext_binomial")
    if k < 0 or k > n:
        return Fraction(0)
    return Fraction(math.comb(n, k))


def ext_binomial(a: int, b: int) -> Fraction:
    """lambda(a) / (lambda(b) * lambda(a - b)) under pole arithmetic."""
    top = ext_factorial(a)
    left, right = ext_factorial(b), ext_factorial(a - b)
    poles_up = int(top.is_pole)
    poles_down = int(left.is_pole) + int(right.is_pole)
    if poles_down > poles_up:
        return Fraction(0)
    # a negative a forces b or a-b negative, so poles_up > poles_down never occurs
    return top.value / (left.value * right.value)


def mod_rational(q: RationalLike, m: int) -> int:
    """p * q^{-1} mod m for a rational p/q with gcd(q, m) = 1."""
    q = to_rational(q)
    if math.gcd(q.denominator, m) != 1:
        raise InvalidArgument(f"denominator {q.denominator} is not invertible mod {m}")
    return q.numerator * pow(q.denominator, -1, m) % m
