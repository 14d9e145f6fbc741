"""The cyclic ordering 0, 1, 2, ..., -2, -1 of the integers and sums over it.

Every nonnegative integer precedes every negative one; within each run the
usual order applies.  A segment [a, b] taken in this order is either an
ordinary finite run or an infinite set that wraps "through infinity".
Sums over arbitrary segments are defined by a generating polynomial F with
F(x+1) - F(x) = f(x), as F(b+1) - F(a).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .errors import InvalidArgument
from .exact import ext_factorial
from .poly import Polynomial, indefinite_sum


def precedes(a: int, b: int) -> bool:
    """Strict order: true iff a comes before b."""
    if (a >= 0) == (b >= 0):
        return a < b
    return a >= 0


def precedes_eq(a: int, b: int) -> bool:
    return a == b or precedes(a, b)


class SegmentKind(str, enum.Enum):
    FINITE_RUN = "FiniteRun"
    WRAP_INFINITE = "WrapInfinite"


@dataclass(frozen=True)
class ZSegment:
    a: int
    b: int
    kind: SegmentKind

    @property
    def is_finite(self) -> bool:
        return self.kind is SegmentKind.FINITE_RUN

    def enumerate(self) -> Iterator[int]:
        if not self.is_finite:
            raise InvalidArgument("cannot enumerate an infinite segment")
        return iter(range(self.a, self.b + 1))

    def __contains__(self, x: int) -> bool:
        if self.is_finite:
            return self.a <= x <= self.b
        if precedes_eq(self.a, self.b):
            return precedes_eq(self.a, x) and precedes_eq(x, self.b)
        # b precedes a: the complement of the open stretch between b and a
        return precedes_eq(self.a, x) or precedes_eq(x, self.b)


def segment(a: int, b: int) -> ZSegment:
    same_run = (a >= 0) == (b >= 0)
    if same_run and a <= b:
        return ZSegment(a, b, SegmentKind.FINITE_RUN)
    return ZSegment(a, b, SegmentKind.WRAP_INFINITE)


@dataclass(frozen=True)
class SummandSpec:
    """A polynomial summand f together with F satisfying F(x+1) - F(x) = f(x)."""

    term: Polynomial
    generating: Polynomial

    def __post_init__(self):
        if self.generating.shift(1) - self.generating != self.term:
            raise InvalidArgument("generating(x+1) - generating(x) != term(x)")

    @classmethod
    def from_poly(cls, p: Polynomial) -> "SummandSpec":
        # indefinite_sum gives P(x) - P(x-1) = p(x), so F(x) = P(x-1)
        return cls(p, indefinite_sum(p).shift(-1))

    def negated(self) -> "SummandSpec":
        """The summand x -> f(-x), with G(x) = -F(1 - x)."""
        g = -self.generating(Polynomial((1, -1)))
        return SummandSpec(self.term.reflect(), g)


def range_sum(f: SummandSpec, a: int, b: int) -> Fraction:
    return f.generating(b + 1) - f.generating(a)


def enumerate_sum(f: SummandSpec, a: int, b: int) -> Fraction:
    """Direct summation oracle, finite runs only."""
    return sum((f.term(u) for u in segment(a, b).enumerate()), Fraction(0))


def sum_over_integers(f: SummandSpec) -> Fraction:
    """The sum over all of Z vanishes identically."""
    return Fraction(0)


def verify_product_reflection(n: int) -> bool:
    """Product of u over u = 0..-n against (prod_{u=1}^{n-1} (-u))^{-1}.

    The left side is the factor 0 at u = 0 times the pole of lambda(-n),
    i.e. the residue of lambda at -n.
    """
    if n < 1:
        raise InvalidArgument("n must be positive")
    right = Fraction(1)
    for u in range(1, n):
        right *= -u
    left = ext_factorial(-n)
    return left.is_pole and left.value == 1 / right
