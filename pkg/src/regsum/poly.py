"""Dense exact polynomials and the summation toolkit built on them.

Coefficients are Fractions stored in ascending degree order.  The summation
helpers follow the power-sum convention B_k(n) = 1^k + ... + n^k throughout.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple, Union

from .errors import InvalidArgument, NotQuasiOdd
from .exact import RationalLike, format_rational, sign, to_rational
from .louivre import bernoulli_number

Number = Union[int, Fraction]


class Polynomial:
    """Immutable univariate polynomial with rational coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coefficients: Iterable[RationalLike] = ()):
        c = [to_rational(a) for a in coefficients]
        while c and c[-1] == 0:
            c.pop()
        self._c: Tuple[Fraction, ...] = tuple(c)

    @classmethod
    def x(cls) -> "Polynomial":
        return cls((0, 1))

    @classmethod
    def constant(cls, c: RationalLike) -> "Polynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: RationalLike = 1) -> "Polynomial":
        if k < 0:
            raise InvalidArgument("monomial degree must be non-negative")
        return cls([0] * k + [c])

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "Polynomial":
        return cls(to_rational(s) for s in data)

    @property
    def coefficients(self) -> Tuple[Fraction, ...]:
        return self._c

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self._c) - 1

    def coefficient(self, k: int) -> Fraction:
        return self._c[k] if 0 <= k < len(self._c) else Fraction(0)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == Polynomial.constant(other)._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("Polynomial", self._c))

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Polynomial.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self._c), len(other._c))
        return Polynomial(self.coefficient(i) + other.coefficient(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(-a for a in self._c)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self._c or not other._c:
            return Polynomial()
        out = [Fraction(0)] * (len(self._c) + len(other._c) - 1)
        for i, a in enumerate(self._c):
            if a:
                for j, b in enumerate(other._c):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, c: Number) -> "Polynomial":
        c = to_rational(c)
        return Polynomial(a / c for a in self._c)

    def __pow__(self, k: int) -> "Polynomial":
        if not isinstance(k, int) or k < 0:
            raise InvalidArgument("polynomial powers must be non-negative integers")
        result, base = Polynomial.constant(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x):
        if isinstance(x, Polynomial):
            result = Polynomial()
            for a in reversed(self._c):
                result = result * x + a
            return result
        if isinstance(x, float):
            acc = 0.0
            for a in reversed(self._c):
                acc = acc * x + float(a)
            return acc
        x = to_rational(x)
        acc = Fraction(0)
        for a in reversed(self._c):
            acc = acc * x + a
        return acc

    def shift(self, c: RationalLike) -> "Polynomial":
        """p(x + c)."""
        return self(Polynomial((c, 1)))

    def scale(self, c: RationalLike) -> "Polynomial":
        """p(c * x)."""
        c = to_rational(c)
        return Polynomial(a * c**i for i, a in enumerate(self._c))

    def reflect(self) -> "Polynomial":
        """p(-x)."""
        return self.scale(-1)

    def derivative(self) -> "Polynomial":
        return Polynomial(i * a for i, a in enumerate(self._c) if i)

    def antiderivative(self) -> "Polynomial":
        return Polynomial([0] + [a / (i + 1) for i, a in enumerate(self._c)])

    def to_json(self) -> List[str]:
        return [format_rational(a) for a in self._c]

    def render(self, var: str = "x") -> str:
        """Human/DSL-readable form, highest degree first."""
        if not self._c:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            a = self._c[k]
            if not a:
                continue
            mag = abs(a)
            if k == 0:
                body = format_rational(mag)
            else:
                power = var if k == 1 else f"{var}^{k}"
                body = power if mag == 1 else f"{format_rational(mag)}*{power}"
            if not parts:
                parts.append(("-" if a < 0 else "") + body)
            else:
                parts.append(("- " if a < 0 else "+ ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({self.render()})"

    __str__ = render


X = Polynomial.x()


def bernoulli_polynomial(k: int) -> Polynomial:
    """The power-sum polynomial B_k(n) = sum_{u=1}^{n} u^k."""
    if k < 0:
        raise InvalidArgument("degree must be non-negative")
    coeffs = [Fraction(0)] * (k + 2)
    for u in range(k + 1):
        coeffs[k + 1 - u] = math.comb(k + 1, u) * bernoulli_number(u) / (k + 1)
    return Polynomial(coeffs)


def indefinite_sum(p: Polynomial) -> Polynomial:
    """P with P(x) - P(x-1) = p(x) and P(0) = 0."""
    total = Polynomial()
    for k, a in enumerate(p.coefficients):
        if a:
            total = total + a * bernoulli_polynomial(k)
    return total


def alt_indefinite_sum(p: Polynomial) -> Tuple[Fraction, Polynomial]:
    """(c, q) with q(x) + q(x-1) = p(x) and c = q(0).

    Then c + (-1)^(n-1) q(n) is the alternating partial sum of p(1)..p(n).
    """
    d = p.degree
    q = [Fraction(0)] * (d + 1)
    for j in range(d, -1, -1):
        # coefficient of x^j in q(x-1) from higher terms
        carry = sum((q[i] * math.comb(i, j) * sign(i - j) for i in range(j + 1, d + 1)), Fraction(0))
        q[j] = (p.coefficient(j) - carry) / 2
    qp = Polynomial(q)
    return qp(0), qp


def integral_unit(p: Polynomial) -> Fraction:
    """Exact integral of p over [-1, 0]."""
    return sum((a * Fraction(sign(k), k + 1) for k, a in enumerate(p.coefficients)), Fraction(0))


def sigma_elem(u: int, t: int) -> Fraction:
    """Elementary symmetric polynomial of degree u in 1, 2, ..., t."""
    if t < 1 or u < 0:
        raise InvalidArgument("sigma_elem expects u >= 0 and t >= 1")
    if u > t:
        raise InvalidArgument(f"sigma_{u} undefined for t = {t}")
    e = [1] + [0] * t
    for i in range(1, t + 1):
        for j in range(i, 0, -1):
            e[j] += i * e[j - 1]
    return Fraction(e[u])


def power_sum_avg(u: int, t: int) -> Fraction:
    """(1/t) * sum_{i=0}^{t-1} i^u, with 0^0 = 1."""
    if t < 1 or u < 0:
        raise InvalidArgument("power_sum_avg expects u >= 0 and t >= 1")
    return Fraction(sum(i**u for i in range(t)), t)


def build_sigma_poly(t: int) -> Polynomial:
    """x (x+1) ... (x+t) for odd t; satisfies f(-x) = f(x - t)."""
    if t < 1 or t % 2 == 0:
        raise InvalidArgument("build_sigma_poly needs an odd positive t")
    return Polynomial(sigma_elem(t + 1 - j, t) if j >= 1 else 0 for j in range(t + 2))


def is_quasi_odd(w: Polynomial, shift: RationalLike) -> bool:
    """w(-x) == -w(x - shift)."""
    return w.reflect() == -w.shift(-to_rational(shift))


def is_quasi_even(f: Polynomial, shift: RationalLike) -> bool:
    """f(-x) == f(x - shift)."""
    return f.reflect() == f.shift(-to_rational(shift))


def h_omega(w: Polynomial, t: int, eps: int) -> Polynomial:
    """sum_{u=d}^{t-1+d} w(x - eps*u) with d = (1 - eps)/2.

    For w(-x) = -w(x - eps*t) the result H satisfies H(-x) = -H(x - 1).
    """
    if eps not in (1, -1) or t < 1:
        raise InvalidArgument("h_omega expects t >= 1 and eps in {+1, -1}")
    if not is_quasi_odd(w, eps * t):
        raise NotQuasiOdd(f"w(-x) != -w(x - {eps * t})")
    delta = (1 - eps) // 2
    total = Polynomial()
    for u in range(delta, t + delta):
        total = total + w.shift(-eps * u)
    return total
