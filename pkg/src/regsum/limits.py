"""Regularized limits lim_{n -> oo} of polynomial, alternating and trig sequences.

For a polynomial the regularized limit is its integral over [-1, 0]; an
alternating factor (-1)^n sends any polynomial to 0; shifted sines and
cosines of n*theta have closed trig forms valid for -pi < theta < pi.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple, Union

from .errors import InternalInconsistency, InvalidArgument, NotQuasiOdd
from .exact import RationalLike, format_rational, sign, to_rational
from .poly import Polynomial, integral_unit, is_quasi_odd
from .trigform import (
    SYMMETRIC,
    ClosedFormValue,
    Exact,
    TrigForm,
    Window,
    as_trig,
    simplify_value,
)

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class Poly:
    p: Polynomial

    def at(self, n: int, theta: Optional[float] = None):
        return self.p(n)

    def render(self) -> str:
        return self.p.render("n")


@dataclass(frozen=True)
class AltPoly:
    """(-1)^n p(n)."""

    p: Polynomial

    def at(self, n: int, theta: Optional[float] = None):
        return sign(n) * self.p(n)

    def render(self) -> str:
        return f"(-1)^(n)*({self.p.render('n')})"


@dataclass(frozen=True)
class TrigSin:
    """sin((n + beta) theta)."""

    beta: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "beta", to_rational(self.beta))

    def at(self, n: int, theta: float):
        return math.sin((n + float(self.beta)) * theta)

    def render(self) -> str:
        return f"sin({_linarg(self.beta)})"


@dataclass(frozen=True)
class TrigCos:
    """cos((n + beta) theta)."""

    beta: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "beta", to_rational(self.beta))

    def at(self, n: int, theta: float):
        return math.cos((n + float(self.beta)) * theta)

    def render(self) -> str:
        return f"cos({_linarg(self.beta)})"


@dataclass(frozen=True)
class TrigSinSq:
    """sin(n theta)^2."""

    def at(self, n: int, theta: float):
        return math.sin(n * theta) ** 2

    def render(self) -> str:
        return "sin(n*theta)^2"


@dataclass(frozen=True)
class Spliced:
    """alpha(n) for even n, beta(n) for odd n."""

    alpha: Polynomial
    beta: Polynomial

    def at(self, n: int, theta: Optional[float] = None):
        return self.alpha(n) if n % 2 == 0 else self.beta(n)

    def render(self) -> str:
        raise InvalidArgument("spliced sequences have no expression syntax")


@dataclass(frozen=True)
class LinearCombo:
    items: Tuple[Tuple[Fraction, "FunctionExpr"], ...]

    def __post_init__(self):
        object.__setattr__(self, "items", tuple((to_rational(c), e) for c, e in self.items))

    def at(self, n: int, theta: Optional[float] = None):
        return sum(c * e.at(n, theta) for c, e in self.items)

    def render(self) -> str:
        parts = []
        for c, e in self.items:
            parts.append(f"{_paren(format_rational(c))}*({e.render()})")
        return " + ".join(parts) if parts else "0"


FunctionExpr = Union[Poly, AltPoly, TrigSin, TrigCos, TrigSinSq, Spliced, LinearCombo]


def _paren(s: str) -> str:
    return f"({s})" if s.startswith("-") else s


def _linarg(beta: Fraction, var: str = "n") -> str:
    if beta == 0:
        return f"{var}*theta"
    op = "+" if beta > 0 else "-"
    return f"({var}{op}{format_rational(abs(beta))})*theta"


def sin_shift_form(beta: RationalLike) -> TrigForm:
    """lim sin((n+beta) theta) = 2 sin(theta/2) sin((beta-1/2) theta) / theta."""
    beta = to_rational(beta)
    f = 2 * TrigForm.sin(HALF) * TrigForm.sin(beta - HALF) * TrigForm.theta(-1)
    return f.with_window(SYMMETRIC)


def cos_shift_form(beta: RationalLike) -> TrigForm:
    """lim cos((n+beta) theta) = 2 sin(theta/2) cos((beta-1/2) theta) / theta."""
    beta = to_rational(beta)
    f = 2 * TrigForm.sin(HALF) * TrigForm.cos(beta - HALF) * TrigForm.theta(-1)
    return f.with_window(SYMMETRIC)


def sin_squared_form() -> TrigForm:
    """lim sin(n theta)^2 = 1/2 - sin(2 theta) / (4 theta)."""
    f = TrigForm.const(HALF) - Fraction(1, 4) * TrigForm.sin(2) * TrigForm.theta(-1)
    return f.with_window(SYMMETRIC)


def limit(e: FunctionExpr) -> ClosedFormValue:
    if isinstance(e, Poly):
        return Exact(integral_unit(e.p))
    if isinstance(e, AltPoly):
        return Exact(Fraction(0))
    if isinstance(e, TrigSin):
        return sin_shift_form(e.beta)
    if isinstance(e, TrigCos):
        return cos_shift_form(e.beta)
    if isinstance(e, TrigSinSq):
        return sin_squared_form()
    if isinstance(e, Spliced):
        return Exact(limit_spliced(e.alpha, e.beta))
    if isinstance(e, LinearCombo):
        parts = [(c, limit(m)) for c, m in e.items]
        if all(isinstance(v, Exact) for _, v in parts):
            return Exact(sum((c * v.value for c, v in parts), Fraction(0)))
        total = TrigForm.const(0)
        for c, v in parts:
            total = total + c * as_trig(v)
        return simplify_value(total)
    raise InvalidArgument(f"no limit rule for {type(e).__name__}")


def limit_spliced(alpha: Polynomial, beta: Polynomial) -> Fraction:
    return (integral_unit(alpha) + integral_unit(beta)) / 2


def quasi_odd_limit(theta_poly: Polynomial, eps: int) -> Fraction:
    """lim theta(n + d) = 0 for theta(-x) = -theta(x - eps), d = (1 - eps)/2."""
    if eps not in (-1, 0, 1):
        raise InvalidArgument("eps must be -1, 0 or 1")
    if not is_quasi_odd(theta_poly, eps):
        raise NotQuasiOdd(f"theta(-x) != -theta(x - {eps})")
    delta = Fraction(1 - eps, 2)
    if integral_unit(theta_poly.shift(delta)) != 0:
        raise InternalInconsistency("quasi-odd limit failed its integral cross-check")
    return Fraction(0)


def tan_half_shift_limit() -> Exact:
    """lim tan((n + 1/2) theta) = 0 on (-pi, pi)."""
    return Exact(Fraction(0), SYMMETRIC)


def cot_half_shift_limit() -> Exact:
    """lim cot((n + 1/2) theta) = 0 on (0, 2 pi)."""
    return Exact(Fraction(0), Window(Fraction(0), Fraction(2)))
