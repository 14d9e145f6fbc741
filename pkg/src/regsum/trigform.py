"""Closed-form values: exact rationals and structured trigonometric forms.

A TrigForm is a finite sum of monomials

    coeff * theta^e * prod sin(r*theta)^a * cos(r*theta)^b

with rational coeff, rational frequencies r > 0 and integer exponents
(negative exponents are denominators, so tan, cot and csc are expressible).
Like monomials are merged and signs of frequencies are normalized on
construction.

Equality is identity as functions of theta.  To decide it, every factor is
rewritten in terms of s = sin(h*theta), c = cos(h*theta) for a common base
frequency h, denominators are cleared by monomial multiplication, and the
resulting polynomial is reduced modulo s^2 + c^2 = 1.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Dict, Iterable, Optional, Tuple, Union

import numpy as np

from .errors import DomainViolation, InvalidArgument
from .exact import RationalLike, format_rational, to_rational

Atom = Tuple[str, Fraction]                 # ("sin" | "cos", frequency)
Key = Tuple[int, Tuple[Tuple[Atom, int], ...]]   # (theta power, atoms with exponents)


@dataclass(frozen=True)
class Window:
    """Open theta interval (lo*pi, hi*pi)."""

    lo: Fraction
    hi: Fraction

    def bounds(self) -> Tuple[float, float]:
        return float(self.lo) * math.pi, float(self.hi) * math.pi

    def check(self, theta) -> None:
        lo, hi = self.bounds()
        arr = np.asarray(theta, dtype=float)
        if not np.all((arr > lo) & (arr < hi)):
            raise DomainViolation(f"theta outside the open window {self}")

    def intersect(self, other: Optional["Window"]) -> "Window":
        if other is None:
            return self
        return Window(max(self.lo, other.lo), min(self.hi, other.hi))

    def to_json(self) -> list:
        return list(self.bounds())

    def __str__(self) -> str:
        def end(q: Fraction) -> str:
            if q == 0:
                return "0"
            if q == 1:
                return "pi"
            if q == -1:
                return "-pi"
            return f"{format_rational(q)}*pi"
        return f"({end(self.lo)}, {end(self.hi)})"


SYMMETRIC = Window(Fraction(-1), Fraction(1))
POSITIVE_HALF = Window(Fraction(0), Fraction(1))


def _merge(a: Optional[Window], b: Optional[Window]) -> Optional[Window]:
    if a is None:
        return b
    return a.intersect(b)


# ---------------------------------------------------------------- exact value


@dataclass(frozen=True)
class Exact:
    value: Fraction
    window: Optional[Window] = None

    def __post_init__(self):
        object.__setattr__(self, "value", to_rational(self.value))

    def as_trig(self) -> "TrigForm":
        return TrigForm.const(self.value, window=self.window)

    def approx(self, theta=None) -> float:
        if theta is not None and self.window is not None:
            self.window.check(theta)
        return float(self.value)

    def canonical(self) -> str:
        return format_rational(self.value)

    def to_json(self) -> dict:
        out = {"exact": format_rational(self.value)}
        if self.window is not None:
            out["window"] = self.window.to_json()
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Exact):
            return self.value == other.value
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.value == other
        if isinstance(other, TrigForm):
            return other == self.as_trig()
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.value)

    def __str__(self) -> str:
        return self.canonical()


# ------------------------------------------------------------------ trig form


def _atom(func: str, r: Fraction) -> Tuple[Fraction, Optional[Atom]]:
    """Normalize one factor.  Returns (sign or zero multiplier, atom or None)."""
    if func not in ("sin", "cos"):
        raise InvalidArgument(f"unknown trig function {func}")
    if r == 0:
        return (Fraction(0), None) if func == "sin" else (Fraction(1), None)
    if r < 0:
        return (Fraction(-1) if func == "sin" else Fraction(1)), (func, -r)
    return Fraction(1), (func, r)


def _mul_keys(a: Key, b: Key) -> Key:
    exps: Dict[Atom, int] = dict(a[1])
    for atom, e in b[1]:
        exps[atom] = exps.get(atom, 0) + e
    return a[0] + b[0], tuple(sorted((k, v) for k, v in exps.items() if v))


class TrigForm:
    """Immutable sum of trig monomials in theta."""

    __slots__ = ("_terms", "window")

    def __init__(self, terms: Iterable[Tuple[Key, Fraction]] = (), window: Optional[Window] = None):
        acc: Dict[Key, Fraction] = {}
        for key, c in terms:
            c = to_rational(c)
            if c:
                acc[key] = acc.get(key, Fraction(0)) + c
        self._terms: Tuple[Tuple[Key, Fraction], ...] = tuple(
            sorted(((k, v) for k, v in acc.items() if v), key=lambda kv: _sort_key(kv[0]))
        )
        self.window = window

    # constructors
    @classmethod
    def const(cls, c: RationalLike, window: Optional[Window] = None) -> "TrigForm":
        return cls([((0, ()), to_rational(c))], window)

    @classmethod
    def theta(cls, power: int = 1) -> "TrigForm":
        return cls([((power, ()), Fraction(1))])

    @classmethod
    def func(cls, name: str, r: RationalLike, power: int = 1) -> "TrigForm":
        mult, atom = _atom(name, to_rational(r))
        if atom is None:
            if mult == 0 and power < 0:
                raise DomainViolation("division by sin(0)")
            return cls.const(mult ** power if mult else 0)
        return cls([((0, ((atom, power),)), mult ** power)])

    @classmethod
    def sin(cls, r: RationalLike) -> "TrigForm":
        return cls.func("sin", r)

    @classmethod
    def cos(cls, r: RationalLike) -> "TrigForm":
        return cls.func("cos", r)

    @classmethod
    def tan(cls, r: RationalLike) -> "TrigForm":
        return cls.sin(r) * cls.func("cos", r, -1)

    @classmethod
    def cot(cls, r: RationalLike) -> "TrigForm":
        return cls.cos(r) * cls.func("sin", r, -1)

    @classmethod
    def csc(cls, r: RationalLike) -> "TrigForm":
        return cls.func("sin", r, -1)

    # structure
    @property
    def terms(self) -> Tuple[Tuple[Key, Fraction], ...]:
        return self._terms

    def with_window(self, window: Optional[Window]) -> "TrigForm":
        return TrigForm(self._terms, window)

    def is_constant(self) -> bool:
        return all(key == (0, ()) for key, _ in self._terms)

    def constant_value(self) -> Fraction:
        for key, c in self._terms:
            if key == (0, ()):
                return c
        return Fraction(0)

    # arithmetic
    @staticmethod
    def _lift(other) -> Optional["TrigForm"]:
        if isinstance(other, TrigForm):
            return other
        if isinstance(other, Exact):
            return other.as_trig()
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return TrigForm.const(other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return TrigForm(self._terms + o._terms, _merge(self.window, o.window))

    __radd__ = __add__

    def __neg__(self) -> "TrigForm":
        return TrigForm(((k, -c) for k, c in self._terms), self.window)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        terms = [(_mul_keys(ka, kb), ca * cb) for ka, ca in self._terms for kb, cb in o._terms]
        return TrigForm(terms, _merge(self.window, o.window))

    __rmul__ = __mul__

    def reciprocal(self) -> "TrigForm":
        if len(self._terms) != 1:
            raise InvalidArgument("only single monomials can be inverted")
        (t, atoms), c = self._terms[0]
        return TrigForm([((-t, tuple((a, -e) for a, e in atoms)), 1 / c)], self.window)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.reciprocal()

    def __pow__(self, k: int) -> "TrigForm":
        if k < 0:
            return self.reciprocal() ** (-k)
        out = TrigForm.const(1, self.window)
        for _ in range(k):
            out = out * self
        return out

    # equality as functions of theta
    def __eq__(self, other: object) -> bool:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return _identically_zero((self - o)._terms)

    __hash__ = None  # equality is semantic; no consistent hash exists

    def is_zero(self) -> bool:
        return _identically_zero(self._terms)

    # numerics
    def approx(self, theta) -> Union[float, np.ndarray]:
        if theta is None:
            if self.is_constant():
                return float(self.constant_value())
            raise InvalidArgument("theta required to evaluate a trig form")
        if self.window is not None:
            self.window.check(theta)
        th = np.asarray(theta, dtype=float)
        total = np.zeros_like(th)
        for (tp, atoms), c in self._terms:
            term = np.full_like(th, float(c))
            if tp:
                if tp < 0 and np.any(th == 0):
                    raise DomainViolation("theta = 0 is a singular point of this form")
                term = term * th ** tp
            for (name, r), e in atoms:
                v = np.sin(th * float(r)) if name == "sin" else np.cos(th * float(r))
                if e < 0 and np.any(v == 0):
                    raise DomainViolation(f"{name}({format_rational(r)}*theta) vanishes")
                term = term * v ** e
            total = total + term
        return float(total) if total.ndim == 0 else total

    # rendering
    def canonical(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for i, (key, c) in enumerate(self._terms):
            body = _render_monomial(key, abs(c))
            if i == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append(("- " if c < 0 else "+ ") + body)
        return " ".join(out)

    def to_json(self) -> dict:
        out = {"trig_form": self.canonical()}
        if self.window is not None:
            out["window"] = self.window.to_json()
        return out

    def __str__(self) -> str:
        return self.canonical()

    def __repr__(self) -> str:
        return f"TrigForm({self.canonical()})"


ClosedFormValue = Union[Exact, TrigForm]


def as_trig(v) -> TrigForm:
    if isinstance(v, TrigForm):
        return v
    if isinstance(v, Exact):
        return v.as_trig()
    return TrigForm.const(v)


def simplify_value(v: ClosedFormValue) -> ClosedFormValue:
    """Collapse a TrigForm that is identically constant into Exact."""
    if isinstance(v, TrigForm):
        if v.is_constant():
            return Exact(v.constant_value(), v.window)
        c = v.constant_value()
        if (v - c).is_zero():
            return Exact(c, v.window)
        # a constant hidden behind sin^2 + cos^2 = 1: guess it numerically, confirm exactly
        try:
            guess = Fraction(float(TrigForm(v.terms).approx(0.637))).limit_denominator(10**9)
        except (DomainViolation, OverflowError, ValueError):
            return v
        if (v - guess).is_zero():
            return Exact(guess, v.window)
    return v


def values_agree(a: ClosedFormValue, b: ClosedFormValue) -> bool:
    if isinstance(a, Exact) and isinstance(b, Exact):
        return a.value == b.value
    return as_trig(a) == as_trig(b)


def _sort_key(key: Key):
    tp, atoms = key
    return (len(atoms) != 0 or tp != 0, -tp, tuple((a[0], a[1], e) for a, e in atoms))


def _theta_arg(r: Fraction) -> str:
    if r == 1:
        return "theta"
    if r.denominator == 1:
        return f"{r.numerator}*theta"
    if r.numerator == 1:
        return f"theta/{r.denominator}"
    return f"{r.numerator}*theta/{r.denominator}"


def _render_monomial(key: Key, mag: Fraction) -> str:
    tp, atoms = key
    num, den = [], []
    if mag.numerator != 1:
        num.append(str(mag.numerator))
    if mag.denominator != 1:
        den.append(str(mag.denominator))
    for (name, r), e in atoms:
        base = f"{name}({_theta_arg(r)})"
        piece = base if abs(e) == 1 else f"{base}^{abs(e)}"
        (num if e > 0 else den).append(piece)
    if tp:
        piece = "theta" if abs(tp) == 1 else f"theta^{abs(tp)}"
        (num if tp > 0 else den).append(piece)
    top = "*".join(num) if num else "1"
    if not den:
        return top
    bottom = den[0] if len(den) == 1 else "(" + "*".join(den) + ")"
    return f"{top}/{bottom}"


# ----------------------------------------------------------- identity check
# Polynomials in s, c reduced modulo s^2 + c^2 = 1 keep c-degree in {0, 1};
# they are stored as {(i, j): coeff} meaning s^i c^j.

SC = Dict[Tuple[int, int], Fraction]


def _sc_mul(a: SC, b: SC) -> SC:
    out: SC = {}
    for (i1, j1), x in a.items():
        for (i2, j2), y in b.items():
            i, j, v = i1 + i2, j1 + j2, x * y
            if j == 2:
                # c^2 = 1 - s^2
                out[(i, 0)] = out.get((i, 0), 0) + v
                out[(i + 2, 0)] = out.get((i + 2, 0), 0) - v
            else:
                out[(i, j)] = out.get((i, j), 0) + v
    return {k: v for k, v in out.items() if v}


def _multiple_angle(name: str, m: int) -> SC:
    """sin(m h) or cos(m h) as a reduced polynomial in s, c."""
    out: SC = {}
    c_pow = {0: {(0, 0): Fraction(1)}}
    for k in range(m + 1):
        if (name == "cos") != (k % 2 == 0):
            continue
        sgn = -1 if (k // 2) % 2 else 1
        coeff = Fraction(sgn * math.comb(m, k))
        # c^(m-k) s^k, reduce c powers on the fly
        poly = {(k, 0): coeff}
        for _ in range(m - k):
            poly = _sc_mul(poly, {(0, 1): Fraction(1)})
        for key, v in poly.items():
            out[key] = out.get(key, 0) + v
    return {k: v for k, v in out.items() if v}


def _identically_zero(terms: Tuple[Tuple[Key, Fraction], ...]) -> bool:
    if not terms:
        return True
    freqs = {r for (_, atoms), _ in terms for ((_, r), _) in atoms}
    if freqs:
        num = reduce(math.gcd, (f.numerator for f in freqs))
        den = reduce(lambda x, y: x * y // math.gcd(x, y), (f.denominator for f in freqs))
        base = Fraction(num, den)
    else:
        base = Fraction(1)
    # clear denominators: multiply every term by atom^(-min exponent)
    lowest: Dict[Atom, int] = {}
    low_t = 0
    for (tp, atoms), _ in terms:
        low_t = min(low_t, tp)
        for atom, e in atoms:
            lowest[atom] = min(lowest.get(atom, 0), e)
    by_theta: Dict[int, SC] = {}
    cache: Dict[Atom, SC] = {}
    for (tp, atoms), c in terms:
        exps = dict(atoms)
        poly: SC = {(0, 0): c}
        for atom in set(exps) | set(lowest):
            e = exps.get(atom, 0) - lowest.get(atom, 0)
            if e:
                if atom not in cache:
                    cache[atom] = _multiple_angle(atom[0], int(atom[1] / base))
                for _ in range(e):
                    poly = _sc_mul(poly, cache[atom])
        slot = by_theta.setdefault(tp - low_t, {})
        for key, v in poly.items():
            slot[key] = slot.get(key, 0) + v
    return all(not any(v for v in slot.values()) for slot in by_theta.values())
