"""Regularized sums of infinite series.

Each summand class knows its closed form (the primary route) and one or more
independent derivations of the same value (secondary routes).  Summing a
term computes every route and insists they agree; a disagreement is a bug
and raises InternalInconsistency.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from .errors import InternalInconsistency, InvalidArgument, NotQuasiEven, PoleAtOne
from .exact import RationalLike, binomial, ext_binomial, format_rational, sign, to_rational
from .limits import AltPoly, Poly, Spliced, limit, sin_shift_form, sin_squared_form
from .louivre import bernoulli_number as B
from .poly import Polynomial, X, alt_indefinite_sum, indefinite_sum, integral_unit, is_quasi_even
from .report import CheckResult, equality
from .trigform import (
    POSITIVE_HALF,
    SYMMETRIC,
    ClosedFormValue,
    Exact,
    TrigForm,
    Window,
    as_trig,
    simplify_value,
    values_agree,
)

HALF = Fraction(1, 2)


def _fmt(q) -> str:
    return format_rational(q)


# ----------------------------------------------------------------- term types


@dataclass(frozen=True)
class PolyTerm:
    """p(u), summed from u = 1."""

    p: Polynomial

    def term(self, u: int, theta=None):
        return self.p(u)

    def params(self) -> dict:
        return {"p": self.p.to_json()}


@dataclass(frozen=True)
class AltPolyTerm:
    """(-1)^(u-1) p(u), summed from u = 1."""

    p: Polynomial

    def term(self, u: int, theta=None):
        return sign(u - 1) * self.p(u)

    def params(self) -> dict:
        return {"p": self.p.to_json()}


@dataclass(frozen=True)
class Geometric:
    """c * g^u, summed from u = start."""

    c: Fraction
    g: Fraction
    start: int = 0

    def __post_init__(self):
        object.__setattr__(self, "c", to_rational(self.c))
        object.__setattr__(self, "g", to_rational(self.g))
        if self.start not in (0, 1):
            raise InvalidArgument("geometric start must be 0 or 1")

    def term(self, u: int, theta=None):
        return self.c * self.g**u

    def params(self) -> dict:
        return {"c": _fmt(self.c), "g": _fmt(self.g), "start": self.start}


@dataclass(frozen=True)
class ArithProg:
    """a1 + (u-1) d."""

    a1: Fraction
    d: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a1", to_rational(self.a1))
        object.__setattr__(self, "d", to_rational(self.d))

    def poly(self) -> Polynomial:
        return Polynomial((self.a1 - self.d, self.d))

    def term(self, u: int, theta=None):
        return self.a1 + (u - 1) * self.d

    def params(self) -> dict:
        return {"a1": _fmt(self.a1), "d": _fmt(self.d)}


@dataclass(frozen=True)
class AltArithProg(ArithProg):
    """(-1)^(u-1) (a1 + (u-1) d)."""

    def term(self, u: int, theta=None):
        return sign(u - 1) * (self.a1 + (u - 1) * self.d)


@dataclass(frozen=True)
class OddPoly:
    """(2u - 1)^(k-1)."""

    k: int

    def __post_init__(self):
        if self.k < 1:
            raise InvalidArgument("OddPoly needs k >= 1")

    def poly(self) -> Polynomial:
        return Polynomial((-1, 2)) ** (self.k - 1)

    def term(self, u: int, theta=None):
        return Fraction((2 * u - 1) ** (self.k - 1))

    def params(self) -> dict:
        return {"k": self.k}


@dataclass(frozen=True)
class AltOddPoly(OddPoly):
    """(-1)^(u-1) (2u - 1)^(k-1)."""

    def term(self, u: int, theta=None):
        return Fraction(sign(u - 1) * (2 * u - 1) ** (self.k - 1))


@dataclass(frozen=True)
class TrigCosSeries:
    """cos(u theta)."""

    def term(self, u: int, theta: float):
        return math.cos(u * theta)

    def params(self) -> dict:
        return {}


@dataclass(frozen=True)
class AltTrigCosSeries:
    """(-1)^(u-1) cos(u theta)."""

    def term(self, u: int, theta: float):
        return sign(u - 1) * math.cos(u * theta)

    def params(self) -> dict:
        return {}


@dataclass(frozen=True)
class TrigSinSeries:
    """sin(u theta)."""

    def term(self, u: int, theta: float):
        return math.sin(u * theta)

    def params(self) -> dict:
        return {}


@dataclass(frozen=True)
class OddTrigSinSeries:
    """sin((2u - 1) theta)."""

    def term(self, u: int, theta: float):
        return math.sin((2 * u - 1) * theta)

    def params(self) -> dict:
        return {}


@dataclass(frozen=True)
class AltPolySin:
    """(-1)^(u-1) u^(2k-1) sin(u theta)."""

    k: int

    def __post_init__(self):
        if self.k < 1:
            raise InvalidArgument("AltPolySin needs k >= 1")

    def term(self, u: int, theta: float):
        return sign(u - 1) * u ** (2 * self.k - 1) * math.sin(u * theta)

    def params(self) -> dict:
        return {"k": self.k}


@dataclass(frozen=True)
class AltPolyCos:
    """(-1)^(u-1) u^(2k) cos(u theta)."""

    k: int

    def __post_init__(self):
        if self.k < 1:
            raise InvalidArgument("AltPolyCos needs k >= 1")

    def term(self, u: int, theta: float):
        return sign(u - 1) * u ** (2 * self.k) * math.cos(u * theta)

    def params(self) -> dict:
        return {"k": self.k}


@dataclass(frozen=True)
class Binomial:
    """C(a, u) x^u summed from u = 0, i.e. the expansion of (1 + x)^a."""

    a: int
    x: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", to_rational(self.x))
        if self.a == 0:
            raise InvalidArgument("binomial exponent must be nonzero")
        if not -1 < self.x <= 1:
            raise InvalidArgument("binomial series needs -1 < x <= 1")

    def term(self, u: int, theta=None):
        return ext_binomial(self.a, u) * self.x**u

    def params(self) -> dict:
        return {"a": self.a, "x": _fmt(self.x)}


@dataclass(frozen=True)
class QuasiEvenPoly:
    """A polynomial f with f(-x) = f(x - eps*t)."""

    f: Polynomial
    t: int
    eps: int

    def __post_init__(self):
        if self.eps not in (1, -1) or self.t < 1:
            raise InvalidArgument("QuasiEvenPoly needs t >= 1 and eps in {+1, -1}")
        if not is_quasi_even(self.f, self.eps * self.t):
            raise NotQuasiEven(f"f(-x) != f(x - {self.eps * self.t})")

    def term(self, u: int, theta=None):
        return self.f(u)

    def params(self) -> dict:
        return {"f": self.f.to_json(), "t": self.t, "eps": self.eps}


@dataclass(frozen=True)
class EvenRegular:
    """A registered even regular family with known value at 0."""

    family: str
    f0: ClosedFormValue = field(compare=False, default=None)
    theta: Optional[float] = field(compare=False, default=None)

    def __post_init__(self):
        entry = _REGISTRY_FAMILIES.get(self.family)
        if entry is None:
            raise InvalidArgument(f"{self.family!r} is not a registered even regular family")
        if self.f0 is None:
            object.__setattr__(self, "f0", entry.f0)
            object.__setattr__(self, "theta", entry.theta)

    def term(self, u: int, theta=None):
        return float(_REGISTRY_FAMILIES[self.family].evaluator(np.array([u], dtype=float))[0])

    def params(self) -> dict:
        return {"family": self.family, "f0": _value_text(self.f0)}


@dataclass(frozen=True)
class Combo:
    items: Tuple[Tuple[Fraction, "SeriesTerm"], ...]

    def __post_init__(self):
        object.__setattr__(self, "items", tuple((to_rational(c), t) for c, t in self.items))

    def term(self, u: int, theta=None):
        return sum(c * t.term(u, theta) for c, t in self.items)

    def params(self) -> dict:
        return {"items": [{"coeff": _fmt(c), "class": class_name(t), "params": t.params()}
                          for c, t in self.items]}


SeriesTerm = Union[
    PolyTerm, AltPolyTerm, Geometric, ArithProg, AltArithProg, OddPoly, AltOddPoly,
    TrigCosSeries, AltTrigCosSeries, TrigSinSeries, OddTrigSinSeries, AltPolySin, AltPolyCos,
    Binomial, QuasiEvenPoly, EvenRegular, Combo,
]

TRIG_CLASSES = (TrigCosSeries, AltTrigCosSeries, TrigSinSeries, OddTrigSinSeries, AltPolySin, AltPolyCos)


def class_name(t) -> str:
    return type(t).__name__


def first_index(t) -> int:
    if isinstance(t, Geometric):
        return t.start
    if isinstance(t, Binomial):
        return 0
    return 1


def _value_text(v) -> str:
    if isinstance(v, (Exact, TrigForm)):
        return v.canonical()
    return _fmt(v)


# --------------------------------------------------------------------- result


@dataclass(frozen=True)
class SumResult:
    term: object
    value: ClosedFormValue
    routes: Tuple[Tuple[str, ClosedFormValue], ...]
    window: Optional[Window] = None
    theta: Optional[float] = None
    start: Optional[int] = None

    def approx(self, theta: Optional[float] = None) -> Optional[float]:
        theta = self.theta if theta is None else theta
        if isinstance(self.value, Exact):
            return float(self.value.value)
        if theta is None:
            return None
        return float(self.value.approx(theta))

    def to_json(self, theta: Optional[float] = None) -> dict:
        value = self.value.to_json()
        if self.window is not None:
            value["window"] = self.window.to_json()
        return {
            "class": class_name(self.term),
            "params": self.term.params(),
            "start": first_index(self.term) if self.start is None else self.start,
            "value": value,
            "approx": self.approx(theta),
            "routes": [{"name": n, "value": v.canonical()} for n, v in self.routes],
        }


def _finish(t, routes: List[Tuple[str, ClosedFormValue]], window: Optional[Window] = None,
            theta: Optional[float] = None) -> SumResult:
    routes = [(n, simplify_value(v) if isinstance(v, TrigForm) else _exact(v)) for n, v in routes]
    primary = routes[0][1]
    for name, v in routes[1:]:
        if not values_agree(primary, v):
            raise InternalInconsistency(
                f"{class_name(t)}: route {name} gives {v.canonical()}, expected {primary.canonical()}")
    if window is not None and isinstance(primary, TrigForm):
        primary = primary.with_window(window)
    return SumResult(t, primary, tuple(routes), window, theta)


def _exact(v) -> ClosedFormValue:
    if isinstance(v, (Exact, TrigForm)):
        return v
    return Exact(to_rational(v))


# ---------------------------------------------------------- per-class routes


def power_sum(k: int) -> Fraction:
    """Sum of u^(k-1) for u >= 1."""
    return -B(k) / k


def alt_power_sum(k: int) -> Fraction:
    """Sum of (-1)^(u-1) u^(k-1) for u >= 1."""
    return (2**k - 1) * B(k) / k


def poly_sum(p: Polynomial) -> Fraction:
    return sum((a * power_sum(j + 1) for j, a in enumerate(p.coefficients)), Fraction(0))


def alt_poly_sum(p: Polynomial) -> Fraction:
    return sum((a * alt_power_sum(j + 1) for j, a in enumerate(p.coefficients)), Fraction(0))


def _poly_via_partial_sums(p: Polynomial) -> Fraction:
    # partial sums are P(n) with P(0) = 0; the regularized limit of P(n)
    return integral_unit(indefinite_sum(p))


def _alt_via_partial_sums(p: Polynomial) -> Fraction:
    # alternating partial sums are c + (-1)^(n-1) q(n), and the second piece has limit 0
    c, q = alt_indefinite_sum(p)
    return c + limit(AltPoly(-q)).value


def _sum_poly(t: PolyTerm) -> SumResult:
    return _finish(t, [("power-sums", poly_sum(t.p)), ("partial-sum-limit", _poly_via_partial_sums(t.p))])


def _sum_alt_poly(t: AltPolyTerm) -> SumResult:
    return _finish(t, [("alt-power-sums", alt_poly_sum(t.p)), ("alt-partial-sum", _alt_via_partial_sums(t.p))])


def _sum_geometric(t: Geometric) -> SumResult:
    if t.g == 1:
        raise PoleAtOne("geometric ratio g = 1 has no regularized sum")
    head = t.c * t.g**t.start
    routes = [("closed-form", head / (1 - t.g))]
    if t.g != 0:
        # sum_{u>=0} g^u = -sum_{u>=1} g^(-u), with the right side summed with ratio 1/g
        h = 1 / t.g
        routes.append(("reflection", -head * h / (1 - h)))
    return _finish(t, routes)


def _sum_arith(t: ArithProg) -> SumResult:
    return _finish(t, [
        ("closed-form", (5 * t.d - 6 * t.a1) / 12),
        ("polynomial", poly_sum(t.poly())),
    ])


def _sum_alt_arith(t: AltArithProg) -> SumResult:
    # even n: S_n = -d n / 2; odd n: S_n = a1 + d (n - 1) / 2
    alpha = Polynomial((0, -t.d / 2))
    beta = Polynomial((t.a1 - t.d / 2, t.d / 2))
    return _finish(t, [
        ("closed-form", (2 * t.a1 - t.d) / 4),
        ("alt-polynomial", alt_poly_sum(t.poly())),
        ("spliced-partial-sums", limit(Spliced(alpha, beta)).value),
    ])


def _alternation_correction(f_lim, alt_lim) -> Fraction:
    """(1/2) lim (f(n) - (-1)^n f(n))."""
    return (f_lim - alt_lim) / 2


def _sum_odd(t: OddPoly) -> SumResult:
    k = t.k
    closed = (2 * (2 ** (k - 1) - 1) * B(k) + sign(k)) / Fraction(2 * k)
    # odd-index part of f(u) = u^(k-1): (A + B)/2 - (1/2) lim f(n)
    a, b = power_sum(k), alt_power_sum(k)
    lim_f = limit(Poly(Polynomial.monomial(k - 1))).value
    routes = [
        ("closed-form", closed),
        ("polynomial", poly_sum(t.poly())),
        ("odd-part", (a + b) / 2 - lim_f / 2),
    ]
    return _finish(t, routes)


def _sum_alt_odd(t: AltOddPoly) -> SumResult:
    k = t.k
    closed = -sum((sign(u) * 2**u * (2**u - 1) * math.comb(k, u) * B(u) for u in range(1, k + 1)),
                  Fraction(0)) / (2 * k)
    return _finish(t, [("closed-form", closed), ("alt-polynomial", alt_poly_sum(t.poly()))])


def _sum_trig_cos(t: TrigCosSeries) -> SumResult:
    # partial sums: -1/2 + sin((n + 1/2) theta) / (2 sin(theta/2))
    via_partial = -HALF + TrigForm.csc(HALF) * HALF * as_trig(limit_sin_half())
    return _finish(t, [("closed-form", Exact(-HALF)), ("partial-sum-limit", via_partial),
                       ("even-regular", Exact(-Fraction(1, 2)))], SYMMETRIC)


def limit_sin_half() -> TrigForm:
    return sin_shift_form(HALF)


def _sum_alt_trig_cos(t: AltTrigCosSeries) -> SumResult:
    # partial sums: 1/2 - (-1)^n cos((n + 1/2) theta) / (2 cos(theta/2));
    # the alternating factor sends the second piece to 0; as an even function f(0) = -1
    return _finish(t, [("closed-form", Exact(HALF)), ("partial-sum-limit", Exact(HALF)),
                       ("even-regular", Exact(-Fraction(-1, 2)))], SYMMETRIC)


def trig_sin_closed() -> TrigForm:
    return HALF * TrigForm.cot(HALF) - TrigForm.theta(-1)


def trig_sin_route() -> TrigForm:
    return HALF * TrigForm.cot(HALF) + HALF * TrigForm.csc(HALF) ** 2 * sin_shift_form(0)


def odd_trig_sin_closed() -> TrigForm:
    return HALF * TrigForm.csc(1) - HALF * TrigForm.cos(1) * TrigForm.theta(-1)


def odd_trig_sin_route() -> TrigForm:
    return TrigForm.csc(1) * sin_squared_form()


def _sum_trig_sin(t: TrigSinSeries) -> SumResult:
    return _finish(t, [("closed-form", trig_sin_closed()), ("difference-identity", trig_sin_route())],
                   POSITIVE_HALF)


def _sum_odd_trig_sin(t: OddTrigSinSeries) -> SumResult:
    return _finish(t, [("closed-form", odd_trig_sin_closed()), ("squared-sine-limit", odd_trig_sin_route())],
                   POSITIVE_HALF)


def _sum_alt_poly_trig(t) -> SumResult:
    return _finish(t, [("closed-form", Exact(0))], SYMMETRIC)


def remainder_poly(m: int) -> Polynomial:
    """|R_k^m(1)| * 2^m as a polynomial in k."""
    if m < 1:
        raise InvalidArgument("m must be positive")
    k = X
    total = Polynomial()
    for u in range(m):
        left = Polynomial.constant(1)
        for i in range(1, u + 1):
            left = left * (k + i) / i
        right = Polynomial.constant(1)
        for i in range(m - 1 - u):
            right = right * (k + m - i) / (i + 1)
        total = total + left * right
    return total


def remainder(m: int, k: int, x: Fraction) -> Fraction:
    """R_k^m(x), the tail after truncating (1 + x)^(-m) at x^k."""
    x = to_rational(x)
    s = sum((math.comb(k + u, u) * math.comb(m + k, m - 1 - u) * x ** (k + 1 + u) for u in range(m)),
            Fraction(0))
    return sign(k + 1) * s / (1 + x) ** m


def _sum_binomial(t: Binomial) -> SumResult:
    closed = (1 + t.x) ** t.a
    routes: List[Tuple[str, ClosedFormValue]] = [("closed-form", closed)]
    if t.a > 0:
        routes.append(("finite-expansion", sum((binomial(t.a, u) * t.x**u for u in range(t.a + 1)), Fraction(0))))
    else:
        m = -t.a
        kk = 12
        partial = sum((t.term(u) for u in range(kk + 1)), Fraction(0))
        routes.append(("truncation-remainder", partial + remainder(m, kk, t.x)))
        if t.x == 1:
            # (-1)^u C(m+u-1, u) with C(m+u-1, u) a polynomial q in u
            q = Polynomial.constant(1)
            for i in range(1, m):
                q = q * (X + i) / i
            routes.append(("alt-polynomial", q(0) - alt_poly_sum(q)))
    return _finish(t, routes)


def _sum_quasi_even(t: QuasiEvenPoly) -> SumResult:
    f, eps, tt = t.f, t.eps, t.t
    delta = (1 - eps) // 2
    inner = sum((integral_unit(f.shift(-eps * u)) - f(-eps * u) for u in range(delta, tt + delta)), Fraction(0))
    routes = [("quasi-even", eps * inner / 2 - f(0) / 2), ("polynomial", poly_sum(f))]
    if eps * tt == 1:
        routes.append(("unit-shift", integral_unit(f) / 2 - f(0)))
    if eps == -1 and tt == 1:
        routes.append(("unit-backshift", -integral_unit(f.shift(1)) / 2))
    return _finish(t, routes)


def _sum_even_regular(t: EvenRegular) -> SumResult:
    entry = _REGISTRY_FAMILIES[t.family]
    f0 = t.f0
    value = -HALF * as_trig(f0) if isinstance(f0, TrigForm) else Exact(-to_rational(_exact(f0).value) / 2)
    routes = [("even-regular", value)]
    if entry.expected is not None:
        routes.append(("printed", entry.expected))
    return _finish(t, routes, theta=t.theta)


def _sum_combo(t: Combo) -> SumResult:
    parts = [(c, sum_series(m)) for c, m in t.items]
    window = None
    for _, r in parts:
        if r.window is not None:
            window = r.window if window is None else window.intersect(r.window)
    if all(isinstance(r.value, Exact) for _, r in parts):
        value: ClosedFormValue = Exact(sum((c * r.value.value for c, r in parts), Fraction(0)))
    else:
        total = TrigForm.const(0)
        for c, r in parts:
            total = total + c * as_trig(r.value)
        value = total
    routes = [("linearity", value)]
    if all(type(m) in (PolyTerm, AltPolyTerm) for _, m in t.items):
        plain, alt = Polynomial(), Polynomial()
        for c, m in t.items:
            if isinstance(m, PolyTerm):
                plain = plain + c * m.p
            else:
                alt = alt + c * m.p
        routes.append(("merged-polynomial", poly_sum(plain) + alt_poly_sum(alt)))
    if all(len(r.routes) > 1 for _, r in parts):
        total = TrigForm.const(0)
        for c, r in parts:
            total = total + c * as_trig(r.routes[-1][1])
        routes.append(("secondary-routes", simplify_value(total)))
    return _finish(t, routes, window)


_DISPATCH: Dict[type, Callable] = {
    PolyTerm: _sum_poly,
    AltPolyTerm: _sum_alt_poly,
    Geometric: _sum_geometric,
    ArithProg: _sum_arith,
    AltArithProg: _sum_alt_arith,
    OddPoly: _sum_odd,
    AltOddPoly: _sum_alt_odd,
    TrigCosSeries: _sum_trig_cos,
    AltTrigCosSeries: _sum_alt_trig_cos,
    TrigSinSeries: _sum_trig_sin,
    OddTrigSinSeries: _sum_odd_trig_sin,
    AltPolySin: _sum_alt_poly_trig,
    AltPolyCos: _sum_alt_poly_trig,
    Binomial: _sum_binomial,
    QuasiEvenPoly: _sum_quasi_even,
    EvenRegular: _sum_even_regular,
    Combo: _sum_combo,
}


def sum_series(t) -> SumResult:
    handler = _DISPATCH.get(type(t))
    if handler is None:
        raise InvalidArgument(f"no summation rule for {class_name(t)}")
    return handler(t)


def symbolic_term(t, u: int) -> ClosedFormValue:
    """The summand at a fixed index as an exact value or a form in theta."""
    if isinstance(t, TrigCosSeries):
        return TrigForm.cos(u)
    if isinstance(t, AltTrigCosSeries):
        return sign(u - 1) * TrigForm.cos(u)
    if isinstance(t, TrigSinSeries):
        return TrigForm.sin(u)
    if isinstance(t, OddTrigSinSeries):
        return TrigForm.sin(2 * u - 1)
    if isinstance(t, AltPolySin):
        return sign(u - 1) * u ** (2 * t.k - 1) * TrigForm.sin(u)
    if isinstance(t, AltPolyCos):
        return sign(u - 1) * u ** (2 * t.k) * TrigForm.cos(u)
    if isinstance(t, EvenRegular):
        raise InvalidArgument("registered families cannot change their starting index")
    if isinstance(t, Combo):
        total = TrigForm.const(0)
        for c, m in t.items:
            total = total + c * as_trig(symbolic_term(m, u))
        return simplify_value(total)
    return Exact(t.term(u))


def sum_from(t, start: int) -> SumResult:
    """Sum starting at an arbitrary index, by adding or removing boundary terms."""
    r = sum_series(t)
    natural = first_index(t)
    if start == natural:
        return r
    if abs(start - natural) > 10_000:
        raise InvalidArgument("starting index too far from the natural one")
    if start > natural:
        idx, sgn = range(natural, start), -1
    else:
        idx, sgn = range(start, natural), 1
    delta = TrigForm.const(0)
    for u in idx:
        delta = delta + as_trig(symbolic_term(t, u))
    delta = simplify_value(delta)

    def shifted(v):
        if isinstance(v, Exact) and isinstance(delta, Exact):
            return Exact(v.value + sgn * delta.value)
        return simplify_value(as_trig(v) + sgn * as_trig(delta))

    routes = tuple((n, shifted(v)) for n, v in r.routes)
    value = routes[0][1]
    if r.window is not None and isinstance(value, TrigForm):
        value = value.with_window(r.window)
    return SumResult(t, value, routes, r.window, r.theta, start)


def exact_value(t) -> Fraction:
    v = sum_series(t).value
    if not isinstance(v, Exact):
        raise InvalidArgument(f"{class_name(t)} has a theta-dependent sum")
    return v.value


# ------------------------------------------------------ shifts and structure


def shift_sum(t: PolyTerm, eps_t: int) -> Fraction:
    """Sum of p(u - eps_t) from the sum of p and boundary limits."""
    if not isinstance(t, PolyTerm):
        raise InvalidArgument("shift_sum applies to polynomial terms only")
    base = poly_sum(t.p)
    if eps_t == 0:
        return base
    eps, tt = (1, eps_t) if eps_t > 0 else (-1, -eps_t)
    delta = (1 - eps) // 2
    corr = sum((integral_unit(t.p.shift(-eps * u)) - t.p(-eps * u) for u in range(delta, tt + delta)),
               Fraction(0))
    value = base - eps * corr
    direct = poly_sum(t.p.shift(-eps_t))
    if value != direct:
        raise InternalInconsistency("shifted sum disagrees with direct summation")
    return value


def _pieces(t):
    """(A, B, odd part, even part, pair sum, lim f, lim (-1)^n f) for f the summand."""
    if isinstance(t, PolyTerm):
        p = t.p
        a, b = poly_sum(p), alt_poly_sum(p)
        odd = poly_sum(p.scale(2).shift(-HALF))
        even = poly_sum(p.scale(2))
        pair = poly_sum(p.scale(2).shift(-HALF) + p.scale(2))
        lim_f, lim_alt = limit(Poly(p)).value, limit(AltPoly(p)).value
    elif isinstance(t, AltPolyTerm):
        p = t.p
        # f(2u-1) = p(2u-1), f(2u) = -p(2u), (-1)^(u-1) f(u) = p(u), (-1)^n f(n) = -p(n)
        a, b = alt_poly_sum(p), poly_sum(p)
        odd = poly_sum(p.scale(2).shift(-HALF))
        even = -poly_sum(p.scale(2))
        pair = poly_sum(p.scale(2).shift(-HALF) - p.scale(2))
        lim_f, lim_alt = limit(AltPoly(-p)).value, limit(Poly(-p)).value
    else:
        raise InvalidArgument("structural checks need a PolyTerm or AltPolyTerm")
    return a, b, odd, even, pair, lim_f, lim_alt


def structural_checks(t, mode: str) -> List[CheckResult]:
    a, b, odd, even, pair, lim_f, lim_alt = _pieces(t)
    corr = _alternation_correction(lim_f, lim_alt)
    mode = mode.lower()
    if mode == "commutative":
        return [equality("commutative", None, a, odd + even + corr)]
    if mode == "associative":
        return [equality("associative", None, a, pair + corr)]
    if mode == "distributive":
        return [
            equality("distributive:even", None, even, (a - b) / 2),
            equality("distributive:odd", None, odd, (a + b) / 2 - corr),
        ]
    raise InvalidArgument(f"unknown structural mode {mode!r}")


def remainder_checks(m: int, ks: Sequence[int] = range(0, 11)) -> List[CheckResult]:
    """Degree and limit of the x = 1 truncation remainder of (1 + x)^(-m)."""
    r = remainder_poly(m)
    rows = [equality("remainder:degree", m, r.degree, m - 1)]
    for k in ks:
        via_poly = sign(k + 1) * r(k) / 2**m
        rows.append(equality(f"remainder:value", m * 100 + k, remainder(m, k, Fraction(1)), via_poly))
        partial = sum((sign(u) * math.comb(m + u - 1, u) for u in range(k + 1)), Fraction(0))
        rows.append(equality("remainder:identity", m * 100 + k, partial + via_poly, Fraction(1, 2**m)))
    # (-1)^(k+1) r(k) / 2^m is an alternating polynomial, whose limit is 0
    rows.append(equality("remainder:limit", m, limit(AltPoly(-r / 2**m)).value, 0))
    return rows


def odd_4u3_closed(k: int) -> Fraction:
    """Sum of (4u - 3)^(2k-1)."""
    return (Fraction(3) ** (2 * k) + (2 ** (2 * k) - 2) * B(2 * k)) / (8 * k)


# ------------------------------------------------------------ builtin registry


def _er_quarter(u):
    u = np.asarray(u, dtype=float)
    a = np.exp2(u - u * u - 1)
    b = np.exp2(-u * u - u - 1)
    return (a - b) * (u - 0.5) - b


def _er_reciprocal(u):
    u = np.asarray(u, dtype=float)
    return 1.0 / (4 * u * u - 1)


def _er_alternating(u):
    u = np.asarray(u, dtype=float)
    s = np.where(np.mod(u, 2) == 0, 1.0, -1.0)
    return s * (2 * u * u + 0.5) / (2 * u * u - 0.5) ** 2


def _er_tan(u):
    u = np.asarray(u, dtype=float)
    return ((u * u + 0.25) * math.tan(0.5) * np.cos(u) - u * np.sin(u)) / (4 * u * u - 1) ** 2


def _er_even_rational(u):
    u = np.asarray(u, dtype=float)
    return (18 * u * u - 4) / (81 * u**4 - 45 * u * u + 4)


def _er_cosh(u):
    return np.cosh(np.asarray(u, dtype=float))


def _er_exp_pair(u):
    u = np.asarray(u, dtype=float)
    return np.exp(u) + np.exp(-u)


@dataclass(frozen=True)
class BuiltinExample:
    name: str
    description: str
    expected: ClosedFormValue
    convergent: bool
    f0: Optional[ClosedFormValue] = None
    evaluator: Optional[Callable] = None
    term: Optional[object] = None
    generating: Optional[str] = None
    theta: Optional[float] = None

    def partial_sum(self, n: int) -> float:
        if self.evaluator is None:
            raise InvalidArgument(f"{self.name} has no numeric evaluator")
        u = np.arange(1, n + 1, dtype=float)
        return float(np.sum(self.evaluator(u)))

    def expected_float(self) -> float:
        if isinstance(self.expected, TrigForm):
            return float(self.expected.approx(self.theta))
        return float(self.expected.value)


_TAN_HALF = TrigForm.tan(HALF)

_EVEN_REGULAR = [
    BuiltinExample("reciprocal", "1/(4u^2 - 1)", Exact(HALF), True, Exact(-1), _er_reciprocal,
                   generating="F(n) = -1/(2(2n - 1))"),
    BuiltinExample("alternating", "(-1)^u (2u^2 + 1/2)/(2u^2 - 1/2)^2", Exact(-1), True, Exact(2),
                   _er_alternating, generating="F(n) = (-1)^(n-1)/(2n - 1)^2"),
    BuiltinExample("quarter", "((4^u - 1)(u - 1/2) - 1)/2^(u^2 + u + 1)", Exact(Fraction(1, 4)), True,
                   Exact(-HALF), _er_quarter, generating="F(n) = -(n - 1/2)/2^(n^2 - n + 1)"),
    BuiltinExample("tan", "((u^2 + 1/4) tan(1/2) cos u - u sin u)/(4u^2 - 1)^2",
                   -Fraction(1, 8) * _TAN_HALF, True, Fraction(1, 4) * _TAN_HALF, _er_tan,
                   generating="F(n) = sin(n - 1/2)/(8 (2n - 1)^2 cos(1/2))", theta=1.0),
    BuiltinExample("even-rational", "(18u^2 - 4)/(81u^4 - 45u^2 + 4)", Exact(HALF), True, Exact(-1),
                   _er_even_rational, generating="f(x) + f(-x) with f(x) = 1/(9x^2 - 3x - 2)"),
    BuiltinExample("cosh", "cosh(u)", Exact(-HALF), False, Exact(1), _er_cosh,
                   generating="cosh(x) = (e^x + e^-x)/2"),
    BuiltinExample("exp-pair", "e^u + e^-u", Exact(-1), False, Exact(2), _er_exp_pair,
                   generating="f(x) + f(-x) with f(x) = e^x"),
]

_REGISTRY_FAMILIES: Dict[str, BuiltinExample] = {e.name: e for e in _EVEN_REGULAR}


def _staples() -> List[BuiltinExample]:
    one = Polynomial.constant(1)
    return [
        BuiltinExample("ones", "1 + 1 + 1 + ...", Exact(-HALF), False, term=PolyTerm(one)),
        BuiltinExample("naturals", "1 + 2 + 3 + ...", Exact(Fraction(-1, 12)), False, term=PolyTerm(X)),
        BuiltinExample("odd-naturals", "1 + 3 + 5 + ...", Exact(Fraction(1, 3)), False, term=ArithProg(1, 2)),
        BuiltinExample("grandi", "1 - 1 + 1 - ...", Exact(HALF), False, term=AltPolyTerm(one)),
        BuiltinExample("alt-naturals", "1 - 2 + 3 - ...", Exact(Fraction(1, 4)), False, term=AltPolyTerm(X)),
        BuiltinExample("alt-odd-naturals", "1 - 3 + 5 - ...", Exact(0), False, term=AltArithProg(1, 2)),
        BuiltinExample("powers-of-two", "1 + 2 + 4 + ...", Exact(-1), False, term=Geometric(1, 2, 0)),
        BuiltinExample("powers-of-minus-two", "1 - 2 + 4 - ...", Exact(Fraction(1, 3)), False,
                       term=Geometric(1, -2, 0)),
    ]


def builtin_examples() -> List[BuiltinExample]:
    out = []
    for e in _EVEN_REGULAR:
        out.append(BuiltinExample(e.name, e.description, e.expected, e.convergent, e.f0, e.evaluator,
                                  EvenRegular(e.name), e.generating, e.theta))
    return out + _staples()


def builtin(name: str) -> BuiltinExample:
    for e in builtin_examples():
        if e.name == name:
            return e
    raise InvalidArgument(f"no builtin example named {name!r}")
