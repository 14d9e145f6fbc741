"""Verification suites behind `regsum verify`.

Each suite returns CheckResult rows sorted by check name and k.  Exhaustive
families over a grid are folded into one row per identity: the row passes
when every case passes and otherwise carries the first counterexample.
"""
from __future__ import annotations

import math
import random
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Iterable, List, Optional, Tuple

import numpy as np

from . import bernoulli as bern
from . import series as S
from .errors import InternalInconsistency, InvalidArgument
from .exact import binomial, ext_binomial, sign
from .limits import (
    AltPoly,
    LinearCombo,
    Poly,
    cos_shift_form,
    limit,
    quasi_odd_limit,
    sin_shift_form,
    sin_squared_form,
)
from .poly import (
    X,
    Polynomial,
    bernoulli_polynomial,
    h_omega,
    indefinite_sum,
    integral_unit,
    is_quasi_even,
)
from .report import CheckResult, equality, ordered
from .trigform import POSITIVE_HALF, SYMMETRIC, Exact, TrigForm, Window, as_trig, values_agree
from .zorder import (
    SummandSpec,
    enumerate_sum,
    precedes,
    precedes_eq,
    range_sum,
    segment,
    sum_over_integers,
    verify_product_reflection,
)

SUITES = ("order", "series", "bernoulli", "trig")
DEFAULT_MAX_K = 20
DEFAULT_COMPOSITION_MAX_K = 12
TRIG_TOL = 1e-12
HALF = Fraction(1, 2)

Case = Tuple[object, object]


def fold(check: str, cases: Iterable[Case], k: Optional[int] = None,
         same: Callable[[object, object], bool] = lambda a, b: a == b) -> CheckResult:
    """One row for a family of (lhs, rhs) cases."""
    count = 0
    for lhs, rhs in cases:
        count += 1
        if not same(lhs, rhs):
            return CheckResult(check, k, False, lhs, rhs)
    return CheckResult(check, k, True, count, count)


def _close(a, b) -> bool:
    return abs(float(a) - float(b)) < TRIG_TOL


def random_poly(rng: random.Random, max_degree: int, max_num: int = 9) -> Polynomial:
    deg = rng.randint(0, max_degree)
    coeffs = [Fraction(rng.randint(-max_num, max_num), rng.randint(1, 6)) for _ in range(deg + 1)]
    if coeffs[-1] == 0:
        coeffs[-1] = Fraction(1)
    return Polynomial(coeffs)


# ---------------------------------------------------------------------- order


def _loop(radius: int) -> List[int]:
    """The window [-radius, radius] listed in the cyclic order."""
    return list(range(0, radius + 1)) + list(range(-radius, 0))


def _order_rows(radius: int) -> List[CheckResult]:
    pts = range(-radius, radius + 1)
    idx = {x: i for i, x in enumerate(_loop(radius))}
    rows = [
        fold("order:irreflexive", ((precedes(a, a), False) for a in pts)),
        fold("order:index-agreement", ((precedes(a, b), idx[a] < idx[b]) for a in pts for b in pts)),
        fold("order:connected", ((precedes(a, b) + precedes(b, a), 1) for a in pts for b in pts if a != b)),
        fold("order:transitive", ((precedes_eq(a, c), True) for a in pts for b in pts if precedes_eq(a, b)
                                  for c in pts if precedes_eq(b, c))),
        fold("order:zero-first-minus-one-last",
             ((precedes_eq(0, a) and precedes_eq(a, -1), True) for a in pts)),
    ]

    def members(a: int, b: int) -> List[int]:
        loop = _loop(radius)
        i, j = idx[a], idx[b]
        return loop[i:j + 1] if i <= j else loop[i:] + loop[:j + 1]

    rows.append(fold("order:segment-membership",
                     ((sorted(x for x in pts if x in segment(a, b)), sorted(members(a, b)))
                      for a in pts for b in pts)))
    rows.append(fold("order:finite-runs",
                     ((segment(a, b).is_finite, (a >= 0) == (b >= 0) and a <= b) for a in pts for b in pts)))
    return rows


def _order_summands(seed: int) -> List[SummandSpec]:
    rng = random.Random(seed)
    specs = [SummandSpec.from_poly(Polynomial.constant(1)), SummandSpec.from_poly(X**3)]
    specs += [SummandSpec.from_poly(random_poly(rng, 5)) for _ in range(2)]
    return specs


def _sum_rows(f: SummandSpec, k: int, radius: int) -> List[CheckResult]:
    pts = range(-radius, radius + 1)
    g = f.negated()
    rs = lru_cache(maxsize=None)(lambda a, b: range_sum(f, a, b))
    rg = lru_cache(maxsize=None)(lambda a, b: range_sum(g, a, b))

    def enum(a: int, b: int) -> Fraction:
        return enumerate_sum(f, a, b)

    return [
        fold("sum:generating-vs-enumeration",
             ((rs(a, b), enum(a, b)) for a in pts for b in pts if segment(a, b).is_finite), k),
        fold("sum:wrap-split",
             ((rs(a, b), rs(a, -1) + rs(0, b)) for a in pts for b in pts if precedes(b, a)), k),
        fold("sum:empty-wrap", ((rs(a, a - 1), Fraction(0)) for a in pts), k),
        fold("sum:whole-axis", ((rs(a, a - 1), sum_over_integers(f)) for a in pts), k),
        fold("sum:reflection",
             ((rs(m, n), rg(-n, -m)) for m in pts for n in pts if precedes_eq(m, n)), k),
        fold("sum:reflection-enumerated",
             ((enum(m, n), enumerate_sum(g, -n, -m)) for m in pts for n in pts
              if segment(m, n).is_finite and segment(-n, -m).is_finite), k),
        fold("sum:splitting",
             ((rs(a, c), rs(a, b) + (0 if b == c else rs(b + 1, c)))
              for a in pts for c in pts for b in pts if b in segment(a, c)), k),
        fold("sum:symmetric-window",
             ((rs(-n, n), enum(0, n) + enumerate_sum(g, 1, n)) for n in range(1, radius + 1)), k),
        fold("sum:complement", ((rs(a, b), -rs(b + 1, a - 1)) for a in pts for b in pts), k),
        fold("sum:negative-upper",
             ((rs(1, -n), -enumerate_sum(g, 0, n - 1)) for n in range(1, radius + 1)), k),
        equality("sum:infinite-reflection", k, S.poly_sum(f.term), -(g.term(0) + S.poly_sum(g.term))),
    ]


def order_suite(radius: int = 20, seed: int = 0, max_k: int = 12) -> List[CheckResult]:
    rows = _order_rows(radius)
    for k, f in enumerate(_order_summands(seed)):
        rows.extend(_sum_rows(f, k, radius))
    rows.append(fold("sum:product-reflection", ((verify_product_reflection(n), True)
                                                for n in range(1, radius + 1))))
    for k in range(1, max_k + 1):
        q = bernoulli_polynomial(k)
        rows.append(fold("sum:power-sum-reflection",
                         ((q(-n), sign(k - 1) * q(n - 1)) for n in range(0, radius + 1)), k))
    n_max = min(radius, 30)
    rows.append(fold("binomial:negative-top",
                     ((ext_binomial(-n, m), sign(m) * binomial(n + m - 1, m))
                      for n in range(1, n_max + 1) for m in range(1, n_max + 1))))
    rows.append(fold("binomial:negative-bottom",
                     ((ext_binomial(n, -m), 0) for n in range(1, n_max + 1) for m in range(1, n_max + 1))))
    rows.append(fold("binomial:both-negative",
                     ((ext_binomial(-n, -m), sign(n + m) * binomial(m - 1, n - 1))
                      for n in range(1, n_max + 1) for m in range(1, n_max + 1))))
    return ordered(rows)


# --------------------------------------------------------------------- series


def _quasi_even(rng: random.Random, shift: int) -> Polynomial:
    """h(x) h(-x - shift), which satisfies f(-x) = f(x - shift)."""
    h = random_poly(rng, 3, 5)
    if h.degree < 1:
        h = h + X
    f = h * h.reflect().shift(shift)
    if not is_quasi_even(f, shift):
        raise InternalInconsistency("quasi-even builder produced a bad polynomial")
    return f


def random_series_term(rng: random.Random):
    kind = rng.randrange(10)
    if kind == 0:
        return S.PolyTerm(random_poly(rng, 10))
    if kind == 1:
        return S.AltPolyTerm(random_poly(rng, 10))
    if kind == 2:
        return S.ArithProg(Fraction(rng.randint(-20, 20), rng.randint(1, 4)), Fraction(rng.randint(-9, 9), rng.randint(1, 3)))
    if kind == 3:
        return S.AltArithProg(Fraction(rng.randint(-20, 20), rng.randint(1, 4)), Fraction(rng.randint(-9, 9), rng.randint(1, 3)))
    if kind == 4:
        g = Fraction(rng.choice([-7, -5, -3, -2, -1, 2, 3, 5, 7]), rng.randint(1, 4))
        if g == 1:
            g = Fraction(3)
        return S.Geometric(Fraction(rng.randint(1, 9), rng.randint(1, 3)), g, rng.randint(0, 1))
    if kind == 5:
        return S.OddPoly(rng.randint(1, 10))
    if kind == 6:
        return S.AltOddPoly(rng.randint(1, 10))
    if kind == 7:
        a = rng.choice([-5, -4, -3, -2, -1, 1, 2, 3, 4, 5])
        x = Fraction(1) if rng.random() < 0.3 else Fraction(rng.randint(-4, 5), 6)
        return S.Binomial(a, x)
    if kind == 8:
        t, eps = rng.randint(1, 3), rng.choice([1, -1])
        return S.QuasiEvenPoly(_quasi_even(rng, eps * t), t, eps)
    items = []
    for _ in range(rng.randint(2, 3)):
        cls = rng.choice([S.PolyTerm, S.AltPolyTerm])
        items.append((Fraction(rng.randint(-5, 5), rng.randint(1, 3)), cls(random_poly(rng, 6))))
    return S.Combo(tuple(items))


def route_equivalence(cases: int = 300, seed: int = 0) -> List[CheckResult]:
    rng = random.Random(seed)
    rows = []
    for i in range(cases):
        t = random_series_term(rng)
        try:
            r = S.sum_series(t)
        except InternalInconsistency as exc:
            rows.append(CheckResult("series:route-equivalence", i, False, S.class_name(t), str(exc)))
            continue
        values = [v for _, v in r.routes]
        ok = len(values) >= 2 and all(values_agree(values[0], v) for v in values[1:])
        rows.append(CheckResult("series:route-equivalence", i, ok, values[0], values[-1]))
    return rows


def _linearity_rows(rng: random.Random, cases: int) -> List[CheckResult]:
    rows = []
    for i in range(cases):
        items = []
        for _ in range(rng.randint(2, 4)):
            t = random_series_term(rng)
            while isinstance(t, S.Combo):
                t = random_series_term(rng)
            items.append((Fraction(rng.randint(-6, 6), rng.randint(1, 4)), t))
        expected = sum((c * S.exact_value(t) for c, t in items), Fraction(0))
        rows.append(equality("series:linearity", i, S.exact_value(S.Combo(tuple(items))), expected))
    return rows


def _quasi_even_rows(rng: random.Random, cases: int) -> List[CheckResult]:
    rows = []
    for i in range(cases):
        f = _quasi_even(rng, 1)
        rows.append(equality("series:quasi-even-unit-shift", i, S.poly_sum(f),
                             limit(Poly(f)).value / 2 - f(0)))
        g = _quasi_even(rng, -1)
        rows.append(equality("series:quasi-even-unit-backshift", i, S.poly_sum(g),
                             -limit(Poly(g.shift(1))).value / 2))
    for k in range(1, 7):
        f = Polynomial((-1, 2)) ** (2 * k)
        via_class = S.sum_series(S.QuasiEvenPoly(f, 1, -1)).value.value
        rows.append(equality("series:odd-even-power-backshift", k, via_class,
                             -limit(Poly(f.shift(1))).value / 2))
    return rows


def _regularity_rows(n: int = 100_000) -> List[CheckResult]:
    rows = []
    for i, (c, g) in enumerate([(1, Fraction(1, 2)), (3, Fraction(-2, 3)), (Fraction(1, 7), Fraction(9, 10)),
                                (-2, Fraction(-1, 5))]):
        closed = float(S.exact_value(S.Geometric(c, g, 0)))
        partial = float(c) * float(np.sum(float(g) ** np.arange(0, n, dtype=float)))
        bound = max(2 * abs(float(g)) ** n / (1 - abs(float(g))), 1e-12)
        rows.append(CheckResult("series:geometric-regularity", i, abs(closed - partial) < min(bound, 1e-4),
                                closed, partial))
    for i, e in enumerate(x for x in S.builtin_examples() if x.convergent):
        partial = e.partial_sum(n)
        rows.append(CheckResult(f"series:regularity:{e.name}", None,
                                abs(partial - e.expected_float()) < 1e-4, e.expected_float(), partial))
    return rows


def series_suite(max_k: int = DEFAULT_MAX_K, seed: int = 0, cases: int = 300) -> List[CheckResult]:
    rng = random.Random(seed + 17)
    rows = route_equivalence(cases, seed)
    rows += _linearity_rows(rng, 25)
    for k in range(0, min(max_k, 10) + 1):
        if k:
            rows.append(equality("series:even-powers-vanish", k, S.exact_value(S.PolyTerm(X ** (2 * k))), 0))
        rows.append(equality("series:alt-even-powers-vanish", k,
                             S.exact_value(S.AltPolyTerm(X ** (2 * k))), 0 if k else HALF))
    for i in range(20):
        f = random_poly(rng, 8)
        rows.append(equality("series:reflected-pair", i, S.exact_value(S.PolyTerm(f + f.reflect())), -f(0)))
    for k in range(1, 7):
        rows.append(equality("series:4u-3-odd-powers", k, S.odd_4u3_closed(k),
                             S.poly_sum(Polynomial((-3, 4)) ** (2 * k - 1))))
    rows.append(equality("series:4u-3-arith", 1, S.odd_4u3_closed(1), S.exact_value(S.ArithProg(1, 4))))
    for m in range(1, 6):
        rows += S.remainder_checks(m)
    for i in range(15):
        t = (S.PolyTerm if i % 2 == 0 else S.AltPolyTerm)(random_poly(rng, 7))
        for mode in ("commutative", "associative", "distributive"):
            rows += [CheckResult(f"series:structural:{r.check}", i, r.passed, r.lhs, r.rhs)
                     for r in S.structural_checks(t, mode)]
    rows += _quasi_even_rows(rng, 10)
    for e in S.builtin_examples():
        if e.term is not None and not isinstance(e.term, S.EvenRegular):
            rows.append(equality(f"series:staple:{e.name}", None, S.exact_value(e.term), e.expected.value))
        elif isinstance(e.term, S.EvenRegular):
            rows.append(CheckResult(f"series:even-regular:{e.name}", None,
                                    values_agree(S.sum_series(e.term).value, e.expected),
                                    S.sum_series(e.term).value, e.expected))
    for i in range(20):
        p = random_poly(rng, 6)
        s = rng.choice([-3, -2, -1, 1, 2, 3])
        rows.append(equality("series:shifted-sum", i, S.shift_sum(S.PolyTerm(p), s),
                             S.poly_sum(p.shift(-s))))
    rows += _regularity_rows()
    rows += limits_rows(max_k, rng)
    return ordered(rows)


def limits_rows(max_k: int, rng: random.Random, alternating_cases: int = 300) -> List[CheckResult]:
    rows = []
    for i in range(10):
        c = Fraction(rng.randint(-50, 50), rng.randint(1, 9))
        rows.append(equality("limit:constant", i, limit(Poly(Polynomial.constant(c))).value, c))
    rows.append(equality("limit:identity", None, limit(Poly(X)).value, -HALF))
    for k in range(0, max_k + 1):
        rows.append(equality("limit:power", k, limit(Poly(X**k)).value, Fraction(sign(k), k + 1)))
    for k in range(1, 9):
        rows.append(equality("limit:odd-base-even-power", k, limit(Poly((2 * X + 1) ** (2 * k))).value,
                             limit(Poly(X ** (2 * k))).value))
        rows.append(equality("limit:odd-base-odd-power", k, limit(Poly((2 * X + 1) ** (2 * k - 1))).value, 0))
    for k in range(0, 17):
        rows.append(equality("limit:alt-odd-base", k, limit(AltPoly((2 * X + 1) ** k)).value, 0))
    rows.append(fold("limit:alternating-random",
                     ((limit(AltPoly(random_poly(rng, 12))).value, 0) for _ in range(alternating_cases))))
    w = X**3 + Fraction(9, 2) * X**2 + X - Fraction(21, 4)
    rows.append(equality("limit:quasi-odd-example", None, quasi_odd_limit(h_omega(w, 3, 1), 1), 0))
    rows.append(equality("limit:half-shift-cube", None, quasi_odd_limit(X**3, 0), 0))
    for i in range(10):
        items = tuple((Fraction(rng.randint(-5, 5), rng.randint(1, 3)),
                       (Poly if rng.random() < 0.5 else AltPoly)(random_poly(rng, 6))) for _ in range(3))
        expected = sum((c * limit(e).value for c, e in items), Fraction(0))
        rows.append(equality("limit:linearity", i, limit(LinearCombo(items)).value, expected))
    for i in range(10):
        F = random_poly(rng, 10)
        rows.append(equality("limit:difference", i, integral_unit(F.shift(1)) - integral_unit(F),
                             integral_unit(F.shift(1) - F)))
    p = random_poly(rng, 8)
    rows.append(fold("limit:mirror-shift",
                     ((integral_unit(p.shift(1 + a)), integral_unit(p.reflect().shift(-a))) for a in range(-10, 11))))
    for i in range(10):
        q = random_poly(rng, 12)
        big = indefinite_sum(q)
        rows.append(equality("limit:indefinite-sum-inverse", i, big - big.shift(-1), q))
    return rows


# ------------------------------------------------------------------ bernoulli


def _qr_specs(max_n: int = 14):
    pairs = [(k, m) for k in range(1, 6) for m in range(1, 3)]
    for p in pairs:
        yield bern.QrSpec([p])
    for i, p in enumerate(pairs):
        for q in pairs[i + 1:]:
            if p[0] != q[0]:
                yield bern.QrSpec([p, q])


def bernoulli_suite(max_k: int = DEFAULT_MAX_K, composition_max_k: int = DEFAULT_COMPOSITION_MAX_K,
                    seed: int = 0) -> List[CheckResult]:
    cap = min(max_k, composition_max_k)
    rows = [CheckResult(f"bernoulli:{r.check}", r.k, r.passed, r.lhs, r.rhs)
            for r in bern.identity_suite(max(max_k, 2), seed, composition_max_k=cap)]
    rows += bern.method_agreement(max_k, cap)
    for k in range(3, max_k + 1, 2):
        rows.append(equality("bernoulli:odd-vanish", k, bern.bernoulli(k), 0))
    for e in bern.table_comparison():
        if e.k > max_k:
            continue
        if e.matches:
            rows.append(equality("bernoulli:table", e.k, e.printed, e.computed))
        else:
            # a printed entry that disagrees with the recurrence is reported, not failed
            rows.append(CheckResult("bernoulli:table-flagged", e.k, True, e.printed, e.computed))
    for k in range(1, min(max_k, 14) + 1):
        comps = list(bern.compositions(k))
        ok = all(sum(c) == k for c in comps) and len({tuple(c) for c in comps}) == len(comps) == 2 ** (k - 1)
        rows.append(CheckResult("bernoulli:compositions", k, ok, len(comps), 2 ** (k - 1)))
    for i, spec in enumerate(s for s in _qr_specs() if s.n_r <= 14):
        lhs, rhs = bern.qr_sides(spec)
        rows.append(equality("bernoulli:qr", i, lhs, rhs))
    primes = [p for p in range(3, 98) if all(p % d for d in range(2, math.isqrt(p) + 1))]
    for p in primes:
        rows.append(fold("bernoulli:congruence", ((bern.congruence_sides(p, th)) for th in range(3, p + 1, 2)), p))
        rows.append(equality("bernoulli:congruence-special", p,
                             bern.mod_rational(p * bern.B(p - 1), p), p - 1))
    return ordered(rows)


# ----------------------------------------------------------------------- trig


def _grid(window: Window, count: int, rng: random.Random) -> np.ndarray:
    lo, hi = window.bounds()
    pad = 1e-3
    return np.array([rng.uniform(lo + pad, hi - pad) for _ in range(count)])


def _numeric(check: str, lhs: Callable, rhs: Callable, thetas: np.ndarray, k=None) -> CheckResult:
    a = np.asarray(lhs(thetas), dtype=float)
    b = np.asarray(rhs(thetas), dtype=float)
    err = np.abs(a - b)
    worst = int(np.argmax(err))
    return CheckResult(check, k, bool(np.all(err < TRIG_TOL)), float(a[worst]), float(b[worst]))


def _structural(check: str, lhs, rhs, k=None) -> CheckResult:
    return CheckResult(check, k, values_agree(lhs, rhs), lhs, rhs)


def trig_suite(seed: int = 0, samples: int = 50) -> List[CheckResult]:
    rng = random.Random(seed + 5)
    sym = _grid(SYMMETRIC, samples, rng)
    pos = _grid(POSITIVE_HALF, samples, rng)
    ls, lc = sin_shift_form, cos_shift_form
    sin, cos, th = TrigForm.sin, TrigForm.cos, TrigForm.theta

    rows = [
        _structural("trig:sin-half-shift-vanishes", ls(HALF), Exact(0)),
        _structural("trig:sin-limit", ls(0), -2 * sin(HALF) ** 2 * th(-1)),
        _structural("trig:cos-limit", lc(0), 2 * sin(HALF) * cos(HALF) * th(-1)),
        _structural("trig:sin-minus-half", ls(-HALF), -2 * sin(HALF) * lc(0)),
        _structural("trig:sin-tan-cos", ls(0), -TrigForm.tan(HALF) * lc(0)),
        _structural("trig:sin-next", ls(1), sin(HALF) * lc(HALF)),
        _structural("trig:sin-current", ls(0), -sin(HALF) * lc(HALF)),
        _structural("trig:sin-squared", sin_squared_form(),
                    HALF * TrigForm.cot(1) * (-sin(1) ** 2 * th(-1)) + HALF),
        _structural("trig:sin-sum", S.trig_sin_closed(), S.trig_sin_route()),
        _structural("trig:odd-sin-sum", S.odd_trig_sin_closed(), S.odd_trig_sin_route()),
        _structural("trig:cos-sum", S.sum_series(S.TrigCosSeries()).value, Exact(-HALF)),
        _structural("trig:alt-cos-sum", S.sum_series(S.AltTrigCosSeries()).value, Exact(HALF)),
    ]
    betas = [Fraction(n, 4) for n in range(-12, 13)]
    for i, b in enumerate(betas):
        rows.append(_structural("trig:shift-sin-reflection", ls(b + 1), -ls(-b), i))
        rows.append(_structural("trig:shift-cos-reflection", lc(b + 1), lc(-b), i))
        rows.append(_structural("trig:shift-sin-via-half", ls(b), sin(b - HALF) * lc(HALF), i))
        rows.append(_structural("trig:shift-cos-via-half", lc(b), cos(b - HALF) * lc(HALF), i))
        rows.append(_structural("trig:shift-cross", cos(b - HALF) * ls(b), sin(b - HALF) * lc(b), i))
        rows.append(_numeric("trig:shift-sin-numeric", lambda t, b=b: ls(b).approx(t),
                             lambda t, b=b: (np.cos(float(b) * t) * -2 * np.sin(t / 2) ** 2
                                             + np.sin(float(b) * t) * 2 * np.sin(t / 2) * np.cos(t / 2)) / t,
                             sym, i))
    # integrals over [-1, 0] by Gauss-Legendre quadrature
    nodes, weights = np.polynomial.legendre.leggauss(40)
    x, w = (nodes - 1) / 2, weights / 2

    def integral(fn):
        return lambda t: np.array([np.sum(w * fn(tt * x)) for tt in t])

    rows.append(_numeric("trig:integral-sin", lambda t: ls(0).approx(t), integral(np.sin), sym))
    rows.append(_numeric("trig:integral-cos", lambda t: lc(0).approx(t), integral(np.cos), sym))
    rows.append(_numeric("trig:integral-sin-squared", lambda t: sin_squared_form().approx(t),
                         integral(lambda y: np.sin(y) ** 2), sym))
    # finite identities behind the series values, checked for n = 1..20
    for n in range(1, 21):
        u = np.arange(1, n + 1)
        rows.append(_numeric("trig:finite-sin-identity", lambda t: np.sin(n * t),
                             lambda t: np.array([np.sin(tt) * np.sum(np.cos(u * tt))
                                                 + 2 * np.sin(tt / 2) ** 2 * np.sum(np.sin(u * tt)) for tt in t]),
                             pos, n))
        rows.append(_numeric("trig:finite-odd-sin-identity", lambda t: np.sin(n * t) ** 2 / np.sin(t),
                             lambda t: np.array([np.sum(np.sin((2 * u - 1) * tt)) for tt in t]), pos, n))
        rows.append(_numeric("trig:finite-tan-identity", lambda t: np.tan((n + 0.5) * t) - np.tan(t / 2),
                             lambda t: np.array([np.sum(np.sin(tt) / (np.cos((u + 0.5) * tt) * np.cos((u - 0.5) * tt)))
                                                 for tt in t]),
                             _grid(Window(Fraction(-1, 4 * n + 2), Fraction(1, 4 * n + 2)), samples, rng), n))
    # every trig class: all routes agree numerically across its window
    for t in (S.TrigCosSeries(), S.AltTrigCosSeries(), S.TrigSinSeries(), S.OddTrigSinSeries()):
        r = S.sum_series(t)
        grid = pos if r.window == POSITIVE_HALF else sym
        base = r.routes[0][1]
        for name, v in r.routes[1:]:
            rows.append(_numeric(f"trig:routes:{S.class_name(t)}:{name}",
                                 lambda x, base=base: as_trig(base).approx(x) + 0 * x,
                                 lambda x, v=v: as_trig(v).approx(x) + 0 * x, grid))
    rows.append(_numeric("trig:tan-example", lambda t: -np.tan(0.5) / 8 + 0 * t,
                         lambda t: as_trig(S.builtin("tan").expected).approx(1.0) + 0 * t, sym[:1]))
    for k in range(1, 11):
        rows.append(equality("trig:alt-odd-power-at-quarter", k, S.exact_value(S.AltOddPoly(2 * k)), 0))
    return ordered(rows)


# ---------------------------------------------------------------------- driver


def run_suites(names: Iterable[str], max_k: Optional[int] = None,
               composition_max_k: Optional[int] = None, workers: int = 4) -> Dict[str, List[CheckResult]]:
    """Run suites concurrently; the result is keyed and ordered by suite name."""
    names = list(names)
    for n in names:
        if n not in SUITES:
            raise InvalidArgument(f"unknown suite {n!r}")
    mk = DEFAULT_MAX_K if max_k is None else max_k
    ck = DEFAULT_COMPOSITION_MAX_K if composition_max_k is None else composition_max_k
    if mk < 2:
        raise InvalidArgument("max-k must be at least 2")
    jobs = {
        "order": lambda: order_suite(max_k=min(mk, 12)),
        "series": lambda: series_suite(max_k=mk),
        "bernoulli": lambda: bernoulli_suite(max_k=mk, composition_max_k=ck),
        "trig": lambda: trig_suite(),
    }
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        futures = {n: pool.submit(jobs[n]) for n in names}
        return {n: futures[n].result() for n in sorted(names, key=SUITES.index)}
