from fractions import Fraction
import math
import random

import numpy as np
import pytest
from hypothesis import given, strategies as st

from oracles import close, eta_power_sum, regularized_alt_sum, regularized_sum, zeta_power_sum
from regsum import series as S
from regsum.errors import DomainViolation, InvalidArgument, NotQuasiEven, PoleAtOne
from regsum.limits import Poly, limit
from regsum.poly import Polynomial, X
from regsum.trigform import Exact, TrigForm

rationals = st.builds(Fraction, st.integers(-50, 50), st.integers(1, 7))
polys = st.lists(rationals, min_size=1, max_size=11).map(Polynomial)
HALF = Fraction(1, 2)


@pytest.mark.parametrize("term,want", [
    (S.PolyTerm(X), Fraction(-1, 12)),
    (S.AltPolyTerm(X), Fraction(1, 4)),
    (S.Geometric(1, 2, 0), Fraction(-1)),
    (S.Geometric(1, -2, 0), Fraction(1, 3)),
    (S.ArithProg(1, 2), Fraction(1, 3)),
    (S.AltArithProg(1, 2), Fraction(0)),
    (S.QuasiEvenPoly((2 * X - 1) ** 2, 1, -1), Fraction(-1, 6)),
    (S.Binomial(-2, 1), Fraction(1, 4)),
    (S.PolyTerm(Polynomial.constant(1)), Fraction(-1, 2)),
    (S.AltPolyTerm(Polynomial.constant(1)), HALF),
])
def test_spec_examples(term, want):
    r = S.sum_series(term)
    assert r.value == Exact(want)
    assert len(r.routes) >= 2


def test_even_regular_example():
    assert S.exact_value(S.EvenRegular("reciprocal")) == HALF
    with pytest.raises(InvalidArgument):
        S.EvenRegular("my-function")


@given(polys)
def test_polynomial_sum_matches_zeta(p):
    assert close(S.poly_sum(p), regularized_sum(p.coefficients), 1e-15)


@given(polys)
def test_alternating_sum_matches_eta(p):
    assert close(S.alt_poly_sum(p), regularized_alt_sum(p.coefficients), 1e-15)


@pytest.mark.parametrize("k", range(0, 21))
def test_power_sums_match_zeta(k):
    assert close(S.power_sum(k + 1), zeta_power_sum(k), 1e-20)
    assert close(S.alt_power_sum(k + 1), eta_power_sum(k), 1e-20)


@pytest.mark.parametrize("k", range(1, 11))
def test_even_powers_vanish(k):
    assert S.exact_value(S.PolyTerm(X ** (2 * k))) == 0
    assert S.exact_value(S.AltPolyTerm(X ** (2 * k))) == 0


@given(polys)
def test_reflected_pair_sums_to_minus_f0(f):
    assert S.exact_value(S.PolyTerm(f + f.reflect())) == -f(0)


@pytest.mark.parametrize("k", range(1, 7))
def test_4u_minus_3(k):
    assert S.odd_4u3_closed(k) == S.poly_sum(Polynomial((-3, 4)) ** (2 * k - 1))


def test_4u_minus_3_first_case():
    assert S.odd_4u3_closed(1) == Fraction(7, 6) == S.exact_value(S.ArithProg(1, 4))


@given(st.fractions(min_value=-20, max_value=20, max_denominator=9),
       st.fractions(min_value=-5, max_value=5, max_denominator=9), st.sampled_from([0, 1]))
def test_geometric_closed_form(c, g, start):
    if g == 1 or c == 0:
        return
    expected = c / (1 - g) if start == 0 else c * g / (1 - g)
    assert S.exact_value(S.Geometric(c, g, start)) == expected


def test_geometric_pole():
    with pytest.raises(PoleAtOne):
        S.sum_series(S.Geometric(1, 1))


@pytest.mark.parametrize("a", [-5, -4, -3, -2, -1, 1, 2, 3, 4, 5])
@pytest.mark.parametrize("x", [Fraction(1), Fraction(1, 2), Fraction(-2, 3), Fraction(5, 6)])
def test_binomial_series(a, x):
    assert S.exact_value(S.Binomial(a, x)) == (1 + x) ** a


@pytest.mark.parametrize("m", range(1, 6))
def test_remainder_shape(m):
    rows = S.remainder_checks(m)
    assert all(r.passed for r in rows)
    assert S.remainder_poly(m).degree == m - 1


def test_remainder_matches_tail():
    # at |x| < 1 the remainder is the convergent tail
    for m in (1, 2, 3):
        for k in (0, 3, 7):
            x = Fraction(1, 3)
            tail = sum(float(S.Binomial(-m, x).term(u)) for u in range(k + 1, 400))
            assert math.isclose(float(S.remainder(m, k, x)), tail, rel_tol=1e-12, abs_tol=1e-15)


def test_structural_examples():
    assoc = S.structural_checks(S.PolyTerm(Polynomial.constant(1)), "associative")[0]
    assert assoc.passed and assoc.lhs == Fraction(-1, 2)
    alt = S.structural_checks(S.AltPolyTerm(Polynomial.constant(1)), "associative")[0]
    assert alt.passed and alt.lhs == HALF
    even, odd = S.structural_checks(S.PolyTerm(X), "distributive")
    assert even.passed and even.lhs == Fraction(-1, 6) and odd.passed
    with pytest.raises(InvalidArgument):
        S.structural_checks(S.PolyTerm(X), "sideways")


@given(polys, st.booleans())
def test_structural_properties(p, alt):
    t = S.AltPolyTerm(p) if alt else S.PolyTerm(p)
    for mode in ("commutative", "associative", "distributive"):
        assert all(r.passed for r in S.structural_checks(t, mode))


def test_shift_sum_examples():
    shifted = S.shift_sum(S.PolyTerm(X**2), -1)
    assert shifted == S.poly_sum((X + 1) ** 2) == Fraction(-2, 3)
    # Sum u = (1/2) lim n^2 - 1/4
    assert S.poly_sum(X) == limit(Poly(X**2)).value / 2 - Fraction(1, 4)
    p = X**3 - X
    assert S.shift_sum(S.PolyTerm(p), 0) == S.poly_sum(p)
    assert S.shift_sum(S.PolyTerm(Polynomial.constant(1)), 1) == Fraction(-1, 2)


@given(polys, st.integers(-4, 4))
def test_shift_sum_property(p, s):
    assert S.shift_sum(S.PolyTerm(p), s) == S.poly_sum(p.shift(-s))


def test_quasi_even_rejects_non_members():
    with pytest.raises(NotQuasiEven):
        S.QuasiEvenPoly(X**2 + X**3, 1, 1)


def test_quasi_even_unit_shift_rules():
    rng = random.Random(2)
    for _ in range(20):
        h = Polynomial([Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(3)]) + X
        f = h * h.reflect().shift(1)
        assert S.poly_sum(f) == limit(Poly(f)).value / 2 - f(0)
        g = h * h.reflect().shift(-1)
        assert S.poly_sum(g) == -limit(Poly(g.shift(1))).value / 2
    for k in range(1, 6):
        f = (2 * X - 1) ** (2 * k)
        names = [n for n, _ in S.sum_series(S.QuasiEvenPoly(f, 1, -1)).routes]
        assert "unit-backshift" in names


def test_linearity():
    items = ((2, S.PolyTerm(X)), (Fraction(-1, 3), S.Geometric(1, 3, 1)), (5, S.AltArithProg(1, 2)))
    want = 2 * Fraction(-1, 12) - Fraction(1, 3) * Fraction(-3, 2) + 0
    assert S.exact_value(S.Combo(items)) == want


def test_trig_sums():
    assert S.sum_series(S.TrigCosSeries()).value == Exact(-HALF)
    assert S.sum_series(S.AltTrigCosSeries()).value == Exact(HALF)
    r = S.sum_series(S.TrigSinSeries())
    assert r.value == HALF * TrigForm.cot(HALF) - TrigForm.theta(-1)
    assert math.isclose(r.approx(1.0), 0.5 / math.tan(0.5) - 1.0, rel_tol=1e-14)
    with pytest.raises(DomainViolation):
        r.value.approx(-1.0)
    odd = S.sum_series(S.OddTrigSinSeries())
    assert math.isclose(odd.approx(1.0), 0.5 / math.sin(1.0) - 0.5 * math.cos(1.0), rel_tol=1e-14)
    assert S.exact_value(S.AltPolySin(2)) == 0 == S.exact_value(S.AltPolyCos(1))


def test_trig_routes_numeric_agreement():
    rng = np.random.default_rng(4)
    for t in (S.TrigCosSeries(), S.TrigSinSeries(), S.OddTrigSinSeries()):
        r = S.sum_series(t)
        lo, hi = r.window.bounds()
        thetas = rng.uniform(lo + 1e-3, hi - 1e-3, 50)
        base = np.asarray([float(_num(r.routes[0][1], x)) for x in thetas])
        for _, v in r.routes[1:]:
            other = np.asarray([float(_num(v, x)) for x in thetas])
            assert np.max(np.abs(base - other)) < 1e-12


def _num(v, x):
    return v.value if isinstance(v, Exact) else v.approx(x)


def test_sum_from_other_starts():
    assert S.sum_from(S.PolyTerm(X), 0).value == Exact(Fraction(-1, 12))
    assert S.sum_from(S.PolyTerm(Polynomial.constant(1)), 0).value == Exact(HALF)
    assert S.sum_from(S.PolyTerm(X**2), 3).value == Exact(Fraction(-5))
    assert S.sum_from(S.Geometric(1, 2, 0), 1).value == Exact(-2)
    r = S.sum_from(S.TrigCosSeries(), 0)
    assert r.value == Exact(HALF)


@pytest.mark.parametrize("name,value", [
    ("reciprocal", HALF), ("alternating", -1), ("quarter", Fraction(1, 4)), ("even-rational", HALF)])
def test_convergent_builtins(name, value):
    e = S.builtin(name)
    assert e.convergent and e.expected == Exact(value)
    assert abs(e.partial_sum(100_000) - float(value)) < 1e-4
    assert S.sum_series(e.term).value == Exact(value)
    assert S.sum_series(e.term).value == Exact(-Fraction(e.f0.value) / 2)


def test_tan_builtin():
    e = S.builtin("tan")
    expected = -math.tan(0.5) / 8
    assert abs(e.partial_sum(100_000) - expected) < 1e-4
    assert math.isclose(S.sum_series(e.term).approx(), expected, rel_tol=1e-14)


def test_divergent_builtins():
    assert S.builtin("cosh").expected == Exact(-HALF) and not S.builtin("cosh").convergent
    assert S.builtin("exp-pair").expected == Exact(-1)
    for e in S.builtin_examples():
        if e.term is not None and not isinstance(e.term, S.EvenRegular):
            assert S.sum_series(e.term).value == e.expected


def test_geometric_regularity():
    for g in (Fraction(1, 2), Fraction(-3, 4), Fraction(9, 10)):
        n = 100_000
        partial = float(np.sum(float(g) ** np.arange(n, dtype=float)))
        closed = float(S.exact_value(S.Geometric(1, g)))
        assert abs(closed - partial) < max(2 * abs(float(g)) ** n / (1 - abs(float(g))), 1e-12)


def test_sum_result_json():
    d = S.sum_series(S.PolyTerm(X)).to_json()
    assert d["class"] == "PolyTerm" and d["value"] == {"exact": "-1/12"} and d["start"] == 1
    assert [r["name"] for r in d["routes"]] == ["power-sums", "partial-sum-limit"]
    t = S.sum_series(S.TrigSinSeries()).to_json()
    assert "trig_form" in t["value"] and t["value"]["window"] == [0.0, math.pi] and t["approx"] is None
