from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from oracles import bernoulli_at, brute_sum, close, unit_integral
from regsum.errors import InvalidArgument, NotQuasiOdd
from regsum.poly import (
    Polynomial,
    X,
    alt_indefinite_sum,
    bernoulli_polynomial,
    build_sigma_poly,
    h_omega,
    indefinite_sum,
    integral_unit,
    is_quasi_odd,
    power_sum_avg,
    sigma_elem,
)

rationals = st.builds(Fraction, st.integers(-99, 99), st.integers(1, 9))
coeffs = st.lists(rationals, min_size=1, max_size=13)
short = st.lists(rationals, min_size=1, max_size=7)
polys = coeffs.map(Polynomial)


def test_indefinite_sum_examples():
    assert indefinite_sum(Polynomial.constant(1)) == X
    assert indefinite_sum(X**2) == X**3 / 3 + X**2 / 2 + X / 6
    assert indefinite_sum(X**5)(2) == 33


@given(polys)
def test_indefinite_sum_inverse(p):
    big = indefinite_sum(p)
    assert (big - big.shift(-1) - p).is_zero()


@given(short)
def test_indefinite_sum_matches_enumeration(c):
    p = Polynomial(c)
    big = indefinite_sum(p)
    total = Fraction(0)
    for n in range(1, 201):
        total += p(n)
        if n % 37 == 0 or n == 200:
            assert big(n) == total


def test_alt_indefinite_sum_examples():
    assert alt_indefinite_sum(Polynomial.constant(1)) == (Fraction(1, 2), Polynomial.constant(Fraction(1, 2)))
    assert alt_indefinite_sum(X) == (Fraction(1, 4), X / 2 + Fraction(1, 4))
    # partial sums are (-1)^(n-1) n(n+1)/2, so the constant is 0
    c, q = alt_indefinite_sum(X**2)
    assert c == 0 and c + q(3) == 6


@given(short)
def test_alt_indefinite_sum_matches_enumeration(c):
    p = Polynomial(c)
    const, q = alt_indefinite_sum(p)
    total = Fraction(0)
    for n in range(1, 201):
        total += (-1) ** (n - 1) * p(n)
        if n % 41 == 0 or n == 200:
            assert const + (-1) ** (n - 1) * q(n) == total


def test_integral_unit_examples():
    assert integral_unit(X) == Fraction(-1, 2)
    assert integral_unit(X**2) == Fraction(1, 3)
    assert integral_unit(3 * X**3 + Fraction(9, 2) * X**2 - 9 * X - Fraction(21, 4)) == 0


@given(short)
def test_integral_unit_against_quadrature(c):
    assert close(integral_unit(Polynomial(c)), unit_integral(c), 1e-20)


def test_bernoulli_polynomial_examples():
    assert bernoulli_polynomial(0) == X
    assert bernoulli_polynomial(1) == X**2 / 2 + X / 2
    assert bernoulli_polynomial(5)(-3) == 33 == bernoulli_polynomial(5)(2)


def test_bernoulli_polynomial_reflection():
    # k = 0 is excluded: the u = 0 boundary term 0^0 = 1 does not vanish
    for k in range(1, 13):
        q = bernoulli_polynomial(k)
        assert q == indefinite_sum(X**k)
        for n in range(0, 21):
            assert q(-n) == (-1) ** (k - 1) * q(n - 1)
    assert bernoulli_at(1) == Fraction(1, 2)
    assert all(bernoulli_at(2 * u + 1) == 0 for u in range(1, 10))


@given(polys)
def test_generating_limit_difference(c):
    # lim F(n+1) - lim F(n) = lim f(n) with f = F(x+1) - F(x)
    assert integral_unit(c.shift(1)) - integral_unit(c) == integral_unit(c.shift(1) - c)


@given(short)
def test_mirror_shift_limit(c):
    p = Polynomial(c)
    for a in range(-10, 11):
        assert integral_unit(p.shift(1 + a)) == integral_unit(p.reflect().shift(-a))


@pytest.mark.parametrize("u,t,want", [(2, 3, 11), (0, 5, 1), (3, 3, 6)])
def test_sigma_elem(u, t, want):
    assert sigma_elem(u, t) == want


@pytest.mark.parametrize("u,t,want", [(0, 5, 1), (1, 5, 2), (2, 3, Fraction(5, 3))])
def test_power_sum_avg(u, t, want):
    assert power_sum_avg(u, t) == want


def test_build_sigma_poly():
    assert build_sigma_poly(1) == X**2 + X
    f = build_sigma_poly(3)
    assert f == X**4 + 6 * X**3 + 11 * X**2 + 6 * X
    assert f(-2) == f(-1) == 0
    with pytest.raises(InvalidArgument):
        build_sigma_poly(2)


def test_h_omega_example():
    w = X**3 + Fraction(9, 2) * X**2 + X - Fraction(21, 4)
    h = h_omega(w, 3, 1)
    assert h == 3 * X**3 + Fraction(9, 2) * X**2 - 9 * X - Fraction(21, 4)
    assert is_quasi_odd(h, 1)
    assert h_omega(X + Fraction(1, 2), 1, 1) == X + Fraction(1, 2)
    with pytest.raises(NotQuasiOdd):
        h_omega(X**2, 1, 1)
