from fractions import Fraction
import math

import pytest
from hypothesis import given, strategies as st

from oracles import comb_signed
from regsum.errors import InvalidArgument
from regsum.exact import (
    Kind,
    binomial,
    ext_binomial,
    ext_factorial,
    format_rational,
    mod_rational,
    to_rational,
)


@pytest.mark.parametrize("n,k,want", [(5, 2, 10), (4, 0, 1), (7, 9, 0)])
def test_binomial_examples(n, k, want):
    assert binomial(n, k) == want


def test_ext_factorial_examples():
    assert ext_factorial(0).kind is Kind.FINITE and ext_factorial(0).value == 1
    assert ext_factorial(4).value == 24
    pole = ext_factorial(-3)
    assert pole.is_pole and pole.value == Fraction(1, 2)


@pytest.mark.parametrize("a,b,want", [(6, -2, 0), (-3, 2, 6), (-2, -5, -4)])
def test_ext_binomial_examples(a, b, want):
    assert ext_binomial(a, b) == want


def test_ext_binomial_pole_cases_exhaustive():
    for n in range(1, 31):
        for m in range(1, 31):
            assert ext_binomial(-n, m) == (-1) ** m * math.comb(n + m - 1, m)
            assert ext_binomial(n, -m) == 0
            assert ext_binomial(-n, -m) == (-1) ** (n + m) * (math.comb(m - 1, n - 1) if m >= n else 0)


@given(st.integers(-40, 40), st.integers(0, 25))
def test_ext_binomial_matches_falling_factorial(a, b):
    # for b >= 0 the pole arithmetic reproduces the usual generalized binomial
    assert ext_binomial(a, b) == comb_signed(a, b)


@given(st.integers(0, 60), st.integers(0, 60))
def test_ext_binomial_agrees_with_ordinary(a, b):
    if b <= a:
        assert ext_binomial(a, b) == binomial(a, b) == math.comb(a, b)


@given(st.fractions(), st.fractions())
def test_canonical_form_survives_arithmetic(x, y):
    for v in (x + y, x - y, x * y):
        r = to_rational(format_rational(v))
        assert r == v and math.gcd(r.numerator, r.denominator) == 1


def test_rational_text_format():
    assert format_rational(Fraction(-1, 12)) == "-1/12"
    assert format_rational(Fraction(4, 2)) == "2"
    assert to_rational("3/6") == Fraction(1, 2)


def test_mod_rational():
    assert mod_rational(Fraction(1, 2), 5) == 3
    assert mod_rational(Fraction(-7), 5) == 3
    with pytest.raises(InvalidArgument):
        mod_rational(Fraction(1, 5), 5)
