from fractions import Fraction
import math
import random

import pytest
from hypothesis import given, strategies as st

from regsum import dsl, limits as L, series as S
from regsum.errors import ExprSyntaxError, LexError, ParseError, UnsupportedClass
from regsum.poly import Polynomial, X


@pytest.mark.parametrize("text,cls,body", [
    ("(-1)^(u-1) * u", "AltArithProg", S.AltArithProg(1, 1)),
    ("2^u", "Geometric", S.Geometric(1, 2, 1)),
    ("u^2 + 3*u - 1/2", "PolyTerm", S.PolyTerm(Polynomial([Fraction(-1, 2), 3, 1]))),
    ("(2*u-1)^3", "OddPoly", S.OddPoly(4)),
    ("binom(-2,u)", "Binomial", S.Binomial(-2, 1)),
    ("sin(u*theta)", "TrigSinSeries", S.TrigSinSeries()),
    ("cos(u*theta)", "TrigCosSeries", S.TrigCosSeries()),
    ("sin((2*u-1)*theta)", "OddTrigSinSeries", S.OddTrigSinSeries()),
    ("n^2", "Poly", L.Poly(X**2)),
    ("cos(n*theta)", "TrigCos", L.TrigCos(0)),
])
def test_examples(text, cls, body):
    p = dsl.parse(text)
    assert dsl.class_of(p) == cls
    assert p.body == body


def test_polynomial_coefficients():
    p = dsl.parse("u^2 + 3*u - 1/2")
    assert p.body.p.coefficients == (Fraction(-1, 2), Fraction(3), Fraction(1))


@pytest.mark.parametrize("text,col", [
    ("u +", 4), ("u ** 2", 4), ("2u", 2), ("u $ 1", 3), ("sin(2*u*theta)", None),
    ("(u", None), ("u^u", None), ("", 1),
])
def test_error_format(text, col):
    with pytest.raises(ParseError) as info:
        dsl.parse(text)
    err = info.value
    msg = str(err)
    assert msg.startswith(f"line 1, col {err.column}: ")
    assert 0 <= err.pos <= len(text)
    if col is not None:
        assert err.column == col


def test_error_kinds():
    with pytest.raises(LexError):
        dsl.parse("u # 2")
    with pytest.raises(ExprSyntaxError):
        dsl.parse("u + * 2")
    with pytest.raises(UnsupportedClass):
        dsl.parse("sin(u*theta)^3")
    with pytest.raises(ExprSyntaxError):
        dsl.parse("u + n")


def test_target_mismatch():
    with pytest.raises(ExprSyntaxError):
        dsl.parse("n^2", target="sum")
    assert isinstance(dsl.parse("n", target="limit").target, dsl.Limit)


ALPHABET = list("u n()+-*/^ 0123456789,") + ["sin", "cos", "theta", "binom", "(-1)", "#", ".", "1/2"]


def _noise(rng):
    return "".join(rng.choice(ALPHABET) for _ in range(rng.randint(0, 14)))


def test_fuzz_totality():
    rng = random.Random(7)
    parsed = 0
    for _ in range(10_000):
        text = _noise(rng)
        try:
            dsl.parse(text)
            parsed += 1
        except ParseError as err:
            assert 0 <= err.pos <= len(text), text
            assert str(err).startswith("line 1, col ")
    assert parsed > 100


def _rand_poly_expr(rng, depth=0):
    r = rng.random()
    if depth > 2 or r < 0.3:
        return rng.choice(["u", str(rng.randint(-4, 9)), f"{rng.randint(1, 9)}/{rng.randint(2, 7)}"])
    if r < 0.5:
        return f"({_rand_poly_expr(rng, depth + 1)})^{rng.randint(0, 4)}"
    op = rng.choice(["+", "-", "*"])
    return f"{_rand_poly_expr(rng, depth + 1)} {op} {_rand_poly_expr(rng, depth + 1)}"


def _rand_series_expr(rng):
    base = _rand_poly_expr(rng)
    wraps = [
        lambda b: b,
        lambda b: f"(-1)^(u-1)*({b})",
        lambda b: f"({b})*{rng.choice(['2', '3', '1/2', '-2', '-1/3'])}^u",
        lambda b: f"{rng.randint(1, 5)}*binom({rng.randint(-4, 4)},u)",
        lambda b: f"{rng.randint(-3, 3)}*(({b}) + (-1)^u*(2*u-1)^{rng.randint(0, 3)})",
    ]
    return rng.choice(wraps)(base)


def test_classification_soundness():
    rng = random.Random(11)
    for _ in range(300):
        text = _rand_series_expr(rng)
        try:
            p = dsl.parse(text)
        except UnsupportedClass:
            continue
        for u in range(1, 51):
            assert p.body.term(u) == dsl.evaluate(p.ast, u), (text, u)


def test_limit_soundness():
    rng = random.Random(13)
    for _ in range(100):
        text = _rand_poly_expr(rng).replace("u", "n")
        if rng.random() < 0.5:
            text = f"(-1)^n*({text})"
        p = dsl.parse(text, target="limit")
        for n in range(1, 31):
            assert p.body.at(n) == dsl.evaluate(p.ast, n), text


def test_trig_soundness():
    for text in ["sin(u*theta)", "cos(u*theta)", "sin((2*u-1)*theta)", "(-1)^(u-1)*cos(u*theta)",
                 "(-1)^(u-1)*u^3*sin(u*theta)"]:
        p = dsl.parse(text)
        for u in range(1, 20):
            assert math.isclose(float(p.body.term(u, 0.7)), float(dsl.evaluate(p.ast, u, 0.7)),
                                rel_tol=1e-12, abs_tol=1e-12)


def test_round_trip():
    rng = random.Random(17)
    for _ in range(300):
        text = _rand_series_expr(rng)
        try:
            p = dsl.parse(text)
        except UnsupportedClass:
            continue
        again = dsl.parse(dsl.render(p))
        for u in range(1, 20):
            assert again.body.term(u) == p.body.term(u)
        assert S.sum_series(again.body).value == S.sum_series(p.body).value


@given(st.lists(st.integers(-9, 9), min_size=1, max_size=8))
def test_polynomial_round_trip(cs):
    p = Polynomial(cs)
    parsed = dsl.parse(p.render("u") if p.degree >= 0 else "0")
    assert S.exact_value(parsed.body) == S.poly_sum(p)


def test_determinism():
    rng = random.Random(19)
    for _ in range(100):
        text = _rand_series_expr(rng)
        try:
            a, b = dsl.parse(text), dsl.parse(text)
        except UnsupportedClass:
            continue
        assert a == b and dsl.render(a) == dsl.render(b)


def test_limits_of_rendered_functions():
    for text, want in [("n", Fraction(-1, 2)), ("n^2", Fraction(1, 3)), ("(-1)^n*n", Fraction(0))]:
        assert L.limit(dsl.parse(text).body).value == want
