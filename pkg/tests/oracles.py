"""Independent reference computations used to derive and freeze expected values.

None of these share code with the package: Bernoulli numbers come from the
Akiyama-Tanigawa triangle, divergent power sums from mpmath's zeta and eta,
limits from numeric quadrature over [-1, 0].
"""
from fractions import Fraction
from functools import lru_cache

import mpmath

mpmath.mp.dps = 40


@lru_cache(maxsize=None)
def bernoulli_at(k: int) -> Fraction:
    """B_k with B_1 = +1/2, by the Akiyama-Tanigawa algorithm."""
    a = [Fraction(0)] * (k + 1)
    for m in range(k + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
    return a[0]


def zeta_power_sum(k: int) -> mpmath.mpf:
    """Regularized 1^k + 2^k + ... as zeta(-k)."""
    return mpmath.zeta(-k)


def eta_power_sum(k: int) -> mpmath.mpf:
    """Regularized 1^k - 2^k + 3^k - ... as eta(-k)."""
    return mpmath.altzeta(-k)


def poly_eval(coeffs, x):
    return sum(c * x**i for i, c in enumerate(coeffs))


def regularized_sum(coeffs) -> mpmath.mpf:
    return sum(mpmath.mpf(c.numerator) / c.denominator * zeta_power_sum(i) for i, c in enumerate(coeffs))


def regularized_alt_sum(coeffs) -> mpmath.mpf:
    return sum(mpmath.mpf(c.numerator) / c.denominator * eta_power_sum(i) for i, c in enumerate(coeffs))


def unit_integral(coeffs) -> mpmath.mpf:
    return mpmath.quad(lambda x: poly_eval([mpmath.mpf(c.numerator) / c.denominator for c in coeffs], x), [-1, 0])


def mp(q) -> mpmath.mpf:
    q = Fraction(q)
    return mpmath.mpf(q.numerator) / q.denominator


def close(a, b, tol=1e-25) -> bool:
    return abs(mp(a) - b) < tol


def brute_sum(f, a: int, b: int) -> Fraction:
    return sum((f(u) for u in range(a, b + 1)), Fraction(0))


def comb_signed(n: int, k: int) -> Fraction:
    """Generalized binomial n(n-1)...(n-k+1)/k! for k >= 0."""
    out = Fraction(1)
    for i in range(k):
        out = out * (n - i) / (i + 1)
    return out
