"""Bernoulli numbers by eight independent methods, and identities among them.

Convention: B_1 = +1/2 and B_k = 0 for odd k >= 3.  The Louivre recurrence
is the reference; the other methods are two more recurrences and five
finite sums over compositions, partitions or binomial double sums.
"""
from __future__ import annotations

import enum
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .errors import InvalidArgument, NotQuasiEven
from .exact import factorial, mod_rational, sign
from .louivre import bernoulli_number
from .poly import (
    Polynomial,
    X,
    bernoulli_polynomial,
    build_sigma_poly,
    integral_unit,
    is_quasi_even,
    power_sum_avg,
    sigma_elem,
)
from .report import CheckResult, equality, ordered

B = bernoulli_number


class BernoulliMethod(str, enum.Enum):
    LOUIVRE = "Louivre"
    RECUR1 = "Recur1"
    RECUR2 = "Recur2"
    FINITE1 = "Finite1"
    FINITE2 = "Finite2"
    FINITE3 = "Finite3"
    FINITE4 = "Finite4"
    FINITE5 = "Finite5"

    @classmethod
    def parse(cls, name: str) -> "BernoulliMethod":
        for m in cls:
            if m.value.lower() == name.lower():
                return m
        raise InvalidArgument(f"unknown method {name!r}")


EVEN_ONLY = {
    BernoulliMethod.RECUR1,
    BernoulliMethod.RECUR2,
    BernoulliMethod.FINITE2,
    BernoulliMethod.FINITE3,
    BernoulliMethod.FINITE4,
}
COMPOSITION_BASED = {
    BernoulliMethod.FINITE1,
    BernoulliMethod.FINITE2,
    BernoulliMethod.FINITE3,
    BernoulliMethod.FINITE4,
}

# Values as printed in the reference table, kept verbatim (including B_12).
PRINTED_TABLE: Dict[int, Fraction] = {
    0: Fraction(1), 1: Fraction(1, 2), 2: Fraction(1, 6), 3: Fraction(0),
    4: Fraction(-1, 30), 5: Fraction(0), 6: Fraction(1, 42), 7: Fraction(0),
    8: Fraction(-1, 30), 9: Fraction(0), 10: Fraction(5, 66), 11: Fraction(0),
    12: Fraction(691, 2730), 13: Fraction(0), 14: Fraction(7, 6), 15: Fraction(0),
    16: Fraction(-3617, 510), 17: Fraction(0), 18: Fraction(43867, 798), 19: Fraction(0),
    20: Fraction(-174611, 330),
}


@dataclass(frozen=True)
class TableEntry:
    k: int
    printed: Fraction
    computed: Fraction

    @property
    def matches(self) -> bool:
        return self.printed == self.computed


def table_comparison() -> List[TableEntry]:
    return [TableEntry(k, v, B(k)) for k, v in sorted(PRINTED_TABLE.items())]


def table_mismatches() -> List[TableEntry]:
    return [e for e in table_comparison() if not e.matches]


# ---------------------------------------------------------------- enumeration


def compositions(k: int, min_part: int = 1) -> Iterator[List[int]]:
    """Ordered compositions of k into parts >= min_part.

    Yielded by number of parts, then lexicographically.  k = 0 yields the
    empty composition once.
    """
    if k < 0 or min_part < 1:
        raise InvalidArgument("compositions expects k >= 0 and min_part >= 1")
    if k == 0:
        yield []
        return
    for t in range(1, k // min_part + 1):
        yield from _fixed_length(k, t, min_part)


def _fixed_length(k: int, t: int, m: int) -> Iterator[List[int]]:
    if t == 1:
        if k >= m:
            yield [k]
        return
    for first in range(m, k - m * (t - 1) + 1):
        for rest in _fixed_length(k - first, t - 1, m):
            yield [first] + rest


def partitions(n: int, min_part: int = 1) -> Iterator[List[int]]:
    """Partitions of n into non-decreasing parts >= min_part."""
    if n == 0:
        yield []
        return
    for first in range(min_part, n + 1):
        for rest in partitions(n - first, first):
            yield [first] + rest


def _inv_fact_product(parts: Sequence[int], f) -> Fraction:
    d = 1
    for p in parts:
        d *= factorial(f(p))
    return Fraction(1, d)


# -------------------------------------------------------------------- methods


def _recur1(k: int) -> Fraction:
    # sum_{u=0}^{j} (2^{2u-1} - 1) C(2j+1, 2u) B_{2u} = 0, solved for B_{2j}
    evens = [Fraction(1)]
    for j in range(1, k // 2 + 1):
        acc = sum(((Fraction(2) ** (2 * u - 1) - 1) * math.comb(2 * j + 1, 2 * u) * evens[u]
                   for u in range(j)), Fraction(0))
        evens.append(-acc / ((Fraction(2) ** (2 * j - 1) - 1) * (2 * j + 1)))
    return evens[k // 2]


def _recur2(k: int) -> Fraction:
    # sum_{u=0}^{j} (2^{2u-1} - 1) C(2j, 2u) B_{2u} = -2^{2j-1} B_{2j}
    evens = [Fraction(1)]
    for j in range(1, k // 2 + 1):
        acc = sum(((Fraction(2) ** (2 * u - 1) - 1) * math.comb(2 * j, 2 * u) * evens[u]
                   for u in range(j)), Fraction(0))
        evens.append(-acc / (2 ** (2 * j) - 1))
    return evens[k // 2]


def _finite1(k: int) -> Fraction:
    total = Fraction(0)
    for c in compositions(k):
        total += sign(len(c) + k) * _inv_fact_product(c, lambda u: u + 1)
    return factorial(k) * total


def _finite2(k: int) -> Fraction:
    j = k // 2
    total = Fraction(0)
    for c in compositions(j):
        total += sign(len(c) - 1) * (2 * c[0] - 1) * _inv_fact_product(c, lambda u: 2 * u + 1)
    return Fraction(factorial(k), 2) * total


def _finite3(k: int) -> Fraction:
    j = k // 2
    total = Fraction(0)
    for u0 in range(j + 1):
        lead = Fraction(1, factorial(2 * u0))
        for c in compositions(j - u0):
            total += sign(len(c)) * lead * _inv_fact_product(c, lambda u: 2 * u + 1)
    return Fraction(factorial(k), 2 ** k) * total


def _finite4(k: int) -> Fraction:
    # (2^{2j+1} - 2) B_{2j} = (2j)! * sum_{u=1}^{j} sum_nu (-1)^s / (2^{s+1} (2u-1)! nu_1!...nu_s!)
    # with nu an ordered tuple of even parts > 1 summing to 2j - 2u.
    j = k // 2
    total = Fraction(0)
    for u in range(1, j + 1):
        lead = Fraction(1, factorial(2 * u - 1))
        for c in compositions(j - u):
            s = len(c)
            total += sign(s) * lead * _inv_fact_product(c, lambda v: 2 * v) / 2 ** (s + 1)
    return factorial(k) * total / (2 ** (k + 1) - 2)


def finite4_partition_rule(k: int) -> Fraction:
    """The nondecreasing-partition reading of the fourth finite formula.

    Kept for comparison only: it reproduces B_2..B_8 and departs from the
    true values from B_10 on.
    """
    _require_even(k, BernoulliMethod.FINITE4)
    j = k // 2
    total = Fraction(0)
    for u in range(1, j):
        for nu in partitions(2 * j + 1 - 2 * u, 2):
            s = len(nu)
            total += Fraction(sign(s), 2 ** s * factorial(2 * u - 1)) * _inv_fact_product(nu, lambda v: v)
    return (1 + factorial(k) * total) / (2 ** (k + 1) - 2)


def _finite5(k: int) -> Fraction:
    total = Fraction(0)
    for u in range(1, k + 1):
        inner = sum(sign(t) * t**k * math.comb(u, t) for t in range(1, u + 1))
        total += Fraction(inner, u + 1)
    return sign(k) * total


_IMPLEMENTATIONS = {
    BernoulliMethod.LOUIVRE: bernoulli_number,
    BernoulliMethod.RECUR1: _recur1,
    BernoulliMethod.RECUR2: _recur2,
    BernoulliMethod.FINITE1: _finite1,
    BernoulliMethod.FINITE2: _finite2,
    BernoulliMethod.FINITE3: _finite3,
    BernoulliMethod.FINITE4: _finite4,
    BernoulliMethod.FINITE5: _finite5,
}


def _require_even(k: int, method: BernoulliMethod) -> None:
    if k < 2 or k % 2:
        raise InvalidArgument(f"{method.value} computes B_2k only; got index {k}")


def is_applicable(k: int, method: BernoulliMethod) -> bool:
    if k < 0:
        return False
    if method is BernoulliMethod.LOUIVRE:
        return True
    if method in EVEN_ONLY:
        return k >= 2 and k % 2 == 0
    return k >= 1


def applicable_methods(k: int) -> List[BernoulliMethod]:
    return [m for m in BernoulliMethod if is_applicable(k, m)]


def bernoulli(k: int, method: BernoulliMethod | str = BernoulliMethod.LOUIVRE) -> Fraction:
    if isinstance(method, str):
        method = BernoulliMethod.parse(method)
    if k < 0:
        raise InvalidArgument("Bernoulli index must be non-negative")
    if method in EVEN_ONLY:
        _require_even(k, method)
    elif method is not BernoulliMethod.LOUIVRE and k < 1:
        raise InvalidArgument(f"{method.value} starts at index 1")
    return _IMPLEMENTATIONS[method](k)


# ------------------------------------------------------------------------ Q_r


@dataclass(frozen=True)
class QrSpec:
    pairs: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        pairs = tuple((int(k), int(m)) for k, m in self.pairs)
        if not pairs or any(k < 1 or m < 1 for k, m in pairs):
            raise InvalidArgument("Q_r needs a nonempty list of positive (k, m) pairs")
        object.__setattr__(self, "pairs", pairs)

    @property
    def n_r(self) -> int:
        return sum((k + 1) * m for k, m in self.pairs)


def qr_polynomial(spec: QrSpec) -> Polynomial:
    out = Polynomial.constant(1)
    for k, m in spec.pairs:
        out = out * ((k + 1) * bernoulli_polynomial(k)) ** m
    return out


def qr_sides(spec: QrSpec) -> Tuple[Fraction, Fraction]:
    """(integral over [-1, 0], predicted value)."""
    q = qr_polynomial(spec)
    integral = integral_unit(q)
    if spec.n_r % 2:
        return integral, Fraction(0)
    rhs = -2 * sum((a * B(u + 1) / (u + 1) for u, a in enumerate(q.coefficients)), Fraction(0))
    return integral, rhs


def verify_qr(spec: QrSpec) -> bool:
    lhs, rhs = qr_sides(spec)
    return lhs == rhs


# --------------------------------------------------------- single identities


def quasi_even_sides(f: Polynomial, t: int, eps: int) -> Tuple[Fraction, Fraction]:
    if eps not in (1, -1) or t < 1:
        raise InvalidArgument("expects t >= 1 and eps in {+1, -1}")
    if f.degree < 2 or f.degree % 2 or f(0) != 0 or not is_quasi_even(f, eps * t):
        raise NotQuasiEven(f"need even degree, f(0) = 0 and f(-x) = f(x - {eps * t})")
    k = f.degree // 2
    lhs = sum((f.coefficient(2 * u - 1) / u * B(2 * u) for u in range(1, k + 1)), Fraction(0))
    delta = (1 - eps) // 2
    inner = Polynomial()
    for u in range(delta, t + delta):
        inner = inner + f.shift(-eps * u) - f(-eps * u)
    return lhs, -eps * integral_unit(inner)


def theorem41_check(f: Polynomial, t: int, eps: int) -> bool:
    lhs, rhs = quasi_even_sides(f, t, eps)
    return lhs == rhs


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, math.isqrt(p) + 1))


def congruence_sides(p: int, theta: int) -> Tuple[int, int]:
    if not _is_prime(p) or p == 2:
        raise InvalidArgument(f"{p} is not an odd prime")
    if theta % 2 == 0 or not 1 < theta <= p:
        raise InvalidArgument("theta must be odd with 1 < theta <= p")
    lhs = mod_rational(theta * B(theta - 1), p)
    rhs = -sum((power_sum_avg(u, p) * math.comb(theta, u) for u in range(theta - 1)), Fraction(0))
    return lhs, mod_rational(rhs, p)


def bern_congruence(p: int, theta: int) -> bool:
    lhs, rhs = congruence_sides(p, theta)
    special = mod_rational(p * B(p - 1), p) == p - 1
    return lhs == rhs and special


# ------------------------------------------------------------- identity suite


def _random_poly(rng: random.Random, degree: int) -> Polynomial:
    coeffs = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(degree)]
    return Polynomial(coeffs + [Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 4))])


def _check_a(k: int, rng: random.Random) -> CheckResult:
    f = _random_poly(rng, k)
    a = f - f.shift(-1)
    lhs = sum((c / (u + 1) * B(u + 1) for u, c in enumerate(a.coefficients)), Fraction(0))
    return equality("a:difference-recurrence", k, lhs, -integral_unit(f - f(0)))


def _check_b(k: int, rng: random.Random) -> CheckResult:
    f = _random_poly(rng, k)
    b = f + f.shift(-1)
    lhs = sum(((2 ** (u + 1) - 1) * c / (u + 1) * B(u + 1) for u, c in enumerate(b.coefficients)),
              Fraction(0))
    return equality("b:sum-recurrence", k, lhs, f(0))


def _check_c(k: int) -> List[CheckResult]:
    first = sum((Fraction(2) ** (2 * u - 1) * (2 ** (2 * u) - 1) * math.comb(2 * k, 2 * u) * B(2 * u)
                 for u in range(1, k + 1)), Fraction(0))
    second = (2 ** (2 * k) - 1) * B(2 * k) + sum(
        (Fraction(2) ** (2 * u - 1) * math.comb(2 * k, 2 * u) * B(2 * u) for u in range(k)), Fraction(0))
    return [equality("c:weighted-even", k, first, k), equality("c:split-even", k, second, k)]


def _check_d(k: int) -> List[CheckResult]:
    rec = sum(((Fraction(2) ** (2 * u - 1) - 1) * math.comb(2 * k + 1, 2 * u) * B(2 * u)
               for u in range(k + 1)), Fraction(0))
    plain = sum((math.comb(2 * k + 1, 2 * u) * B(2 * u) for u in range(k + 1)), Fraction(0))
    return [equality("d:odd-binomial-recurrence", k, rec, 0),
            equality("d:odd-binomial-sum", k, plain, Fraction(2 * k + 1, 2))]


def _check_e(k: int) -> CheckResult:
    lhs = sum(((Fraction(2) ** (2 * u - 1) - 1) * math.comb(2 * k, 2 * u) * B(2 * u)
               for u in range(k + 1)), Fraction(0))
    return equality("e:even-binomial-recurrence", k, lhs, -Fraction(2) ** (2 * k - 1) * B(2 * k))


def _check_f(k: int) -> CheckResult:
    lhs = sum((Fraction(math.comb(k, 2 * u + 1), k - u) * B(2 * (k - u)) for u in range((k - 1) // 2 + 1)),
              Fraction(0))
    return equality("f:pronic-power-integral", k, lhs, -integral_unit((X**2 + X) ** k))


def _check_g(k: int) -> List[CheckResult]:
    first = sum((Fraction(math.comb(k, u), 2 * k + 1 - u) * (B(2 * k + 1 - u) + Fraction(sign(u), 2))
                 for u in range(k + 1)), Fraction(0))
    second = sum((Fraction(math.comb(2 * k + 1, u), 2**u) * (B(2 * k + 1 - u) + Fraction(sign(u), 2))
                  for u in range(2 * k)), Fraction(0))
    return [equality("g:half-shift-short", k, first, 0), equality("g:half-shift-long", k, second, 0)]


def _check_h(k: int) -> CheckResult:
    lhs = sum((sign(u - 1) * math.comb(k + 1, u) * B(u) for u in range(k + 1)), Fraction(0))
    return equality("h:louivre", k, lhs, 0)


def _check_i(k: int) -> CheckResult:
    total = Fraction(0)
    for c in compositions(k):
        t = len(c) - 1
        if t < 1:
            continue
        denom = factorial(2 * c[0] - 1)
        for part in c[1:]:
            denom *= factorial(2 * part)
        total += sign(t) * Fraction(2) ** (1 - t) * (B(2 * c[1]) - Fraction(1, 2)) / denom
    return equality("i:composition-reciprocal-factorial", k, total, Fraction(1, factorial(2 * k - 1)))


def _check_j(k: int) -> List[CheckResult]:
    odd = sum((Fraction(sign(u) * 2 ** (2 * k - u) * math.comb(2 * k, u), 2 * k + 1 - u)
               for u in range(2 * k + 1)), Fraction(0))
    even = sum((Fraction(sign(u) * 2 ** (2 * k - 1 - u) * math.comb(2 * k - 1, u), 2 * k - u)
                for u in range(2 * k)), Fraction(0))
    return [equality("j:odd-power-integral", k, odd, Fraction(1, 2 * k + 1)),
            equality("j:even-power-integral", k, even, 0)]


def sigma_identity_sides(t: int) -> Tuple[Fraction, Fraction]:
    f = build_sigma_poly(t)
    lhs = sum((sigma_elem(u, t) / (t + 2 - u) * B(t + 2 - u) for u in range(t + 1)), Fraction(0))
    inner = Polynomial()
    for u in range(t):
        inner = inner + f.shift(-u)
    return lhs, -integral_unit(inner) / 2


def _check_k(t: int) -> List[CheckResult]:
    lhs, rhs = sigma_identity_sides(t)
    l41, r41 = quasi_even_sides(build_sigma_poly(t), t, 1)
    return [equality("k:sigma-bernoulli", t, lhs, rhs), equality("k:sigma-quasi-even", t, l41, r41)]


def mirrored_product_sides(a: Sequence[Fraction]) -> Tuple[Fraction, Fraction]:
    """Double sum over a_u * abar_v with abar from the shift eps*t = 1."""
    a = [Fraction(x) for x in a]
    k = len(a) - 1
    abar = [sum((a[u] * math.comb(u, v) for u in range(v, k + 1)), Fraction(0)) for v in range(k + 1)]
    lhs = Fraction(0)
    for u in range(k + 1):
        for v in range(k + 1):
            lhs += sign(u) * a[u] * abar[v] / (u + v + 1) * (B(u + v + 1) + Fraction(sign(u + v), 2))
    return lhs, a[0] * abar[0]


def _check_l(k: int, rng: random.Random) -> CheckResult:
    a = [Fraction(rng.randint(-7, 7), rng.randint(1, 6)) for _ in range(k + 1)]
    lhs, rhs = mirrored_product_sides(a)
    return equality("l:mirrored-product", k, lhs, rhs)


def _check_m(k: int) -> CheckResult:
    lhs = sum((sigma_elem(k + 1 - 2 * u, k) * Fraction(2 ** (2 * u) - 1, u) * B(2 * u)
               for u in range(1, (k + 1) // 2 + 1)), Fraction(0))
    return equality("m:sigma-factorial", k, lhs, factorial(k) * (1 - Fraction(1, 2**k)))


def identity_suite(max_k: int, seed: int = 0, composition_max_k: Optional[int] = None) -> List[CheckResult]:
    """Every identity for k = 1..max_k, ordered by check name then k.

    The composition identity enumerates 2^(k-1) compositions, so it stops at
    composition_max_k when one is given.
    """
    if max_k < 2:
        raise InvalidArgument("identity_suite needs max_k >= 2")
    cap = max_k if composition_max_k is None else composition_max_k
    rows: List[CheckResult] = []
    for k in range(1, max_k + 1):
        rng = random.Random(seed * 1000 + k)
        rows.append(_check_a(k, rng))
        rows.append(_check_b(k, rng))
        rows.extend(_check_c(k))
        rows.extend(_check_d(k))
        rows.append(_check_e(k))
        rows.append(_check_f(k))
        rows.extend(_check_g(k))
        rows.append(_check_h(k))
        if 2 <= k <= cap:
            rows.append(_check_i(k))
        rows.extend(_check_j(k))
        if k % 2:
            rows.extend(_check_k(k))
        rows.append(_check_l(k, rng))
        rows.append(_check_m(k))
    return ordered(rows)


def method_agreement(max_k: int, composition_max_k: Optional[int] = None) -> List[CheckResult]:
    cap = max_k if composition_max_k is None else composition_max_k
    rows = []
    for k in range(max_k + 1):
        base = B(k)
        for m in applicable_methods(k):
            if m is BernoulliMethod.LOUIVRE or (m in COMPOSITION_BASED and k > cap):
                continue
            rows.append(equality(f"method:{m.value}", k, bernoulli(k, m), base))
    return ordered(rows)
