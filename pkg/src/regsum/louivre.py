"""Bernoulli numbers from the Louivre recurrence, with a shared cache.

Convention: B_1 = +1/2, i.e. t*e^t/(e^t - 1).  The defining relation is

    sum_{u=0}^{n} (-1)^(u-1) C(n+1, u) B_u = 0      (n >= 1)

solved for the last term.  This cache is the package's only shared mutable
state; it grows monotonically under a lock and is read lock-free.
"""
from __future__ import annotations

import math
import threading
from fractions import Fraction
from typing import List

from .errors import InvalidArgument
from .exact import sign

_values: List[Fraction] = [Fraction(1)]
_lock = threading.Lock()


def _extend(values: List[Fraction], k: int) -> None:
    while len(values) <= k:
        n = len(values)
        acc = Fraction(0)
        for u in range(n):
            if values[u]:
                acc += sign(u - 1) * math.comb(n + 1, u) * values[u]
        values.append(-acc / (sign(n - 1) * (n + 1)))


def bernoulli_number(k: int) -> Fraction:
    if k < 0:
        raise InvalidArgument("Bernoulli index must be non-negative")
    values = _values
    if k < len(values):
        return values[k]
    with _lock:
        if k >= len(_values):
            _extend(_values, k)
    return _values[k]


def cached_count() -> int:
    return len(_values)
