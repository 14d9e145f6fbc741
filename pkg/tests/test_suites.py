import random

import pytest

from regsum import suites
from regsum.errors import InvalidArgument


def test_fold_counts_and_counterexample():
    ok = suites.fold("x", ((i, i) for i in range(5)))
    assert ok.passed and ok.lhs == ok.rhs == 5
    bad = suites.fold("x", [(1, 1), (2, 3), (4, 5)])
    assert not bad.passed and (bad.lhs, bad.rhs) == (2, 3)


def test_run_suites_order_is_canonical():
    out = suites.run_suites(["trig", "series"], max_k=6, workers=2)
    assert list(out) == ["series", "trig"]
    assert all(r.passed for rows in out.values() for r in rows)


def test_run_suites_is_deterministic():
    a = suites.run_suites(["series"], max_k=6, workers=1)
    b = suites.run_suites(["series"], max_k=6, workers=3)
    assert [r.to_json() for r in a["series"]] == [r.to_json() for r in b["series"]]


def test_run_suites_rejects_bad_arguments():
    with pytest.raises(InvalidArgument):
        suites.run_suites(["nope"])
    with pytest.raises(InvalidArgument):
        suites.run_suites(["trig"], max_k=1)


def test_route_equivalence_size():
    rows = suites.route_equivalence(300, seed=3)
    assert len(rows) == 300 and all(r.passed for r in rows)


def test_random_poly_has_nonzero_lead():
    rng = random.Random(0)
    for _ in range(100):
        p = suites.random_poly(rng, 8)
        assert p.coefficients[-1] != 0
