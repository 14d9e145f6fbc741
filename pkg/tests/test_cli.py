import csv
import io
import json
import os
from pathlib import Path

import pytest

from regsum import suites
from regsum.cli import main
from regsum.report import CheckResult

GOLDEN = Path(__file__).parent / "golden"

GOLDEN_CASES = {
    "sum_u": ["sum", "u"],
    "sum_alt_u": ["sum", "(-1)^(u-1)*u"],
    "sum_geometric": ["sum", "2^u", "--start", "0"],
    "sum_sin": ["sum", "sin(u*theta)", "--theta", "1"],
    "limit_square": ["limit", "n^2"],
    "range_sum_wrap": ["range-sum", "u^3", "--from", "3", "--to", "-2"],
    "bernoulli_12": ["bernoulli", "12", "--method", "all"],
    "table_power": ["table", "--series", "power", "--k-range", "0..8"],
}


def run(*argv, env=None):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("name", sorted(GOLDEN_CASES))
def test_golden_json(name):
    code, out, _ = run(*GOLDEN_CASES[name], "--format", "json")
    assert code == 0
    path = GOLDEN / f"{name}.json"
    if os.environ.get("REGSUM_UPDATE_GOLDEN"):
        path.write_text(out)
    assert json.loads(out) == json.loads(path.read_text())
    assert out == path.read_text()


def test_json_schema():
    for argv in GOLDEN_CASES.values():
        doc = json.loads(run(*argv, "--format", "json")[1])
        assert {"command", "input", "result"} <= set(doc)
        assert set(doc) <= {"command", "input", "result", "routes", "report"}


def test_text_output():
    code, out, _ = run("sum", "u")
    assert code == 0 and out.splitlines()[0] == "-1/12"
    code, out, _ = run("bernoulli", "12")
    assert "-691/2730" in out and "note:" in out


def test_csv_output():
    code, out, _ = run("table", "--series", "altpower", "--k-range", "0..4", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0 and len(rows) == 6
    assert rows[1][-1] == "1/2"


@pytest.mark.parametrize("argv,code", [
    (["sum", "u +"], 3),
    (["sum", "sin(2*u*theta)"], 3),
    (["sum", "sin(u*theta)", "--theta", "7"], 2),
    (["bernoulli", "-1"], 2),
    (["verify", "--max-k", "99"], 2),
    (["table", "--series", "power", "--k-range", "5..1"], 2),
    (["frobnicate"], 2),
    (["range-sum", "u", "--from", "1"], 2),
])
def test_exit_codes(argv, code):
    got, _, err = run(*argv)
    assert got == code
    assert err.startswith("regsum: ")


def test_parse_error_message_has_position():
    _, _, err = run("sum", "u $ 2")
    assert "line 1, col 3:" in err


def test_verification_failure_exit(monkeypatch):
    def broken(names, max_k=None, composition_max_k=None, workers=4):
        return {"order": [CheckResult("fake", None, False, lhs="1", rhs="2")]}
    monkeypatch.setattr(suites, "run_suites", broken)
    code, out, _ = run("verify", "--suite", "order")
    assert code == 1 and "FAIL order fake" in out


def test_max_k_env(monkeypatch):
    monkeypatch.setenv("REGSUM_MAX_K", "6")
    code, out, _ = run("verify", "--suite", "bernoulli", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["input"]["effective_max_k"] == 6
    ks = {r["k"] for r in doc["report"] if r["check"].startswith("method") and r["k"] is not None}
    assert max(ks) <= 6
    code, out, _ = run("verify", "--suite", "bernoulli", "--max-k", "4", "--format", "json")
    assert json.loads(out)["input"]["effective_max_k"] == 4


def test_verify_all_and_determinism():
    first = run("verify", "--suite", "all", "--max-k", "12", "--format", "json")
    second = run("verify", "--suite", "all", "--max-k", "12", "--format", "json")
    assert first[0] == 0
    assert first[1] == second[1]
    doc = json.loads(first[1])
    assert doc["result"]["failed"] == 0
    assert [r["suite"] for r in doc["report"]] == sorted((r["suite"] for r in doc["report"]),
                                                        key=suites.SUITES.index)


def test_range_sum_enumeration_route():
    code, out, _ = run("range-sum", "u^2", "--from", "1", "--to", "4", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["result"]["value"] == {"exact": "30"}
    assert [r["name"] for r in doc["routes"]] == ["generating-function", "enumeration"]
