"""Command-line front end.

    regsum sum "u^2 + 3*u - 1/2"
    regsum limit "sin((n+1/2)*theta)" --theta 0.7
    regsum range-sum "u^3" --from 5 --to -3
    regsum bernoulli 12 --method all
    regsum verify --suite all --max-k 12
    regsum table --series power --k-range 0..10

Exit status: 0 success, 1 verification failure, 2 usage error, 3 parse error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from . import bernoulli as bern
from . import dsl
from . import series as S
from . import suites
from .errors import InternalInconsistency, ParseError, RegsumError
from .exact import format_rational
from .limits import limit
from .poly import X
from .report import render_value
from .trigform import Exact, TrigForm
from .zorder import SummandSpec, enumerate_sum, range_sum, segment

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_PARSE = 0, 1, 2, 3
MAX_TABLE_K = 200
ENV_MAX_K = "REGSUM_MAX_K"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def approx(x: Optional[float]) -> Optional[float]:
    return None if x is None else float(f"{x:.15g}")


def _value_json(v) -> dict:
    return v.to_json() if isinstance(v, (Exact, TrigForm)) else {"exact": format_rational(v)}


def _numeric(v, theta: Optional[float]) -> Optional[float]:
    if isinstance(v, Exact):
        return float(v.value)
    if isinstance(v, TrigForm) and theta is not None:
        return float(v.approx(theta))
    return None


# ------------------------------------------------------------------ commands


def cmd_sum(args) -> Tuple[dict, str, List[List[str]], int]:
    parsed = dsl.parse(args.expression, dsl.Sum(args.start))
    r = S.sum_from(parsed.body, args.start) if args.start != S.first_index(parsed.body) else S.sum_series(parsed.body)
    theta = args.theta if args.theta is not None else r.theta
    data = r.to_json(theta)
    routes = data.pop("routes")
    data["approx"] = approx(data["approx"])
    data["start"] = args.start
    data["expression"] = dsl.render(parsed)
    out = {"command": "sum",
           "input": {"expression": args.expression, "start": args.start, "theta": args.theta},
           "result": data, "routes": routes}
    lines = [r.value.canonical(), f"class: {data['class']}", f"start: {args.start}"]
    if r.window is not None:
        lines.append(f"window: {r.window}")
    if data["approx"] is not None:
        lines.append(f"approx: {data['approx']:.15g}")
    lines.append("routes:")
    lines += [f"  {x['name']}: {x['value']}" for x in routes]
    table = [["name", "value"]] + [[x["name"], x["value"]] for x in routes]
    return out, "\n".join(lines), table, EXIT_OK


def cmd_limit(args):
    parsed = dsl.parse(args.expression, dsl.Limit())
    v = limit(parsed.body)
    num = approx(_numeric(v, args.theta))
    result = {"class": dsl.class_of(parsed), "expression": dsl.render(parsed),
              "value": _value_json(v), "approx": num}
    out = {"command": "limit", "input": {"expression": args.expression, "theta": args.theta},
           "result": result}
    lines = [v.canonical(), f"class: {result['class']}"]
    if num is not None:
        lines.append(f"approx: {num:.15g}")
    table = [["field", "value"], ["value", v.canonical()], ["approx", "" if num is None else f"{num:.15g}"]]
    return out, "\n".join(lines), table, EXIT_OK


def cmd_range_sum(args):
    parsed = dsl.parse(args.expression, dsl.RangeSum(args.from_, args.to))
    spec = SummandSpec.from_poly(parsed.body.p)
    a, b = args.from_, args.to
    seg = segment(a, b)
    value = range_sum(spec, a, b)
    result = {"value": {"exact": format_rational(value)}, "approx": approx(float(value)),
              "segment": seg.kind.value, "generating": spec.generating.render("x")}
    routes = [{"name": "generating-function", "value": format_rational(value)}]
    code = EXIT_OK
    if seg.is_finite:
        direct = enumerate_sum(spec, a, b)
        routes.append({"name": "enumeration", "value": format_rational(direct)})
        if direct != value:
            code = EXIT_FAIL
    out = {"command": "range-sum", "input": {"expression": args.expression, "from": a, "to": b},
           "result": result, "routes": routes}
    lines = [format_rational(value), f"segment: {seg.kind.value}", f"F(x) = {result['generating']}"]
    lines += [f"  {x['name']}: {x['value']}" for x in routes]
    table = [["name", "value"]] + [[x["name"], x["value"]] for x in routes]
    return out, "\n".join(lines), table, code


def cmd_bernoulli(args):
    k = args.k
    if k < 0:
        raise UsageError("K must be nonnegative")
    baseline = bern.bernoulli(k)
    printed = dict((e.k, e.printed) for e in bern.table_comparison())
    result = {"k": k, "value": {"exact": format_rational(baseline)}, "approx": approx(float(baseline))}
    if k in printed:
        result["table"] = {"printed": format_rational(printed[k]), "matches": printed[k] == baseline}
    lines = [format_rational(baseline)]
    if k in printed and printed[k] != baseline:
        lines.append(f"note: the printed table entry is {format_rational(printed[k])}")
    out = {"command": "bernoulli", "input": {"k": k, "method": args.method}, "result": result}
    code = EXIT_OK
    table = [["method", "value"]]
    if args.method is None:
        table.append([bern.BernoulliMethod.LOUIVRE.value, format_rational(baseline)])
    elif args.method.lower() == "all":
        routes = [{"name": m.value, "value": format_rational(bern.bernoulli(k, m))}
                  for m in bern.applicable_methods(k)]
        agree = all(x["value"] == format_rational(baseline) for x in routes)
        result["agree"] = agree
        out["routes"] = routes
        lines = [lines[0]] + [f"  {x['name']}: {x['value']}" for x in routes] + \
            [f"agree: {'yes' if agree else 'no'}"] + lines[1:]
        table += [[x["name"], x["value"]] for x in routes]
        code = EXIT_OK if agree else EXIT_FAIL
    else:
        m = bern.BernoulliMethod.parse(args.method)
        v = bern.bernoulli(k, m)
        result["method"] = m.value
        result["value"] = {"exact": format_rational(v)}
        result["approx"] = approx(float(v))
        lines[0] = format_rational(v)
        table.append([m.value, format_rational(v)])
    return out, "\n".join(lines), table, code


def resolve_max_k(flag: Optional[int]) -> Tuple[Optional[int], Optional[int]]:
    """(general, composition) caps; None means the suite default."""
    if flag is not None:
        return flag, flag
    env = os.environ.get(ENV_MAX_K)
    if env:
        try:
            v = int(env)
        except ValueError:
            raise UsageError(f"{ENV_MAX_K} must be an integer, got {env!r}") from None
        return v, v
    return None, None


def cmd_verify(args):
    names = list(suites.SUITES) if args.suite == "all" else [args.suite]
    mk, ck = resolve_max_k(args.max_k)
    if mk is not None and not 2 <= mk <= 40:
        raise UsageError("--max-k must be between 2 and 40")
    results = suites.run_suites(names, mk, ck, workers=args.workers)
    report = []
    for name, rows in results.items():
        for r in rows:
            report.append({"suite": name, **r.to_json()})
    failed = sum(1 for x in report if not x["pass"])
    result = {"suites": names, "checks": len(report), "passed": len(report) - failed, "failed": failed}
    out = {"command": "verify",
           "input": {"suite": args.suite, "max_k": args.max_k,
                     "effective_max_k": mk if mk is not None else suites.DEFAULT_MAX_K,
                     "composition_max_k": ck if ck is not None else suites.DEFAULT_COMPOSITION_MAX_K},
           "result": result, "report": report}
    lines = []
    for x in report:
        k = "" if x["k"] is None else f" k={x['k']}"
        status = "PASS" if x["pass"] else "FAIL"
        lines.append(f"{status} {x['suite']} {x['check']}{k}: {x['lhs']} | {x['rhs']}")
    lines.append(f"{result['passed']}/{result['checks']} checks passed")
    table = [["suite", "check", "k", "pass", "lhs", "rhs"]]
    table += [[x["suite"], x["check"], "" if x["k"] is None else str(x["k"]),
               "true" if x["pass"] else "false", x["lhs"] or "", x["rhs"] or ""] for x in report]
    return out, "\n".join(lines), table, EXIT_FAIL if failed else EXIT_OK


_SERIES_TABLE = {
    "power": (lambda k: S.PolyTerm(X**k), "u^{k}"),
    "altpower": (lambda k: S.AltPolyTerm(X**k), "(-1)^(u-1)*u^{k}"),
    "odd": (lambda k: S.OddPoly(k + 1), "(2*u-1)^{k}"),
    "altodd": (lambda k: S.AltOddPoly(k + 1), "(-1)^(u-1)*(2*u-1)^{k}"),
}


def parse_k_range(text: str) -> Tuple[int, int]:
    m = re.fullmatch(r"\s*(\d+)\s*\.\.\s*(\d+)\s*", text)
    if not m:
        raise UsageError(f"--k-range must look like A..B, got {text!r}")
    a, b = int(m.group(1)), int(m.group(2))
    if a > b or b > MAX_TABLE_K:
        raise UsageError(f"--k-range needs A <= B <= {MAX_TABLE_K}")
    return a, b


def cmd_table(args):
    a, b = parse_k_range(args.k_range)
    make, pattern = _SERIES_TABLE[args.series]
    rows = []
    for k in range(a, b + 1):
        v = S.exact_value(make(k))
        rows.append({"k": k, "term": pattern.format(k=k), "value": format_rational(v)})
    out = {"command": "table", "input": {"series": args.series, "k_range": [a, b]}, "result": rows}
    width = max(len(r["term"]) for r in rows)
    lines = [f"{r['k']:>4}  {r['term']:<{width}}  {r['value']}" for r in rows]
    table = [["k", "term", "value"]] + [[str(r["k"]), r["term"], r["value"]] for r in rows]
    return out, "\n".join(lines), table, EXIT_OK


# -------------------------------------------------------------------- driver


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="regsum", description="Exact regularized sums, limits and Bernoulli identities.")
    fmt = _Parser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json", "csv"), default="text")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    s = sub.add_parser("sum", parents=[fmt], help="sum a series given by its u-th term")
    s.add_argument("expression")
    s.add_argument("--start", type=int, default=1, help="first index (default 1)")
    s.add_argument("--theta", type=float)
    s.set_defaults(func=cmd_sum)

    s = sub.add_parser("limit", parents=[fmt], help="regularized limit of a function of n")
    s.add_argument("expression")
    s.add_argument("--theta", type=float)
    s.set_defaults(func=cmd_limit)

    s = sub.add_parser("range-sum", parents=[fmt], help="sum of a polynomial over a segment of the cyclic order")
    s.add_argument("expression")
    s.add_argument("--from", dest="from_", type=int, required=True)
    s.add_argument("--to", type=int, required=True)
    s.set_defaults(func=cmd_range_sum)

    s = sub.add_parser("bernoulli", parents=[fmt], help="Bernoulli number B_K (B_1 = +1/2)")
    s.add_argument("k", type=int, metavar="K")
    s.add_argument("--method", help="one method name, or 'all'")
    s.set_defaults(func=cmd_bernoulli)

    s = sub.add_parser("verify", parents=[fmt], help="run verification suites")
    s.add_argument("--suite", choices=suites.SUITES + ("all",), default="all")
    s.add_argument("--max-k", type=int)
    s.add_argument("--workers", type=int, default=4, help=argparse.SUPPRESS)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("table", parents=[fmt], help="closed-form sums of a power family")
    s.add_argument("--series", choices=tuple(_SERIES_TABLE), required=True)
    s.add_argument("--k-range", required=True, metavar="A..B")
    s.set_defaults(func=cmd_table)
    return p


def _emit(fmt: str, out: dict, text: str, table: List[List[str]], stream) -> None:
    if fmt == "json":
        stream.write(json.dumps(out, indent=2) + "\n")
    elif fmt == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(table)
        stream.write(buf.getvalue())
    else:
        stream.write(text + "\n")


def main(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        stderr.write(f"regsum: usage error: {exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        out, text, table, code = args.func(args)
    except ParseError as exc:
        stderr.write(f"regsum: parse error: {exc}\n")
        return EXIT_PARSE
    except UsageError as exc:
        stderr.write(f"regsum: usage error: {exc}\n")
        return EXIT_USAGE
    except InternalInconsistency as exc:
        stderr.write(f"regsum: verification failure: {exc}\n")
        return EXIT_FAIL
    except RegsumError as exc:
        stderr.write(f"regsum: {exc}\n")
        return EXIT_USAGE
    _emit(args.format, out, text, table, stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
