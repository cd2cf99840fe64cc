"""Command line entry point: ``abvar <subcommand> [flags]``."""
from __future__ import annotations

import argparse
import json
import sys
import warnings
from fractions import Fraction
from typing import List, Optional, Sequence

from . import census, kunneth, modforms, stats, verify
from .motives import Motive, factor_prime_power, format_motive

FORMATS = ("text", "json", "csv", "latex")


class UsageError(Exception):
    pass


class EmitError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _frac(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# -- emit ----------------------------------------------------------------------

def emit(value, fmt: str) -> str:
    """Render a computed value as text, json, csv or latex."""
    if fmt not in FORMATS:
        raise EmitError(f"unknown format {fmt!r}")
    if isinstance(value, Motive):
        return _emit_motive(value, fmt)
    if isinstance(value, kunneth.CohomologyTable):
        return _emit_table(value, fmt)
    if isinstance(value, stats.MomentReport):
        value = [value]
    if isinstance(value, list) and value and all(isinstance(v, stats.MomentReport) for v in value):
        return _emit_reports(value, fmt)
    if isinstance(value, list) and value and all(isinstance(v, census.ComparisonRow) for v in value):
        return _emit_rows(value, fmt)
    if isinstance(value, census.CensusReport):
        return _emit_census(value, fmt)
    if isinstance(value, stats.PowerSeries):
        return _emit_series(value, fmt)
    if isinstance(value, stats.RationalFunction):
        if fmt == "text":
            return str(value) + "\n"
        if fmt == "json":
            return json.dumps({k: {str(e): _frac(c) for e, c in d.items()} for k, d in
                               (("numerator", value.numerator()), ("denominator", value.denominator()))},
                              sort_keys=True) + "\n"
    if isinstance(value, (int, Fraction)):
        if fmt in ("text", "csv"):
            return _frac(value) + "\n"
        if fmt == "json":
            return json.dumps(_frac(value)) + "\n"
    raise EmitError(f"cannot emit {type(value).__name__} as {fmt}")


def _emit_motive(m: Motive, fmt: str) -> str:
    if fmt == "text":
        return format_motive(m) + "\n"
    if fmt == "json":
        return m.dumps() + "\n"
    if fmt == "latex":
        return kunneth.latex_motive(m) + "\n"
    lines = ["sym,l,coeff"] + [f"{s},{l},{c}" for (s, l), c in m]
    return "\n".join(lines) + "\n"


def _emit_table(t: kunneth.CohomologyTable, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(t.to_json(), sort_keys=True) + "\n"
    if fmt == "latex":
        return kunneth.latex_table([t])
    if fmt == "csv":
        return "degree,motive\n" + "".join(f"{i},{format_motive(m)}\n" for i, m in sorted(t.rows.items()))
    return "".join(f"H^{i}: {format_motive(m)}\n" for i, m in sorted(t.rows.items()))


def _emit_reports(rs: List[stats.MomentReport], fmt: str) -> str:
    if fmt == "json":
        return stats.reports_json(rs) + "\n"
    if fmt == "csv":
        return stats.reports_csv(rs)
    if fmt == "latex":
        return stats.reports_latex(rs)
    if len(rs) == 1:
        return rs[0].text() + "\n"
    return "".join(f"n={r.n}: {r.text()}\n" for r in rs)


def _emit_rows(rows: List[census.ComparisonRow], fmt: str) -> str:
    if fmt == "csv":
        return census.rows_csv(rows)
    if fmt == "json":
        return json.dumps([{"p": r.p, "n": r.n, "census": _frac(r.census), "formula": _frac(r.formula),
                            "match": r.match} for r in rows], sort_keys=True) + "\n"
    if fmt == "text":
        return "".join(
            f"p={r.p} n={r.n} census={_frac(r.census)} formula={_frac(r.formula)} match={str(r.match).lower()}\n"
            for r in rows
        )
    raise EmitError(f"cannot emit census comparison as {fmt}")


def _emit_census(r: census.CensusReport, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"p": r.p, "weighted_class_count": _frac(r.weighted_class_count),
                           "moments": {str(n): _frac(v) for n, v in r.moments.items()}}, sort_keys=True) + "\n"
    if fmt == "csv":
        return "p,n,moment\n" + "".join(f"{r.p},{n},{_frac(v)}\n" for n, v in sorted(r.moments.items()))
    if fmt == "text":
        head = f"p={r.p} weighted_class_count={_frac(r.weighted_class_count)}\n"
        return head + "".join(f"n={n} moment={_frac(v)}\n" for n, v in sorted(r.moments.items()))
    raise EmitError(f"cannot emit census report as {fmt}")


def _emit_series(s: stats.PowerSeries, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(s.to_json()) + "\n"
    if fmt == "csv":
        return "i,coeff\n" + "".join(f"{i},{_frac(c)}\n" for i, c in enumerate(s.coeffs))
    if fmt == "text":
        return " ".join(_frac(c) for c in s.coeffs) + "\n"
    raise EmitError(f"cannot emit power series as {fmt}")


def parse_document(doc: str):
    """Inverse of ``emit(value, "json")``."""
    data = json.loads(doc)
    if isinstance(data, dict) and "terms" in data:
        return Motive.from_json(data)
    if isinstance(data, dict) and "rows" in data:
        return kunneth.CohomologyTable.from_json(data)
    if isinstance(data, dict) and "weighted_class_count" in data:
        return census.CensusReport(int(data["p"]), Fraction(data["weighted_class_count"]),
                                   {int(n): Fraction(v) for n, v in data["moments"].items()})
    if isinstance(data, list) and data and isinstance(data[0], str):
        return stats.PowerSeries.from_json(data)
    if isinstance(data, list) and data and "quotient" in data[0]:
        return [stats.MomentReport.from_json(d) for d in data]
    if isinstance(data, list) and data and "census" in data[0]:
        return [census.ComparisonRow(d["p"], d["n"], Fraction(d["census"]), Fraction(d["formula"])) for d in data]
    raise ValueError("unrecognised document")


# -- commands ------------------------------------------------------------------

def _q_value(text: Optional[str]):
    if text is None or text == "symbolic":
        return None
    try:
        return int(text)
    except ValueError:
        raise UsageError(f"--q must be an integer or 'symbolic', got {text!r}")


def _need(args, *names):
    for name in names:
        if getattr(args, name.replace("-", "_")) is None:
            raise UsageError(f"{args.command} requires --{name}")


def cmd_euler(args) -> str:
    _need(args, "g", "n")
    return emit(kunneth.ec_universal(args.g, args.n), args.format)


def cmd_cohomology(args) -> str:
    _need(args, "n")
    if args.g not in (None, 1):
        raise UsageError("per-degree cohomology is only available for --g 1")
    return emit(kunneth.cohomology_table_g1(args.n), args.format)


def cmd_moment(args) -> str:
    _need(args, "g", "n")
    qv = _q_value(args.q)
    value = stats.moment(args.g, args.n, qv)
    if qv is None:
        value = stats.normal_form(args.g, args.n, value)
    return emit(value, args.format)


def cmd_mgf(args) -> str:
    _need(args, "g", "max-n")
    qv = _q_value(args.q)
    if qv is None:
        return emit(stats.mgf_terms(args.g, args.max_n), args.format)
    vals = [stats.moment(args.g, n, qv) for n in range(1, args.max_n + 1)]
    return "".join(f"n={n}: {_frac(v)}\n" for n, v in enumerate(vals, 1))


def cmd_census(args) -> str:
    _need(args, "p")
    max_n = 10 if args.max_n is None else args.max_n
    if args.compare:
        return emit(census.census_vs_formula(args.p, max_n), args.format)
    return emit(census.census_moments(args.p, max_n), args.format)


def cmd_hecke(args) -> str:
    if args.order is not None:
        f = modforms.eigenform(args.k, args.order)
        return emit(stats.PowerSeries(tuple(Fraction(c) for c in f.coeffs), f.order), args.format)
    if args.q is not None:
        qv = _q_value(args.q)
        if qv is None:
            raise UsageError("hecke needs a numeric --q")
        p, r = factor_prime_power(qv)
        return emit(modforms.HeckeEigenvalues().trace(args.k, p, r), args.format)
    _need(args, "p")
    return emit(modforms.hecke_ap(args.k, args.p), args.format)


def cmd_series(args) -> str:
    _need(args, "order")
    if args.kind == "odd":
        s = stats.PowerSeries(tuple(Fraction(stats.odd_partitions(i)) for i in range(args.order + 1)), args.order)
    else:
        _need(args, "n")
        fn = stats.hilbert_series if args.kind == "hilbert" else stats.lambda_moment_series
        s = fn(args.n, args.order)
    return emit(s, args.format)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="abvar", description=__doc__)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, help_, *flags):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--format", choices=FORMATS, default="text")
        for f in flags:
            if f == "g":
                p.add_argument("--g", type=int, choices=(1, 2, 3))
            elif f in ("n", "max-n", "p", "order"):
                p.add_argument(f"--{f}", type=int)
            elif f == "q":
                p.add_argument("--q")
        return p

    add("euler", "e_c of the n-th fiber power", "g", "n")
    add("cohomology", "H^i of the n-th fiber power (g = 1)", "g", "n")
    add("moment", "E(#A_g(F_q)^n)", "g", "n", "q")
    add("mgf", "moment generating function terms", "g", "max-n", "q")
    c = add("census", "brute-force moments over F_p (g = 1)", "p", "max-n")
    c.add_argument("--compare", action="store_true", help="compare against the formula moments")
    h = add("hecke", "Hecke eigenvalues of level one eigenforms", "p", "q", "order")
    h.add_argument("--k", type=int, default=12, choices=modforms.EIGENFORM_WEIGHTS)
    s = add("series", "stable Hilbert series and related power series", "n", "order")
    s.add_argument("--kind", choices=("hilbert", "lambda", "odd"), default="hilbert")
    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suite", choices=("all", "fixtures", "invariants", "census"), default="all")
    return parser


COMMANDS = {
    "euler": cmd_euler,
    "cohomology": cmd_cohomology,
    "moment": cmd_moment,
    "mgf": cmd_mgf,
    "census": cmd_census,
    "hecke": cmd_hecke,
    "series": cmd_series,
}


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a subcommand is required")
        if args.command == "verify":
            results = verify.run_suite(args.suite)
            for r in results:
                out.write(f"{'PASS' if r.ok else 'FAIL'} {r.id}{' ' + r.detail if r.detail else ''}\n")
            failed = [r for r in results if not r.ok]
            if failed:
                err.write(f"{len(failed)} check(s) failed: {', '.join(r.id for r in failed)}\n")
                return 2
            return 0
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", kunneth.RangeWarning)
            doc = COMMANDS[args.command](args)
        for w in caught:
            err.write(f"warning: {w.message}\n")
        out.write(doc)
        return 0
    except (UsageError, EmitError) as exc:
        err.write(f"error: {exc}\n")
        return 1
    except (ValueError, ZeroDivisionError) as exc:
        err.write(f"error: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
