"""Command-line interface.

Examples::

    numsg count --frobenius 5
    numsg dist --frobenius 29 --L 2 --format csv
    numsg classes --frobenius 24 --max-y 2
    numsg verify monotone --max-f 25
    numsg verify all --budget 600

Exit codes: 0 success, 1 an asserted identity failed, 2 usage error,
3 budget exhausted.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Callable

from . import __version__, classify, distribution, genus, med, verify
from .cache import ENV_VAR, ResultCache
from .core import fbar
from .enumeration import Budget, count_by_multiplicity, enumerate_by_frobenius, enumerate_by_genus
from .errors import BudgetExceeded, FTooSmall, NumsgError
from .reports import IntSet, Report, render

log = logging.getLogger("numsg")

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _budget(args) -> Budget | None:
    if args.node_budget is None and args.time_budget is None:
        return None
    return Budget(max_nodes=args.node_budget, max_seconds=args.time_budget)


def _enum_kw(args) -> dict:
    return {"workers": args.workers, "budget": _budget(args)}


# ---------------------------------------------------------------------------
# commands; each returns a Report


def cmd_count(args) -> Report:
    kw = _enum_kw(args)
    if args.genus is not None:
        if args.frobenius is not None or args.multiplicity is not None:
            raise UsageError("--genus cannot be combined with --frobenius/--multiplicity")
        if args.genus < 0:
            raise UsageError("--genus must be >= 0")
        return Report("count", summary={"g": args.genus, "n_g": enumerate_by_genus(args.genus, **kw).total})
    if args.frobenius is None:
        raise UsageError("one of --frobenius or --genus is required")
    f = args.frobenius
    if f < 1:
        raise UsageError("--frobenius must be >= 1")
    if args.multiplicity is not None:
        m = args.multiplicity
        if not 2 <= m <= f + 1:
            raise UsageError("--multiplicity must lie in [2, f + 1]")
        return Report("count", summary={"f": f, "m": m, "N_mul": count_by_multiplicity(m, f, kw["budget"])})
    census = enumerate_by_frobenius(f, **kw)
    if not args.census:
        return Report("count", summary={"f": f, "N": census.total})
    report = Report("census", ["n", "count"], summary={"f": f, "N": census.total})
    for n, c in census.by_n.items():
        report.add(n, c)
    report.summary["by_multiplicity"] = census.by_multiplicity
    report.summary["by_depth"] = census.by_depth
    return report


def _default_L(f: int) -> int:
    return max(0, min(5, (f - 7) // 6))


def cmd_dist(args) -> Report:
    f = args.frobenius
    if f < 1:
        raise UsageError("--frobenius must be >= 1")
    L = _default_L(f) if args.L is None else args.L
    if L < 0:
        raise UsageError("--L must be >= 0")
    census = enumerate_by_frobenius(f, **_enum_kw(args))
    table = distribution.empirical_distribution(f, census)
    summary = {"f": f, "L": L, "N": census.total, "fbar": max(fbar(f), 0)}
    try:
        cmp = distribution.compare(table, L)
    except FTooSmall as exc:
        log.warning("theory columns dropped: %s", exc)
        report = Report("dist", ["n", "count", "empirical_prob"], summary=summary)
        for n, c in table.counts.items():
            report.add(n, c, c / table.total)
        return report
    report = Report("dist", ["n", "count", "empirical_prob", "theory_density", "abs_diff"], summary=summary)
    for n, c in table.counts.items():
        emp, th = cmp.empirical[n], cmp.theory[n]
        report.add(n, c, emp, th, abs(emp - th))
    h = distribution.h_polynomial(L, classify.parity_of(f))
    summary["normalizer"] = classify.constant_partial_sum(L, classify.parity_of(f))
    summary["h_coefficients"] = [int(c) if c.denominator == 1 else c for c in h.coefficients]
    summary["theory_mass"] = sum(cmp.theory)
    summary["sup_diff"] = cmp.sup_diff
    summary["tv_distance"] = cmp.tv_distance
    if L == 2 and f % 2:
        printed = distribution.compare(table, 2, distribution.printed_h2())
        summary["printed_h2_sup_diff"] = printed.sup_diff
    return report


def cmd_classes(args) -> Report:
    f = args.frobenius
    if f < 1:
        raise UsageError("--frobenius must be >= 1")
    if args.max_y < 0:
        raise UsageError("--max-y must be >= 0")
    groups = classify.classify_frobenius(f)
    report = Report(
        "classes",
        ["Y", "Z", "alpha", "alpha_prime", "beta", "predicted", "enumerated", "match"],
        summary={"f": f, "max_y": args.max_y},
    )
    ok = True
    for k in classify.enumerate_class_keys(args.max_y):
        sig = classify.derive_params(k.Y, k.Z)
        enumerated = sum(groups.get(k, {}).values())
        try:
            predicted = classify.class_count(k.Y, k.Z, f)
        except FTooSmall:
            predicted = None
        match = None if predicted is None else predicted == enumerated
        ok = ok and match is not False
        report.add(IntSet(k.Y), IntSet(k.Z), sig.alpha, sig.alpha_prime, sig.beta, predicted, enumerated, match)
    report.summary["empty_class"] = sum(groups.get(classify.EMPTY, {}).values())
    report.summary["empty_class_predicted"] = 2 ** fbar(f)
    ok = ok and report.summary["empty_class"] == report.summary["empty_class_predicted"]
    report.ok = ok
    return report


def cmd_constants(args) -> Report:
    if args.max_l < 0:
        raise UsageError("--max-l must be >= 0")
    report = Report("constants", ["L", "parity", "value", "decimal"])
    for L in range(args.max_l + 1):
        for parity in ("odd", "even"):
            v = classify.constant_partial_sum(L, parity)
            report.add(L, parity, v, float(v))
    return report


def cmd_hpoly(args) -> Report:
    r = distribution.resolve_h2()
    report = Report("hpoly", ["candidate", "coefficients", "sup_diff_f19", "sup_diff_f29", "asymptotic_error", "flagged"])
    candidates = (
        ("definition", r.definition, r.sup_diff_definition, r.asymptotic_error_definition),
        ("printed", r.printed, r.sup_diff_printed, r.asymptotic_error_printed),
    )
    for name, poly, sup, err in candidates:
        report.add(name, [str(c) for c in poly.coefficients], sup[19], sup[29], err, name in r.flagged)
    report.summary["asymptotic_f"] = r.asymptotic_f
    report.summary["tolerance"] = r.tolerance
    report.ok = "definition" not in r.flagged
    return report


def _checks_report(name: str, checks: list[verify.Check], summary: dict | None = None) -> Report:
    report = Report(name, ["check", "ok", "detail"], summary=summary or {})
    for c in checks:
        report.add(c.name, c.ok, c.detail)
    report.ok = all(c.ok for c in checks)
    return report


def _session(args) -> verify.Session:
    budget = getattr(args, "budget", None)
    seconds = budget if budget is not None else args.time_budget
    return verify.Session(workers=args.workers, max_seconds=seconds, max_nodes=args.node_budget)


def cmd_verify_monotone(args) -> Report:
    if args.max_f < 1:
        raise UsageError("--max-f must be >= 1")
    rows = verify.monotone_rows(_session(args), args.max_f)
    report = Report("monotone", ["f", "N_f", "N_f_plus_2", "ok"], summary={"max_f": args.max_f})
    for r in rows:
        report.add(r.f, r.N_f, r.N_f2, r.ok)
    report.ok = all(r.ok for r in rows)
    return report


def cmd_verify_formulas(args) -> Report:
    return _checks_report("verify_formulas", verify.run_checks(verify.FORMULA_CHECKS, _session(args)))


def cmd_verify_all(args) -> Report:
    return _checks_report("verify_all", verify.run_checks(verify.ALL_CHECKS, _session(args)))


def cmd_med(args) -> Report:
    if args.max_f < 1:
        raise UsageError("--max-f must be >= 1")
    session = _session(args)
    report = Report(
        "med",
        ["f", "MED", "published", "shift_total", "lower_bound", "lower_ok", "upper_ratio", "log2_ratio", "med_over_N"],
    )
    ok = True
    for row in med.med_growth_table(args.max_f, {f: session.med(f) for f in range(1, args.max_f + 1)}):
        f = row.f
        shift = med.shift_total(f) if f <= args.shift_max else None
        chk = med.med_bounds_check(f, row.med)
        published = med.TABLE1.get(f)
        ok = ok and (published is None or published == row.med) and (shift is None or shift == row.med)
        report.add(
            f, row.med, published, shift, chk.lower_bound, chk.lower_ok, chk.upper_ratio,
            row.log2_ratio, row.med / session.census(f).total,
        )
    lhs, rhs, chain_ok = med.upper_chain_inequality()
    report.summary.update(
        {
            "max_f": args.max_f,
            "upper_exponent": med.UPPER_EXPONENT,
            "max_upper_ratio": max(r[6] for r in report.rows),
            "upper_chain_lhs": float(lhs),
            "upper_chain_rhs": float(rhs),
            "upper_chain_ok": chain_ok,
        }
    )
    report.ok = ok and chain_ok
    return report


def cmd_genus(args) -> Report:
    if args.max_g < 1:
        raise UsageError("--max-g must be >= 1")
    session = _session(args)
    report = Report(
        "genus",
        ["g", "n_g", "depth1", "depth2", "fib_g1_minus_1", "fib_2m_minus_F_ok", "depth3", "type_bound_ok", "deep", "deep_fraction", "tail_mass"],
        summary={"max_g": args.max_g, "tail_N": args.tail_n},
    )
    ok = True
    for g in range(1, args.max_g + 1):
        c = session.genus_census(g)
        d2 = genus.depth2_by_genus(g, c)
        fib_ok = all(genus.count_2m_minus_F(g, k, c) == genus.fib(g - k) for k in range(1, g))
        types_ok = all(r.ok for r in genus.type_census(g, c))
        hist = genus.f_minus_2m_histogram(g)
        tail = genus.tail_mass_F_2m(g, args.tail_n, hist)
        ok = ok and fib_ok and types_ok and d2 == genus.fib(g + 1) - 1
        report.add(
            g, c.total, c.depth1, d2, genus.fib(g + 1) - 1, fib_ok,
            sum(c.by_type.values()), types_ok, c.deep, c.deep / c.total, tail,
        )
    report.ok = ok
    return report


# ---------------------------------------------------------------------------
# parser


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--output", "-o", type=Path, default=None, help="write the report here instead of stdout")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--node-budget", type=int, default=None)
    p.add_argument("--time-budget", type=float, default=None, help="seconds")
    p.add_argument("--cache-dir", type=Path, default=None, help=f"defaults to ${ENV_VAR} or ~/.cache/numsg")
    p.add_argument("--no-cache", action="store_true")
    p.add_argument("--seedless", action="store_true", help="reserved; every computation is deterministic")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="numsg", description="Numerical semigroup census and verification.")
    parser.add_argument("--version", action="version", version=f"numsg {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="N(f), N_mul(m, f) or n_g")
    p.add_argument("--frobenius", "-f", type=int)
    p.add_argument("--genus", "-g", type=int)
    p.add_argument("--multiplicity", "-m", type=int)
    p.add_argument("--census", action="store_true", help="emit the full per-n census")
    p.set_defaults(handler=cmd_count)

    p = sub.add_parser("dist", parents=[common], help="distribution of n(S) against the model")
    p.add_argument("--frobenius", "-f", type=int, required=True)
    p.add_argument("--L", type=int, default=None, help="class depth of the model (default min(5, (f-7)//6))")
    p.set_defaults(handler=cmd_dist)

    p = sub.add_parser("classes", parents=[common], help="per-(Y,Z) predicted vs enumerated counts")
    p.add_argument("--frobenius", "-f", type=int, required=True)
    p.add_argument("--max-y", type=int, default=2)
    p.set_defaults(handler=cmd_classes)

    p = sub.add_parser("constants", parents=[common], help="partial sums of the limiting constants")
    p.add_argument("--max-l", type=int, default=5)
    p.set_defaults(handler=cmd_constants)

    p = sub.add_parser("hpoly", parents=[common], help="derived vs printed h_2 polynomial")
    p.set_defaults(handler=cmd_hpoly)

    p = sub.add_parser("verify", help="run verification suites")
    vsub = p.add_subparsers(dest="suite", required=True)
    q = vsub.add_parser("monotone", parents=[common])
    q.add_argument("--max-f", type=int, default=31)
    q.set_defaults(handler=cmd_verify_monotone)
    q = vsub.add_parser("formulas", parents=[common])
    q.set_defaults(handler=cmd_verify_formulas)
    q = vsub.add_parser("all", parents=[common])
    q.add_argument("--budget", type=float, default=None, help="overall wall-clock budget in seconds")
    q.set_defaults(handler=cmd_verify_all)

    p = sub.add_parser("med", parents=[common], help="max embedding dimension table, shift check, growth")
    p.add_argument("--max-f", type=int, default=30)
    p.add_argument("--shift-max", type=int, default=26)
    p.set_defaults(handler=cmd_med)

    p = sub.add_parser("genus", parents=[common], help="Fibonacci laws, type bounds and tail mass by genus")
    p.add_argument("--max-g", type=int, default=14)
    p.add_argument("--tail-n", type=int, default=6)
    p.set_defaults(handler=cmd_genus)
    return parser


def _cache_params(args) -> dict:
    skip = {"handler", "output", "workers", "cache_dir", "no_cache", "seedless", "verbose"}
    return {k: (str(v) if isinstance(v, Path) else v) for k, v in sorted(vars(args).items()) if k not in skip}


def _command_name(args) -> str:
    return args.command + (f" {args.suite}" if getattr(args, "suite", None) else "")


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("numsg: %(levelname)s: %(message)s"))
    log.addHandler(handler)
    log.setLevel(logging.INFO if args.verbose else logging.WARNING)
    log.propagate = False
    try:
        return _run(args)
    finally:
        log.removeHandler(handler)


def _run(args) -> int:
    if args.workers < 1:
        print("numsg: error: --workers must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    for name in ("node_budget", "time_budget"):
        if (getattr(args, name) or 0) < 0:
            print(f"numsg: error: --{name.replace('_', '-')} must be nonnegative", file=sys.stderr)
            return EXIT_USAGE

    cache = ResultCache(args.cache_dir, enabled=not args.no_cache)
    command = _command_name(args)
    params = _cache_params(args)
    entry = cache.get(command, params)
    if entry is not None:
        log.warning("cache hit for %s", command)
        _emit(entry.value, args.output)
        return entry.exit_code

    handler: Callable = args.handler
    try:
        report = handler(args)
    except UsageError as exc:
        print(f"numsg: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"numsg: budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except NumsgError as exc:
        print(f"numsg: error: {exc}", file=sys.stderr)
        return EXIT_FAILED

    text = render(report, args.format)
    code = EXIT_FAILED if report.ok is False else EXIT_OK
    if code == EXIT_FAILED:
        print(f"numsg: {command}: at least one asserted identity failed", file=sys.stderr)
    cache.put(command, params, text, code)
    _emit(text, args.output)
    return code


def _emit(text: str, output: Path | None):
    if output is None:
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        output.write_text(text)


def main() -> None:
    sys.exit(run())

