"""Desk-scale verification of every counting law, as a list of named checks.

Used by the ``verify`` CLI commands. Each check returns :class:`Check`
rows; a check never raises on a false identity, it reports ``ok=False``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable

from . import classify, distribution, genus, med
from .core import fbar
from .enumeration import (
    Budget,
    FrobeniusCensus,
    GenusCensus,
    brute_force_by_frobenius,
    enumerate_by_frobenius,
    enumerate_by_genus,
)
from .errors import BudgetExceeded


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str


class Session:
    """Memoized censuses plus an optional global deadline."""

    def __init__(self, workers: int = 1, max_seconds: float | None = None, max_nodes: int | None = None):
        self.workers = workers
        self.deadline = None if max_seconds is None else time.time() + max_seconds
        self.max_nodes = max_nodes
        self._frob: dict[int, FrobeniusCensus] = {}
        self._genus: dict[int, GenusCensus] = {}
        self._meds: dict[int, int] = {}

    def budget(self) -> Budget | None:
        if self.deadline is None and self.max_nodes is None:
            return None
        remaining = None if self.deadline is None else max(0.0, self.deadline - time.time())
        return Budget(max_nodes=self.max_nodes, max_seconds=remaining)

    def checkpoint(self):
        if self.deadline is not None and time.time() > self.deadline:
            raise BudgetExceeded("time budget exhausted")

    def census(self, f: int) -> FrobeniusCensus:
        if f not in self._frob:
            self.checkpoint()
            self._frob[f] = enumerate_by_frobenius(f, workers=self.workers, budget=self.budget())
        return self._frob[f]

    def genus_census(self, g: int) -> GenusCensus:
        if g not in self._genus:
            self.checkpoint()
            self._genus[g] = enumerate_by_genus(g, workers=self.workers, budget=self.budget())
        return self._genus[g]

    def med(self, f: int) -> int:
        if f not in self._meds:
            self.checkpoint()
            self._meds[f] = med.count_med(f, budget=self.budget())
        return self._meds[f]


def check_oracle(s: Session, f_max: int = 18) -> list[Check]:
    bad = [f for f in range(1, f_max + 1) if s.census(f) != brute_force_by_frobenius(f)]
    return [Check("oracle_equivalence", not bad, f"f<={f_max}; mismatches {bad}")]


def check_point_values(s: Session) -> list[Check]:
    n5, n6 = s.census(5).total, s.census(6).total
    return [Check("N5_N6", (n5, n6) == (5, 4), f"N(5)={n5} N(6)={n6}")]


def check_depth2(s: Session, fs=range(3, 25)) -> list[Check]:
    bad = []
    for f in fs:
        fb = fbar(f)
        depth2 = {}

        def visit(x, depth2=depth2):
            if x.frobenius < 2 * x.multiplicity < 2 * x.frobenius:
                n = bin(x.members & ((1 << x.frobenius) - 1)).count("1") - 1
                depth2[n] = depth2.get(n, 0) + 1

        enumerate_by_frobenius(f, visit, budget=s.budget())
        ok = s.census(f).by_depth.get(2, 0) == 2**fb - 1 and all(
            depth2.get(n, 0) == comb(fb, n) for n in range(1, fb + 1)
        )
        if not ok:
            bad.append(f)
    return [Check("depth2_law", not bad, f"f in [{fs[0]},{fs[-1]}]; failures {bad}")]


def check_class_formula(s: Session, fs=range(19, 27), L: int = 2) -> list[Check]:
    bad = []
    for f in fs:
        s.checkpoint()
        groups = classify.classify_frobenius(f)
        for k in classify.enumerate_class_keys(L):
            got = groups.get(k, {})
            if sum(got.values()) != classify.class_count(k.Y, k.Z, f) or any(
                got.get(n, 0) != classify.class_count_by_n(k.Y, k.Z, f, n) for n in range(fbar(f) + 1)
            ):
                bad.append((f, str(k)))
    layout = classify.class_layout({2}, {0}, 30)
    example_ok = (
        classify.class_members({2}, {0}, 30) == 512
        and set(layout.free) == set(range(19, 30)) - {24, 28}
    )
    return [
        Check("class_formula", not bad, f"f in [{fs[0]},{fs[-1]}], Max(Y)<={L}; failures {bad}"),
        Check("class_example_f30", example_ok, "Y={2} Z={0} f=30: 512 members, free [19,29] minus {24,28}"),
    ]


def check_class_members(s: Session, fs=range(19, 25), L: int = 2) -> list[Check]:
    keys = classify.enumerate_class_keys(L)
    bad = []
    for f in fs:
        s.checkpoint()
        enumerated = classify.class_sets(f, set(keys))
        for k in keys:
            built: set[int] = set()
            classify.class_members(k.Y, k.Z, f, lambda x, built=built: built.add(x.members))
            if built != enumerated[k]:
                bad.append((f, str(k)))
    return [Check("explicit_construction", not bad, f"f in [{fs[0]},{fs[-1]}]; failures {bad}")]


def monotone_rows(s: Session, f_max: int) -> list[classify.MonotoneRow]:
    totals = {f: s.census(f).total for f in range(1, f_max + 3)}
    return classify.verify_monotonicity(f_max, totals)


def check_monotone(s: Session, f_max: int = 37) -> list[Check]:
    bad = [r.f for r in monotone_rows(s, f_max) if not r.ok]
    return [Check("monotone_stride2", not bad, f"1<=f<={f_max}; failures {bad}")]


def check_partial_sums(s: Session) -> list[Check]:
    odd = classify.constant_partial_sum(5, "odd") - 1
    even = classify.constant_partial_sum(5, "even") - 1
    return [
        Check("partial_sum_odd", odd > Fraction(108, 100), f"{odd} = {float(odd):.6f} > 1.08"),
        Check("partial_sum_even", even > Fraction(106, 100), f"{even} = {float(even):.6f} > 1.06"),
    ]


def check_backelin(s: Session, fs=range(3, 32)) -> list[Check]:
    bad = [f for f in fs if not 2 ** fbar(f) <= s.census(f).total < 4 * 2 ** fbar(f)]
    return [Check("backelin_sandwich", not bad, f"f in [{fs[0]},{fs[-1]}]; failures {bad}")]


def check_distribution(s: Session, f: int = 39, L: int = 5, f_small: int = 19, tol: float = 0.05) -> list[Check]:
    big = distribution.compare(distribution.empirical_distribution(f, s.census(f)), L)
    L_small = min(L, (f_small - 7) // 6)
    small = distribution.compare(distribution.empirical_distribution(f_small, s.census(f_small)), L_small)
    return [
        Check("distribution_sup_diff", big.sup_diff < tol, f"f={f} L={L}: sup {big.sup_diff:.5f} < {tol}"),
        Check(
            "distribution_trend",
            big.sup_diff <= small.sup_diff,
            f"sup f={f} {big.sup_diff:.5f} <= sup f={f_small} (L={L_small}) {small.sup_diff:.5f}",
        ),
    ]


def check_h2(s: Session) -> list[Check]:
    r = distribution.resolve_h2()
    ok = "definition" not in r.flagged
    detail = (
        f"flagged {r.flagged}; asymptotic error definition {r.asymptotic_error_definition:.2e} "
        f"printed {r.asymptotic_error_printed:.2e}; closer on data {r.closer_on_data}"
    )
    return [Check("h2_resolution", ok, detail)]


def check_average(s: Session, f: int = 39, tol: float = 0.04) -> list[Check]:
    mean_n = distribution.average_n(f, s.census(f))
    gap = abs(float(mean_n) / f - 0.25)
    return [Check("average_genus", gap < tol, f"mean n = {mean_n}; |mean/f - 1/4| = {gap:.5f} < {tol}")]


def check_med(s: Session, f_max: int = 30, shift_max: int = 26) -> list[Check]:
    meds = {f: s.med(f) for f in range(1, f_max + 1)}
    table_bad = [f for f in meds if meds[f] != med.TABLE1.get(f)]
    shift_bad = []
    for f in range(1, shift_max + 1):
        s.checkpoint()
        if med.shift_total(f) != meds[f]:
            shift_bad.append(f)
    lower_bad = [f for f in range(9, f_max + 1) if not med.med_bounds_check(f, meds[f]).lower_ok]
    lhs, rhs, chain_ok = med.upper_chain_inequality()
    density_ok = meds[30] / s.census(30).total < meds[10] / s.census(10).total if f_max >= 30 else True
    return [
        Check("med_table1", not table_bad, f"1<=f<={f_max}; mismatches {table_bad}"),
        Check("med_shift_identity", not shift_bad, f"f<={shift_max}; failures {shift_bad}"),
        Check("med_lower_bound", not lower_bad, f"9<=f<={f_max}; failures {lower_bad}"),
        Check("med_upper_chain", chain_ok, f"{mpf_str(lhs)} < {mpf_str(rhs)}"),
        Check("med_density_trend", density_ok, "MED(30)/N(30) < MED(10)/N(10)"),
    ]


def mpf_str(x) -> str:
    return f"{float(x):.12f}"


def check_genus(s: Session, g_max: int = 14, type_g_max: int = 12) -> list[Check]:
    fib_bad, d2_bad, type_bad = [], [], []
    for g in range(1, g_max + 1):
        c = s.genus_census(g)
        for k in range(1, g):
            if genus.count_2m_minus_F(g, k, c) != genus.fib(g - k):
                fib_bad.append((g, k))
        if genus.depth2_by_genus(g, c) != genus.fib(g + 1) - 1:
            d2_bad.append(g)
    for g in range(1, type_g_max + 1):
        type_bad += [(g, str(r.type)) for r in genus.type_census(g, s.genus_census(g)) if not r.ok]
    sizes = [len(genus.enumerate_Ak(k)) for k in (1, 2, 3)]
    return [
        Check("fib_2m_minus_F", not fib_bad, f"1<=k<g<={g_max}; failures {fib_bad}"),
        Check("fib_depth2_by_genus", not d2_bad, f"g<={g_max}; failures {d2_bad}"),
        Check("type_bound", not type_bad, f"g<={type_g_max}; violations {type_bad[:10]}"),
        Check("Ak_sizes", sizes == [1, 1, 3], f"|A_1|,|A_2|,|A_3| = {sizes}"),
    ]


def check_determinism(s: Session, f_max: int = 26, g_max: int = 12, workers: int = 8) -> list[Check]:
    bad = []
    for f in range(1, f_max + 1):
        s.checkpoint()
        if enumerate_by_frobenius(f, workers=workers).to_json() != s.census(f).to_json():
            bad.append(f"f={f}")
    for g in range(0, g_max + 1):
        s.checkpoint()
        if enumerate_by_genus(g, workers=workers).to_json() != s.genus_census(g).to_json():
            bad.append(f"g={g}")
    return [Check("determinism", not bad, f"1 vs {workers} workers, f<={f_max}, g<={g_max}; diffs {bad}")]


FORMULA_CHECKS: list[Callable[[Session], list[Check]]] = [
    check_oracle,
    check_point_values,
    check_depth2,
    check_class_formula,
    check_class_members,
    check_partial_sums,
    check_backelin,
    check_h2,
    check_genus,
]

ALL_CHECKS: list[Callable[[Session], list[Check]]] = [
    check_oracle,
    check_point_values,
    check_depth2,
    check_class_formula,
    check_class_members,
    check_monotone,
    check_partial_sums,
    check_backelin,
    check_distribution,
    check_h2,
    check_average,
    check_med,
    check_genus,
    check_determinism,
]


def run_checks(checks, session: Session) -> list[Check]:
    out: list[Check] = []
    for check in checks:
        out.extend(check(session))
    return out
