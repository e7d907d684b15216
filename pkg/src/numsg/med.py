"""Max embedding dimension (MED) counts by Frobenius number.

Two routes are kept apart on purpose. :func:`count_med` tests e(S) = m(S)
on every enumerated semigroup. :func:`count_med_by_shift` uses the
bijection S -> (S minus {0}) - m, which sends MED semigroups with
multiplicity m and Frobenius number f to semigroups containing m with
Frobenius number f - m.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

import mpmath

from .core import Semigroup, min_generators
from .enumeration import enumerate_by_frobenius

# MED(f) for f = 1..30 as published.
TABLE1 = {
    1: 1, 2: 1, 3: 2, 4: 2, 5: 4, 6: 3, 7: 7, 8: 7, 9: 11, 10: 11,
    11: 22, 12: 17, 13: 35, 14: 37, 15: 52, 16: 59, 17: 103, 18: 91, 19: 168, 20: 168,
    21: 241, 22: 298, 23: 477, 24: 418, 25: 715, 26: 872, 27: 1135, 28: 1288, 29: 2105, 30: 1949,
}

UPPER_EXPONENT = 0.41385
LOWER_LOG2_CONSTANT = -8 / 3
PROOF_U = 0.1723


@dataclass(frozen=True)
class MedTable:
    f: int
    total: int
    by_multiplicity: dict[int, int]


def med_table(f: int, **enum_kw) -> MedTable:
    by_m: Counter = Counter()

    def visit(s: Semigroup):
        m = s.multiplicity
        if len(min_generators(s)) == m:
            by_m[m] += 1

    enumerate_by_frobenius(f, visit, **enum_kw)
    return MedTable(f=f, total=sum(by_m.values()), by_multiplicity=dict(sorted(by_m.items())))


def count_med(f: int, **enum_kw) -> int:
    return med_table(f, **enum_kw).total


def count_med_by_shift(m: int, f: int, **enum_kw) -> int:
    """Semigroups with Frobenius number f - m that contain m."""
    if m < 2 or m > f + 1:
        raise ValueError(f"need 2 <= m <= f + 1, got m = {m}, f = {f}")
    target = f - m
    if target == -1:
        return 1
    if target == 0 or target == m:
        return 0
    if m > target:
        return enumerate_by_frobenius(target, **enum_kw).total
    hits = 0

    def visit(s: Semigroup):
        nonlocal hits
        if m in s:
            hits += 1

    enumerate_by_frobenius(target, visit, **enum_kw)
    return hits


def shift_total(f: int, **enum_kw) -> int:
    return sum(count_med_by_shift(m, f, **enum_kw) for m in range(2, f + 2))


@dataclass(frozen=True)
class MedBoundCheck:
    f: int
    med: int
    lower_bound: float
    lower_ok: bool
    upper_ratio: float
    upper_ok: bool | None


def lower_bound(f: int) -> float:
    return 2 ** (LOWER_LOG2_CONSTANT + f / 3)


def med_bounds_check(f: int, med: int | None = None, c_prime: float | None = None) -> MedBoundCheck:
    """Lower bound 2^(-8/3) 2^(f/3) < MED(f); upper side reported as a ratio.

    ``upper_ok`` is only decided when an explicit ``c_prime`` is supplied.
    """
    med = count_med(f) if med is None else med
    lo = lower_bound(f)
    ratio = med / 2 ** (UPPER_EXPONENT * f)
    return MedBoundCheck(
        f=f,
        med=med,
        lower_bound=lo,
        lower_ok=lo < med,
        upper_ratio=ratio,
        upper_ok=None if c_prime is None else ratio < c_prime,
    )


def upper_chain_inequality(digits: int = 50) -> tuple[mpmath.mpf, mpmath.mpf, bool]:
    """2^(1/2) (13/16)^(1/8) 2^(-0.628 (0.25 - u)) < 2^0.41385 with u = 0.1723."""
    with mpmath.workdps(digits):
        u = mpmath.mpf("0.1723")
        lhs = mpmath.sqrt(2) * mpmath.power(mpmath.mpf(13) / 16, mpmath.mpf(1) / 8) * mpmath.power(
            2, -mpmath.mpf("0.628") * (mpmath.mpf("0.25") - u)
        )
        rhs = mpmath.power(2, mpmath.mpf("0.41385"))
        exponent_ok = abs((1 - u) / 2 - mpmath.mpf("0.41385")) < mpmath.mpf(10) ** (-(digits - 5))
        return lhs, rhs, bool(lhs < rhs and exponent_ok)


@dataclass(frozen=True)
class GrowthRow:
    f: int
    med: int
    log2_ratio: float


def med_growth_table(f_max: int, meds: dict[int, int] | None = None) -> list[GrowthRow]:
    meds = meds or {}
    rows = []
    for f in range(1, f_max + 1):
        med = meds[f] if f in meds else count_med(f)
        rows.append(GrowthRow(f, med, math.log2(med) / f))
    return rows


__all__ = [
    "TABLE1",
    "GrowthRow",
    "MedBoundCheck",
    "MedTable",
    "count_med",
    "count_med_by_shift",
    "lower_bound",
    "med_bounds_check",
    "med_growth_table",
    "med_table",
    "shift_total",
    "upper_chain_inequality",
]
