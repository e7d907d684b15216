"""Distribution of n(S) = f - g(S) over semigroups with a fixed Frobenius number.

The exact side comes from enumeration. The model side is a Gaussian with
mean fbar/2 and variance fbar/4 times the polynomial

    h_L(x) = 1 + sum over Max(Y) <= L of (1 - x)^beta * x^(Max(Y) + 1 + alpha - beta)

(alpha' for even f). The true normalizer is an infinite series; here it is
replaced by the L-truncated sum from :func:`constant_partial_sum`. At desk
scale the model then carries a few percent of excess mass (the high powers
of x are convex around 1/2); the excess decays like 1/f.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .classify import (
    Parity,
    class_count_by_n,
    constant_partial_sum,
    derive_params,
    enumerate_class_keys,
    parity_of,
)
from .core import fbar
from .enumeration import FrobeniusCensus, enumerate_by_frobenius
from .errors import FTooSmall

# A published alternative form of h_2, kept for comparison only.
PRINTED_H2 = (1, 0, 2, -1, 4, -2, 2)


@dataclass(frozen=True)
class DistributionTable:
    f: int
    counts: dict[int, int]
    total: int

    def probability(self, n: int) -> Fraction:
        return Fraction(self.counts.get(n, 0), self.total)


def empirical_distribution(f: int, census: FrobeniusCensus | None = None, **enum_kw) -> DistributionTable:
    if census is None:
        census = enumerate_by_frobenius(f, **enum_kw)
    fb = max(fbar(f), 0)
    counts = {n: census.by_n.get(n, 0) for n in range(fb + 1)}
    return DistributionTable(f=f, counts=counts, total=census.total)


@dataclass(frozen=True)
class HPolynomial:
    L: int
    parity: Parity
    coefficients: tuple[Fraction, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def evaluate(self, x) -> Fraction | float:
        acc = 0 if isinstance(x, float) else Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + (float(c) if isinstance(x, float) else c)
        return acc


def _poly_add(acc: list[int], terms: Sequence[int], shift: int):
    need = shift + len(terms)
    if len(acc) < need:
        acc.extend([0] * (need - len(acc)))
    for i, c in enumerate(terms):
        acc[shift + i] += c


def h_polynomial(L: int, parity: Parity) -> HPolynomial:
    coeffs = [1]
    for k in enumerate_class_keys(L):
        sig = derive_params(k.Y, k.Z)
        a = sig.alpha if parity == "odd" else sig.alpha_prime
        b = sig.beta
        one_minus_x_pow = [(-1) ** i * comb(b, i) for i in range(b + 1)]
        _poly_add(coeffs, one_minus_x_pow, sig.max_y + 1 + a - b)
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return HPolynomial(L=L, parity=parity, coefficients=tuple(Fraction(c) for c in coeffs))


def printed_h2() -> HPolynomial:
    return HPolynomial(L=2, parity="odd", coefficients=tuple(Fraction(c) for c in PRINTED_H2))


def gaussian(fb: int, n: float) -> float:
    """Normal density with mean fb/2 and variance fb/4."""
    var = fb / 4
    return math.exp(-((n - fb / 2) ** 2) / (2 * var)) / math.sqrt(2 * math.pi * var)


def _require_theory(f: int, L: int):
    if f <= 6 * L + 6:
        raise FTooSmall(f"model needs f > 6L + 6 = {6 * L + 6}, got f = {f}")


def theoretical_density(f: int, L: int, n: int, h: HPolynomial | None = None) -> float:
    _require_theory(f, L)
    fb = fbar(f)
    parity = parity_of(f)
    if h is None:
        h = h_polynomial(L, parity)
    c = constant_partial_sum(L, parity)
    return gaussian(fb, n) * float(h.evaluate(Fraction(n, fb))) / float(c)


def theoretical_curve(f: int, L: int, h: HPolynomial | None = None) -> list[float]:
    """Model density at n = 0 .. fbar."""
    _require_theory(f, L)
    fb = fbar(f)
    parity = parity_of(f)
    h = h or h_polynomial(L, parity)
    c = float(constant_partial_sum(L, parity))
    return [gaussian(fb, n) * float(h.evaluate(Fraction(n, fb))) / c for n in range(fb + 1)]


@dataclass(frozen=True)
class Comparison:
    f: int
    L: int
    empirical: tuple[float, ...]
    theory: tuple[float, ...]
    sup_diff: float
    tv_distance: float


def compare(table: DistributionTable, L: int, h: HPolynomial | None = None) -> Comparison:
    theory = theoretical_curve(table.f, L, h)
    emp = [table.counts.get(n, 0) / table.total for n in range(len(theory))]
    diffs = [abs(a - b) for a, b in zip(emp, theory)]
    return Comparison(
        f=table.f,
        L=L,
        empirical=tuple(emp),
        theory=tuple(theory),
        sup_diff=max(diffs),
        tv_distance=0.5 * sum(diffs),
    )


def average_n(f: int, census: FrobeniusCensus | None = None, **enum_kw) -> Fraction:
    """Exact mean of n(S); mean genus is f minus this."""
    table = empirical_distribution(f, census, **enum_kw)
    return Fraction(sum(n * c for n, c in table.counts.items()), table.total)


def concentration_mass(f: int, eps: float, census: FrobeniusCensus | None = None, **enum_kw) -> float:
    """Fraction of semigroups with |n(S) - f/4| < f^(1/2 + eps)."""
    if eps <= 0:
        raise ValueError("eps must be positive")
    table = empirical_distribution(f, census, **enum_kw)
    radius = f ** (0.5 + eps)
    inside = sum(c for n, c in table.counts.items() if abs(n - f / 4) < radius)
    return inside / table.total


def structured_counts(f: int, L: int, tail: dict | None = None) -> dict[int, int]:
    """N(f, n) rebuilt from closed forms for Max(Y) <= L plus enumerated tail classes.

    ``tail`` maps n to the count of semigroups whose class has Max(Y) > L.
    """
    fb = fbar(f)
    out = {}
    keys = enumerate_class_keys(L) if L >= 0 else []
    for n in range(fb + 1):
        total = comb(fb, n)  # depth 1 (n = 0) and depth 2
        for k in keys:
            total += class_count_by_n(k.Y, k.Z, f, n)
        total += (tail or {}).get(n, 0)
        out[n] = total
    return out


QUARTILES = (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4))


def reconstruction_error(h: HPolynomial, f: int, points: Sequence[Fraction] = QUARTILES) -> float:
    """Worst gap between the exact class-count ratio and ``h(x) - 1``.

    The ratio is sum over Max(Y) <= h.L of N(Y, Z, f, n) / C(fbar, n) at
    n = x * fbar. Needs no enumeration, so f can be large; the gap shrinks
    like 1/f for the correct polynomial.
    """
    fb = fbar(f)
    keys = enumerate_class_keys(h.L)
    worst = 0.0
    for x in points:
        n = int(x * fb)
        ratio = Fraction(sum(class_count_by_n(k.Y, k.Z, f, n) for k in keys), comb(fb, n))
        worst = max(worst, abs(float(ratio - (h.evaluate(Fraction(n, fb)) - 1))))
    return worst


@dataclass(frozen=True)
class HResolution:
    definition: HPolynomial
    printed: HPolynomial
    sup_diff_definition: dict[int, float]
    sup_diff_printed: dict[int, float]
    asymptotic_f: int
    asymptotic_error_definition: float
    asymptotic_error_printed: float
    tolerance: float

    @property
    def flagged(self) -> list[str]:
        """Candidates that disagree with the structured reconstruction."""
        out = []
        if self.asymptotic_error_definition > self.tolerance:
            out.append("definition")
        if self.asymptotic_error_printed > self.tolerance:
            out.append("printed")
        return out

    @property
    def closer_on_data(self) -> dict[int, str]:
        return {
            f: "definition" if self.sup_diff_definition[f] <= self.sup_diff_printed[f] else "printed"
            for f in self.sup_diff_definition
        }


def resolve_h2(fs: Sequence[int] = (19, 29), asymptotic_f: int = 20001, tolerance: float = 0.01) -> HResolution:
    """Compare the derived h_2 with the printed one on data and in the large-f limit."""
    definition = h_polynomial(2, "odd")
    printed = printed_h2()
    sd_def, sd_pr = {}, {}
    for f in fs:
        table = empirical_distribution(f)
        sd_def[f] = compare(table, 2, definition).sup_diff
        sd_pr[f] = compare(table, 2, printed).sup_diff
    return HResolution(
        definition=definition,
        printed=printed,
        sup_diff_definition=sd_def,
        sup_diff_printed=sd_pr,
        asymptotic_f=asymptotic_f,
        asymptotic_error_definition=reconstruction_error(definition, asymptotic_f),
        asymptotic_error_printed=reconstruction_error(printed, asymptotic_f),
        tolerance=tolerance,
    )


__all__ = [
    "HResolution",
    "reconstruction_error",
    "resolve_h2",
    "Comparison",
    "DistributionTable",
    "HPolynomial",
    "average_n",
    "compare",
    "concentration_mass",
    "empirical_distribution",
    "gaussian",
    "h_polynomial",
    "printed_h2",
    "structured_counts",
    "theoretical_curve",
    "theoretical_density",
]
