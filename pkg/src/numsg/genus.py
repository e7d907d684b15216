"""Counting by genus: Fibonacci laws for depth 2 and the (k; A) types of depth 3.

Fibonacci indexing is F_1 = F_2 = 1 with F_n = 0 for n <= 0.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .core import Semigroup
from .enumeration import Budget, GenusCensus, enumerate_by_genus
from .errors import NotDepth3, OutOfBudget

AK_MAX_K = 20


@lru_cache(maxsize=None)
def fib(n: int) -> int:
    if n <= 0:
        return 0
    a, b = 0, 1
    for _ in range(n - 1):
        a, b = b, a + b
    return b


def fib_by_binomials(n: int) -> int:
    """F_{n+1} as the diagonal sum of Pascal's triangle."""
    return sum(comb(n - k, k) for k in range(n // 2 + 1))


@dataclass(frozen=True, order=True)
class TypeKA:
    k: int
    A: tuple[int, ...]

    @property
    def sumset_size(self) -> int:
        """|(A + A) intersected with [0, k]|."""
        return len({a + b for a in self.A for b in self.A if a + b <= self.k})

    def bound_index(self, g: int) -> int:
        return g - self.sumset_size + len(self.A) - self.k - 1

    def bound(self, g: int) -> int:
        return fib(self.bound_index(g))

    def is_valid(self) -> bool:
        A = set(self.A)
        return (
            self.k >= 1
            and 0 in A
            and all(0 <= a <= self.k - 1 for a in A)
            and not any(self.k - a in A for a in A)
        )

    def __str__(self) -> str:
        return f"({self.k};{{{','.join(map(str, self.A))}}})"


def enumerate_Ak(k: int) -> list[TypeKA]:
    """A_k = {A in [0, k-1] : 0 in A, k not in A + A}, sorted as tuples."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if k > AK_MAX_K:
        raise OutOfBudget(f"A_k scan is limited to k <= {AK_MAX_K}")
    out = []
    for sub in range(1 << (k - 1)):
        A = (0,) + tuple(i + 1 for i in range(k - 1) if (sub >> i) & 1)
        t = TypeKA(k, A)
        if t.is_valid():
            out.append(t)
    return sorted(out)


def type_of(s: Semigroup) -> TypeKA:
    F = s.frobenius
    m = s.multiplicity
    if F < 0 or not (2 * m < F < 3 * m):
        raise NotDepth3(f"{s} has F = {F}, m = {m}; depth 3 needs 2m < F < 3m")
    k = F - 2 * m
    t = TypeKA(k, tuple(x - m for x in range(m, m + k + 1) if x in s))
    if not t.is_valid():
        raise AssertionError(f"type {t} of {s} is not in A_k")
    return t


def count_2m_minus_F(g: int, k: int, census: GenusCensus | None = None, **enum_kw) -> int:
    if k < 1 or g < k + 1:
        raise ValueError("need k >= 1 and g >= k + 1")
    census = census or enumerate_by_genus(g, **enum_kw)
    return census.by_2m_minus_F.get(k, 0)


def depth2_by_genus(g: int, census: GenusCensus | None = None, **enum_kw) -> int:
    if g < 1:
        raise ValueError("g must be >= 1")
    census = census or enumerate_by_genus(g, **enum_kw)
    return sum(census.by_2m_minus_F.values())


@dataclass(frozen=True)
class TypeRow:
    type: TypeKA
    count: int
    bound_index: int
    bound: int

    @property
    def ok(self) -> bool:
        if self.count and self.bound_index <= 0:
            return False
        return self.count <= self.bound


def type_census(g: int, census: GenusCensus | None = None, **enum_kw) -> list[TypeRow]:
    """Per-type counts at genus g with the Fibonacci upper bound for each."""
    census = census or enumerate_by_genus(g, **enum_kw)
    rows = []
    for (k, A), count in census.by_type.items():
        t = TypeKA(k, A)
        rows.append(TypeRow(t, count, t.bound_index(g), t.bound(g)))
    return rows


def f_minus_2m_histogram(g: int, **enum_kw) -> Counter:
    """Counter of |F - 2m| over all semigroups of genus g."""
    hist: Counter = Counter()

    def visit(s: Semigroup):
        hist[abs(s.frobenius - 2 * s.multiplicity)] += 1

    enumerate_by_genus(g, visit, **enum_kw)
    return hist


def tail_mass_F_2m(g: int, N: int, hist: Counter | None = None, **enum_kw) -> float:
    """Fraction of genus-g semigroups with |F - 2m| > N."""
    if N < 0:
        raise ValueError("N must be >= 0")
    hist = hist if hist is not None else f_minus_2m_histogram(g, **enum_kw)
    total = sum(hist.values())
    return sum(c for d, c in hist.items() if d > N) / total


def deep_fraction(g: int, census: GenusCensus | None = None, **enum_kw) -> float:
    """Fraction of genus-g semigroups with F > 3m."""
    census = census or enumerate_by_genus(g, **enum_kw)
    return census.deep / census.total


__all__ = [
    "Budget",
    "TypeKA",
    "TypeRow",
    "count_2m_minus_F",
    "deep_fraction",
    "depth2_by_genus",
    "enumerate_Ak",
    "f_minus_2m_histogram",
    "fib",
    "fib_by_binomials",
    "tail_mass_F_2m",
    "type_census",
    "type_of",
]
