"""Exhaustive enumeration of numerical semigroups by Frobenius number and by genus.

By Frobenius number ``f`` the search decides membership of 1, 2, ..., f-1 in
order while carrying the additive closure of the members chosen so far
(restricted to ``[0, f]``) as an int bitmask. A position already in the
closure is forced in. Otherwise it may be left out, and it may be put in
only if ``f`` stays outside the enlarged closure. So every branch ends in
exactly one semigroup and there are no dead ends.

By genus the search walks the usual semigroup tree: the root is N and the
children of S are S minus one minimal generator larger than f(S).

Both searches can be split into independent subtrees (the first few
branching decisions) that run on a worker pool. Censuses are merged by
addition so the result does not depend on scheduling.
"""

from __future__ import annotations

import json
import time
from collections import Counter
from concurrent.futures import Executor, ProcessPoolExecutor, ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Optional

from .core import NATURALS, Semigroup, bits, closure_violation
from .errors import BudgetExceeded, OutOfBudget

Visitor = Optional[Callable[[Semigroup], None]]

BRUTE_FORCE_MAX_F = 22
DEFAULT_SPLIT_DEPTH = 8


@dataclass(frozen=True)
class Budget:
    """Optional search limits. ``None`` means unlimited."""

    max_nodes: int | None = None
    max_seconds: float | None = None

    def __post_init__(self):
        if self.max_nodes is not None and self.max_nodes < 0:
            raise ValueError("max_nodes must be nonnegative")
        if self.max_seconds is not None and self.max_seconds < 0:
            raise ValueError("max_seconds must be nonnegative")


class _Guard:
    __slots__ = ("nodes", "max_nodes", "deadline")

    def __init__(self, max_nodes: int | None, deadline: float | None):
        self.nodes = 0
        self.max_nodes = max_nodes
        self.deadline = deadline

    def tick(self):
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise BudgetExceeded(f"node budget of {self.max_nodes} exhausted")
        if self.deadline is not None and self.nodes & 1023 == 0 and time.time() > self.deadline:
            raise BudgetExceeded("time budget exhausted")


def _limits(budget: Budget | None) -> tuple[int | None, float | None]:
    """Node limit and absolute wall-clock deadline for a budget."""
    if budget is None:
        return None, None
    deadline = None if budget.max_seconds is None else time.time() + budget.max_seconds
    return budget.max_nodes, deadline


def _make_guard(max_nodes: int | None, deadline: float | None) -> _Guard | None:
    if max_nodes is None and deadline is None:
        return None
    return _Guard(max_nodes, deadline)


def _int_keys(d: dict) -> dict[int, int]:
    return {int(k): int(v) for k, v in sorted(d.items(), key=lambda kv: int(kv[0]))}


# ---------------------------------------------------------------------------
# Frobenius census


@dataclass(frozen=True)
class FrobeniusCensus:
    f: int
    total: int
    by_n: dict[int, int]
    by_multiplicity: dict[int, int]
    by_depth: dict[int, int]

    @classmethod
    def from_table(cls, f: int, table: Counter) -> "FrobeniusCensus":
        """Build from a Counter keyed by ``(n, m)``."""
        by_n: Counter = Counter()
        by_m: Counter = Counter()
        by_q: Counter = Counter()
        for (n, m), c in table.items():
            by_n[n] += c
            by_m[m] += c
            by_q[-(-(f + 1) // m)] += c
        return cls(
            f=f,
            total=sum(table.values()),
            by_n=dict(sorted(by_n.items())),
            by_multiplicity=dict(sorted(by_m.items())),
            by_depth=dict(sorted(by_q.items())),
        )

    def to_dict(self) -> dict:
        return {
            "f": self.f,
            "total": self.total,
            "by_n": {str(k): v for k, v in self.by_n.items()},
            "by_multiplicity": {str(k): v for k, v in self.by_multiplicity.items()},
            "by_depth": {str(k): v for k, v in self.by_depth.items()},
        }

    @classmethod
    def from_dict(cls, d: dict) -> "FrobeniusCensus":
        return cls(
            f=int(d["f"]),
            total=int(d["total"]),
            by_n=_int_keys(d["by_n"]),
            by_multiplicity=_int_keys(d["by_multiplicity"]),
            by_depth=_int_keys(d["by_depth"]),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))


def _walk_frobenius(f: int, state: tuple, table: Counter, visit: Visitor, guard: _Guard | None):
    full = (1 << (f + 1)) - 1
    fbit = 1 << f
    top = 1 << (f + 1)
    half = f // 2

    def rec(x: int, c: int, n: int, m: int):
        if guard is not None:
            guard.tick()
        while x < f:
            if (c >> x) & 1:
                n += 1
                x += 1
                continue
            if x > half:
                d = c | ((c << x) & full)
            else:
                d = c
                while True:
                    e = d | ((d << x) & full)
                    if e == d:
                        break
                    d = e
            if not d & fbit:
                rec(x + 1, d, n + 1, m or x)
            x += 1
        table[(n, m or f + 1)] += 1
        if visit is not None:
            visit(Semigroup(f, c | top))

    rec(*state)


def _split_frobenius(f: int, depth: int) -> list[tuple]:
    """Search states after ``depth`` binary decisions, in DFS order.

    A state is ``(next position, closure, n, multiplicity or 0)``.
    """
    full = (1 << (f + 1)) - 1
    fbit = 1 << f
    states: list[tuple] = []

    def rec(x: int, c: int, n: int, m: int, level: int):
        while x < f:
            if (c >> x) & 1:
                n += 1
                x += 1
                continue
            d = c
            while True:
                e = d | ((d << x) & full)
                if e == d:
                    break
                d = e
            if not d & fbit:
                if level == depth:
                    states.append((x, c, n, m))
                    return
                rec(x + 1, d, n + 1, m or x, level + 1)
                rec(x + 1, c, n, m, level + 1)
                return
            x += 1
        states.append((x, c, n, m))

    rec(1, 1, 0, 0, 0)
    return states


def _frobenius_task(f: int, states: list[tuple], deadline: float | None, max_nodes: int | None):
    table: Counter = Counter()
    guard = _make_guard(max_nodes, deadline)
    for state in states:
        _walk_frobenius(f, state, table, None, guard)
    return table


def _chunks(items: list, count: int) -> list[list]:
    size = max(1, -(-len(items) // count))
    return [items[i:i + size] for i in range(0, len(items), size)]


def _executor(workers: int, visitor: Visitor) -> Executor:
    # Visitors are arbitrary callables, so they stay in-process.
    if visitor is not None:
        return ThreadPoolExecutor(max_workers=workers)
    return ProcessPoolExecutor(max_workers=workers)


def enumerate_by_frobenius(
    f: int,
    visitor: Visitor = None,
    *,
    workers: int = 1,
    split_depth: int = DEFAULT_SPLIT_DEPTH,
    budget: Budget | None = None,
) -> FrobeniusCensus:
    """Visit every numerical semigroup with Frobenius number ``f`` exactly once.

    With ``workers == 1`` the visiting order is deterministic. With more
    workers the visitor may be called concurrently from threads; the census
    is identical either way.
    """
    if f < 1:
        raise ValueError(f"Frobenius number must be >= 1, got {f}")
    if workers < 1:
        raise ValueError("workers must be >= 1")
    if f <= 2:
        # Only {0, f+1 ->}: 1 cannot be a member, and for f = 2 neither can 1.
        s = Semigroup(f, 1 | (1 << (f + 1)))
        if visitor is not None:
            visitor(s)
        return FrobeniusCensus.from_table(f, Counter({(0, f + 1): 1}))

    table: Counter = Counter()
    if workers == 1:
        guard = _make_guard(*_limits(budget))
        for state in _split_frobenius(f, split_depth):
            _walk_frobenius(f, state, table, visitor, guard)
        return FrobeniusCensus.from_table(f, table)

    max_nodes, deadline = _limits(budget)
    groups = _chunks(_split_frobenius(f, split_depth), workers * 4)
    with _executor(workers, visitor) as pool:
        if visitor is None:
            futures = [pool.submit(_frobenius_task, f, g, deadline, max_nodes) for g in groups]
        else:
            futures = [pool.submit(_threaded_frobenius_task, f, g, visitor, deadline, max_nodes) for g in groups]
        for fut in futures:
            table.update(fut.result())
    return FrobeniusCensus.from_table(f, table)


def _threaded_frobenius_task(f, states, visitor, deadline, max_nodes):
    table: Counter = Counter()
    guard = _make_guard(max_nodes, deadline)
    for state in states:
        _walk_frobenius(f, state, table, visitor, guard)
    return table


def iter_by_frobenius(f: int) -> list[Semigroup]:
    """All semigroups with Frobenius number ``f``, in enumeration order."""
    out: list[Semigroup] = []
    enumerate_by_frobenius(f, out.append)
    return out


def brute_force_by_frobenius(f: int) -> FrobeniusCensus:
    """Oracle: test every subset of [1, f-1] for closure. Independent of the DFS."""
    if f < 1:
        raise ValueError(f"Frobenius number must be >= 1, got {f}")
    if f > BRUTE_FORCE_MAX_F:
        raise OutOfBudget(f"brute force is limited to f <= {BRUTE_FORCE_MAX_F}")
    table: Counter = Counter()
    top = 1 << (f + 1)
    for sub in range(1 << (f - 1)):
        mask = 1 | (sub << 1) | top
        if closure_violation(mask, f) is not None:
            continue
        m = (sub & -sub).bit_length() if sub else f + 1
        table[(bin(sub).count("1"), m)] += 1
    return FrobeniusCensus.from_table(f, table)


def count_by_multiplicity(m: int, f: int, budget: Budget | None = None) -> int:
    """N_mul(m, f), computed by a search rooted at the forced prefix {0, m}."""
    if f < 1:
        raise ValueError(f"Frobenius number must be >= 1, got {f}")
    if m < 1 or m > f + 1:
        raise ValueError(f"multiplicity must lie in [1, f + 1], got {m}")
    if m == f + 1:
        return 1
    if m == 1 or f % m == 0:
        return 0
    closure = 0
    for k in range(0, f + 1, m):
        closure |= 1 << k
    table: Counter = Counter()
    _walk_frobenius(f, (m + 1, closure, 1, m), table, None, _make_guard(*_limits(budget)))
    return sum(table.values())


# ---------------------------------------------------------------------------
# Genus census


@dataclass(frozen=True)
class GenusCensus:
    """Semigroups of genus ``g`` split by depth class.

    ``by_2m_minus_F`` covers depth 2 (keyed by k = 2m - F), ``by_type`` covers
    depth 3 (keyed by ``(k, A)`` with k = F - 2m), ``deep`` counts F > 3m and
    ``depth1`` counts N and {0, g+1 ->}.
    """

    g: int
    total: int
    depth1: int
    by_2m_minus_F: dict[int, int]
    by_type: dict[tuple[int, tuple[int, ...]], int]
    deep: int

    def to_dict(self) -> dict:
        return {
            "g": self.g,
            "total": self.total,
            "depth1": self.depth1,
            "by_2m_minus_F": {str(k): v for k, v in self.by_2m_minus_F.items()},
            "by_type": {
                f"{k};{' '.join(map(str, a))}": v for (k, a), v in self.by_type.items()
            },
            "deep": self.deep,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))


def genus_class(frobenius: int, members: int) -> tuple:
    """Depth bucket of one semigroup: ('depth1',), ('depth2', k), ('depth3', k, A) or ('deep',)."""
    if frobenius < 0:
        return ("depth1",)
    low = members >> 1
    m = (low & -low).bit_length()
    if m > frobenius:
        return ("depth1",)
    if 2 * m > frobenius:
        return ("depth2", 2 * m - frobenius)
    if 3 * m > frobenius:
        k = frobenius - 2 * m
        a = tuple(x for x in range(k + 1) if (members >> (m + x)) & 1)
        return ("depth3", k, a)
    return ("deep",)


def _genus_window(g: int) -> int:
    # F <= 2g - 1 and m <= g + 1, so generators that matter stay below 3g + 3.
    return 3 * g + 2


def _generators_above(frob: int, mask: int, limit: int) -> list[int]:
    window = (1 << (limit + 1)) - 1
    nz = mask & ~1
    sums = 0
    for a in bits(nz):
        if 2 * a > limit:
            break
        sums |= (nz << a) & window
    gens = nz & ~sums
    return [x for x in bits(gens >> (frob + 1) << (frob + 1))]


def _walk_genus(g: int, node: tuple, table: Counter, visit: Visitor, guard: _Guard | None):
    limit = _genus_window(g)

    def rec(depth: int, frob: int, mask: int):
        if guard is not None:
            guard.tick()
        if depth == g:
            table[genus_class(frob, mask)] += 1
            if visit is not None:
                visit(Semigroup(frob, mask & ((1 << (frob + 2)) - 1)))
            return
        for x in _generators_above(frob, mask, limit):
            rec(depth + 1, x, mask & ~(1 << x))

    rec(*node)


def _split_genus(g: int, depth: int) -> list[tuple]:
    limit = _genus_window(g)
    level = [(0, -1, (1 << (limit + 1)) - 1)]
    for d in range(min(depth, g)):
        level = [
            (d + 1, x, mask & ~(1 << x))
            for _, frob, mask in level
            for x in _generators_above(frob, mask, limit)
        ]
    return level


def _genus_task(g: int, nodes: list[tuple], visitor: Visitor, deadline, max_nodes):
    table: Counter = Counter()
    guard = _make_guard(max_nodes, deadline)
    for node in nodes:
        _walk_genus(g, node, table, visitor, guard)
    return table


def _genus_census(g: int, table: Counter) -> GenusCensus:
    depth1 = deep = 0
    by_k: Counter = Counter()
    by_type: Counter = Counter()
    for key, c in table.items():
        if key[0] == "depth1":
            depth1 += c
        elif key[0] == "depth2":
            by_k[key[1]] += c
        elif key[0] == "depth3":
            by_type[(key[1], key[2])] += c
        else:
            deep += c
    return GenusCensus(
        g=g,
        total=sum(table.values()),
        depth1=depth1,
        by_2m_minus_F=dict(sorted(by_k.items())),
        by_type=dict(sorted(by_type.items())),
        deep=deep,
    )


def enumerate_by_genus(
    g: int,
    visitor: Visitor = None,
    *,
    workers: int = 1,
    split_depth: int = 4,
    budget: Budget | None = None,
) -> GenusCensus:
    """Visit every numerical semigroup of genus ``g`` exactly once."""
    if g < 0:
        raise ValueError(f"genus must be >= 0, got {g}")
    if workers < 1:
        raise ValueError("workers must be >= 1")
    if g == 0:
        if visitor is not None:
            visitor(NATURALS)
        return _genus_census(0, Counter({("depth1",): 1}))

    nodes = _split_genus(g, split_depth)
    table: Counter = Counter()
    if workers == 1:
        guard = _make_guard(*_limits(budget))
        for node in nodes:
            _walk_genus(g, node, table, visitor, guard)
        return _genus_census(g, table)

    max_nodes, deadline = _limits(budget)
    with _executor(workers, visitor) as pool:
        futures = [
            pool.submit(_genus_task, g, group, visitor, deadline, max_nodes)
            for group in _chunks(nodes, workers * 4)
        ]
        for fut in futures:
            table.update(fut.result())
    return _genus_census(g, table)


def iter_by_genus(g: int) -> list[Semigroup]:
    out: list[Semigroup] = []
    enumerate_by_genus(g, out.append)
    return out


def brute_force_by_genus(g: int) -> int:
    """Oracle for n_g: scan gap sets of size g inside [1, 2g - 1] plus the forced shape."""
    if g > 10:
        raise OutOfBudget("brute-force genus count is limited to g <= 10")
    if g == 0:
        return 1
    limit = 2 * g  # Frobenius number is at most 2g - 1
    count = 0
    for gaps in combinations(range(1, limit), g):
        frob = gaps[-1]
        mask = ((1 << (frob + 2)) - 1)
        for x in gaps:
            mask &= ~(1 << x)
        if closure_violation(mask, frob) is None:
            count += 1
    return count


def genus_frobenius_table(f_max: int) -> Counter:
    """Counter keyed by ``(g, f)`` over every semigroup with 1 <= f <= f_max."""
    table: Counter = Counter()
    for f in range(1, f_max + 1):
        census = enumerate_by_frobenius(f)
        for n, c in census.by_n.items():
            table[(f - n, f)] += c
    return table


__all__ = [
    "Budget",
    "FrobeniusCensus",
    "GenusCensus",
    "brute_force_by_frobenius",
    "brute_force_by_genus",
    "count_by_multiplicity",
    "enumerate_by_frobenius",
    "enumerate_by_genus",
    "genus_class",
    "genus_frobenius_table",
    "iter_by_frobenius",
    "iter_by_genus",
]
