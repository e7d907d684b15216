"""Slow reference enumerations on plain Python sets, independent of the bitmask engine."""

from collections import Counter
from itertools import combinations


def closed(small: set[int], f: int) -> bool:
    # sums above f land in the tail, so only sums <= f matter
    elems = small | {0}
    return all(a + b > f or a + b in elems for a in elems for b in elems)


def semigroups_with_frobenius(f: int) -> list[frozenset[int]]:
    """Each semigroup as its set of elements in [0, f]."""
    out = []
    pool = range(1, f)
    for r in range(f):
        for pick in combinations(pool, r):
            s = set(pick)
            if closed(s, f):
                out.append(frozenset(s | {0}))
    return out


def semigroups_with_genus(g: int) -> list[frozenset[int]]:
    """Each semigroup as its gap set."""
    if g == 0:
        return [frozenset()]
    out = []
    for gaps in combinations(range(1, 2 * g), g):
        if 1 not in gaps:
            continue
        top = max(gaps)
        elems = set(range(top + 1)) - set(gaps)
        if closed(elems - {0}, top):
            out.append(frozenset(gaps))
    return out


def census(f: int) -> dict:
    by_n, by_m, by_q = Counter(), Counter(), Counter()
    for s in semigroups_with_frobenius(f):
        nonzero = [x for x in s if x > 0]
        m = min(nonzero) if nonzero else f + 1
        by_n[len(nonzero)] += 1
        by_m[m] += 1
        by_q[-(-(f + 1) // m)] += 1
    return {"total": sum(by_n.values()), "by_n": dict(by_n), "by_m": dict(by_m), "by_q": dict(by_q)}
