"""(Y, Z) classes of semigroups with a fixed Frobenius number.

For f(S) = f with fbar = (f - 1) // 2:

* ``Y(S) = {t : fbar - t in S, 0 <= t < fbar}``; empty exactly for depth 1 and 2.
* ``Z(S) = {x - f + fbar : x in S, f/2 < x <= f - m}`` when Y is nonempty.

Above ``f = 6 * Max(Y) + 6`` every class is a cube: a fixed core plus an
arbitrary subset of a free window near f. Its size is a power of two and
its n-profile is a binomial row.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Callable, Iterator, Literal

from .core import Semigroup, bits, build, fbar
from .enumeration import enumerate_by_frobenius
from .errors import FTooSmall, InvalidPair

Parity = Literal["odd", "even"]


def parity_of(f: int) -> Parity:
    return "odd" if f % 2 else "even"


@dataclass(frozen=True, order=True)
class ClassKey:
    """A class label. ``Y == ()`` is the Empty key (depth 1 and 2)."""

    Y: tuple[int, ...] = ()
    Z: tuple[int, ...] = ()

    @property
    def is_empty(self) -> bool:
        return not self.Y

    @property
    def max_y(self) -> int:
        return self.Y[-1] if self.Y else -1

    def __str__(self) -> str:
        if self.is_empty:
            return "Empty"
        return f"Y={{{','.join(map(str, self.Y))}}} Z={{{','.join(map(str, self.Z))}}}"


EMPTY = ClassKey()


def key(Y, Z=()) -> ClassKey:
    return ClassKey(tuple(sorted(set(Y))), tuple(sorted(set(Z))))


@dataclass(frozen=True)
class YZSignature:
    Y: tuple[int, ...]
    Z: tuple[int, ...]
    twoY: frozenset[int] = field(compare=False)
    W1: frozenset[int] = field(compare=False)
    W2: frozenset[int] = field(compare=False)
    alpha: int = field(compare=False)
    alpha_prime: int = field(compare=False)
    beta: int = field(compare=False)

    @property
    def max_y(self) -> int:
        return self.Y[-1]

    def alpha_for(self, f: int) -> int:
        return self.alpha if f % 2 else self.alpha_prime

    def forced_offsets(self, f: int) -> frozenset[int]:
        """``2Y | W1`` for odd f, ``2Y | W2`` for even f."""
        return self.twoY | (self.W1 if f % 2 else self.W2)


def derive_params(Y, Z=()) -> YZSignature:
    Y = tuple(sorted(set(Y)))
    Z = tuple(sorted(set(Z)))
    if not Y:
        raise InvalidPair("Y must be nonempty")
    if Y[0] < 0:
        raise InvalidPair("Y must contain nonnegative integers")
    lmax = Y[-1]
    if any(z < 0 or z > lmax for z in Z):
        raise InvalidPair(f"Z must lie in [0, {lmax}]")
    if set(Y) & set(Z):
        raise InvalidPair("Y and Z must be disjoint")
    two_y = frozenset(a + b for a in Y for b in Y)
    w1 = frozenset(d for y in Y for z in Z if (d := y - z - 1) >= 0)
    w2 = frozenset(d for y in Y for z in Z if (d := y - z - 2) >= -1)
    return YZSignature(
        Y=Y,
        Z=Z,
        twoY=two_y,
        W1=w1,
        W2=w2,
        alpha=len(two_y | w1),
        alpha_prime=len(two_y | w2),
        beta=lmax + 1 - len(set(Y) | set(Z)),
    )


def signature_of(s: Semigroup) -> ClassKey:
    f = s.frobenius
    if f < 1:
        raise ValueError("signature_of needs f >= 1")
    fb = fbar(f)
    Y = tuple(sorted(t for t in range(fb) if (fb - t) in s))
    if not Y:
        return EMPTY
    m = s.multiplicity
    # f/2 < x <= f - m, i.e. x >= f - fbar
    Z = tuple(x - f + fb for x in range(f - fb, f - m + 1) if x in s)
    return ClassKey(Y, Z)


def _check_threshold(sig: YZSignature, f: int):
    if f <= 6 * sig.max_y + 6:
        raise FTooSmall(f"closed form needs f > {6 * sig.max_y + 6}, got f = {f}")


def class_count(Y, Z, f: int) -> int:
    sig = derive_params(Y, Z)
    _check_threshold(sig, f)
    return 2 ** (fbar(f) - sig.max_y - 1 - sig.alpha_for(f))


def class_count_by_n(Y, Z, f: int, n: int) -> int:
    sig = derive_params(Y, Z)
    _check_threshold(sig, f)
    a = sig.alpha_for(f)
    top = fbar(f) - sig.max_y - 1 - a
    k = n - sig.max_y - 1 - a + sig.beta
    if k < 0 or k > top:
        return 0
    return comb(top, k)


@dataclass(frozen=True)
class ClassLayout:
    """Core members and free window of one (Y, Z, f) class."""

    core: frozenset[int]
    forced: frozenset[int]
    free: tuple[int, ...]


def class_layout(Y, Z, f: int) -> ClassLayout:
    sig = derive_params(Y, Z)
    _check_threshold(sig, f)
    fb = fbar(f)
    anchor = f - 1 if f % 2 else f - 2
    forced = frozenset(anchor - w for w in sig.forced_offsets(f))
    lo = f - fb + sig.max_y + 1
    z_region = range(f - fb, f - fb + sig.max_y + 1)
    if not all(lo <= x <= f - 1 for x in forced) or any(x in z_region for x in forced):
        raise AssertionError(f"forced elements {sorted(forced)} escape the free window")
    core = frozenset(fb - y for y in sig.Y) | frozenset(z + f - fb for z in sig.Z) | forced
    free = tuple(x for x in range(lo, f) if x not in forced)
    return ClassLayout(core=core, forced=forced, free=free)


def class_members(Y, Z, f: int, visitor: Callable[[Semigroup], None] | None = None) -> int:
    """Construct every semigroup of the class, validating each one.

    Each set goes through :func:`build` and must report signature (Y, Z).
    """
    target = key(Y, Z)
    layout = class_layout(Y, Z, f)
    core = sorted(layout.core)
    count = 0
    free = layout.free
    for r in range(len(free) + 1):
        for chosen in combinations(free, r):
            s = build(f, core + list(chosen))
            got = signature_of(s)
            if got != target:
                raise AssertionError(f"constructed {s} has signature {got}, expected {target}")
            if visitor is not None:
                visitor(s)
            count += 1
    return count


def enumerate_class_keys(L: int) -> list[ClassKey]:
    """All (Y, Z) with Max(Y) <= L, ordered by the bitmask of Y, then of Z."""
    if L < 0:
        raise ValueError("L must be >= 0")
    out = []
    for ymask in range(1, 1 << (L + 1)):
        Y = tuple(bits(ymask))
        room = [x for x in range(Y[-1] + 1) if not (ymask >> x) & 1]
        for zsub in range(1 << len(room)):
            out.append(ClassKey(Y, tuple(room[i] for i in range(len(room)) if (zsub >> i) & 1)))
    return out


def constant_partial_sum(L: int, parity: Parity) -> Fraction:
    """1 + sum over Max(Y) <= L of 2^-(Max(Y) + 1 + alpha), exact."""
    if parity not in ("odd", "even"):
        raise ValueError("parity must be 'odd' or 'even'")
    total = Fraction(1)
    for k in enumerate_class_keys(L):
        sig = derive_params(k.Y, k.Z)
        a = sig.alpha if parity == "odd" else sig.alpha_prime
        total += Fraction(1, 2 ** (sig.max_y + 1 + a))
    return total


def classify_frobenius(f: int) -> dict[ClassKey, Counter]:
    """Filtered enumeration: class key -> Counter of n(S)."""
    groups: dict[ClassKey, Counter] = {}

    def visit(s: Semigroup):
        k = signature_of(s)
        n = bin(s.members & ((1 << f) - 1)).count("1") - 1
        groups.setdefault(k, Counter())[n] += 1

    enumerate_by_frobenius(f, visit)
    return dict(sorted(groups.items()))


def class_sets(f: int, keys: set[ClassKey]) -> dict[ClassKey, set[int]]:
    """Member bitmasks of every enumerated semigroup whose class is in ``keys``."""
    out: dict[ClassKey, set[int]] = {k: set() for k in keys}

    def visit(s: Semigroup):
        k = signature_of(s)
        if k in out:
            out[k].add(s.members)

    enumerate_by_frobenius(f, visit)
    return out


@dataclass(frozen=True)
class MonotoneRow:
    f: int
    N_f: int
    N_f2: int
    ok: bool


def verify_monotonicity(f_max: int, totals: dict[int, int] | None = None, **enum_kw) -> list[MonotoneRow]:
    """Check N(f) < N(f + 2) for 1 <= f <= f_max by enumeration."""
    if f_max < 1:
        raise ValueError("f_max must be >= 1")
    totals = dict(totals or {})
    for f in range(1, f_max + 3):
        if f not in totals:
            totals[f] = enumerate_by_frobenius(f, **enum_kw).total
    return [MonotoneRow(f, totals[f], totals[f + 2], totals[f] < totals[f + 2]) for f in range(1, f_max + 1)]


def iter_class_items(L: int) -> Iterator[tuple[ClassKey, YZSignature]]:
    for k in enumerate_class_keys(L):
        yield k, derive_params(k.Y, k.Z)
