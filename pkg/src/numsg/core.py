"""Numerical semigroups as Frobenius number plus a membership bitmask.

Bit ``i`` of ``members`` is set iff ``i`` belongs to the semigroup, for
``0 <= i <= f + 1``. Everything above ``f + 1`` is implicitly a member.
The genus-0 semigroup (all of N) uses ``frobenius = -1`` and ``members = 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import FrobeniusViolated, InvalidSemigroup, NotClosed


def fbar(f: int) -> int:
    """floor((f - 1) / 2), the largest possible value of n(S)."""
    return (f - 1) // 2


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def mask_of(values: Iterable[int]) -> int:
    m = 0
    for v in values:
        m |= 1 << v
    return m


def closure_violation(mask: int, limit: int) -> int | None:
    """Return a gap ``<= limit`` that is a sum of two members, else None.

    ``mask`` holds membership for ``[0, limit]``. One shifted AND per member.
    """
    window = (1 << (limit + 1)) - 1
    holes = ~mask & window
    for a in bits(mask >> 1):
        a += 1
        if 2 * a > limit:
            break
        bad = (mask << a) & holes
        if bad:
            return (bad & -bad).bit_length() - 1
    return None


@dataclass(frozen=True, slots=True)
class Semigroup:
    frobenius: int
    members: int

    @property
    def f(self) -> int:
        return self.frobenius

    def __contains__(self, x: int) -> bool:
        if x < 0:
            return False
        if x > self.frobenius + 1:
            return True
        return bool((self.members >> x) & 1)

    def elements(self, upto: int | None = None) -> list[int]:
        """Members in ``[0, upto]``; defaults to ``[0, f + 1]``."""
        top = self.frobenius + 1 if upto is None else upto
        return [x for x in range(top + 1) if x in self]

    def small_elements(self) -> list[int]:
        """Nonzero members below the Frobenius number."""
        return [x for x in bits(self.members) if 0 < x < self.frobenius]

    def gaps(self) -> list[int]:
        return [x for x in range(1, self.frobenius + 1) if not (self.members >> x) & 1]

    @property
    def genus(self) -> int:
        if self.frobenius < 0:
            return 0
        return self.frobenius - (bin(self.members & ((1 << (self.frobenius + 1)) - 1)).count("1") - 1)

    @property
    def multiplicity(self) -> int:
        low = self.members >> 1
        return (low & -low).bit_length() if low else 1

    def __str__(self) -> str:
        if self.frobenius < 0:
            return "{0,1->}"
        small = [str(x) for x in bits(self.members) if x <= self.frobenius]
        return "{" + ",".join(small + [f"{self.frobenius + 1}->"]) + "}"


NATURALS = Semigroup(-1, 1)


def from_mask(f: int, mask: int) -> Semigroup:
    """Validate a raw bitmask over ``[0, f + 1]`` and wrap it."""
    if f < -1:
        raise InvalidSemigroup(f"Frobenius number must be >= -1, got {f}")
    mask &= (1 << (f + 2)) - 1
    if not mask & 1:
        raise InvalidSemigroup("0 must be a member")
    if f >= 0:
        if (mask >> f) & 1:
            raise FrobeniusViolated(f"{f} is listed as a member")
        if not (mask >> (f + 1)) & 1:
            raise InvalidSemigroup(f"{f + 1} must be a member")
        bad = closure_violation(mask, f)
        if bad is not None:
            raise NotClosed(f"gap {bad} is a sum of two members")
    return Semigroup(f, mask)


def build(f: int, member_list: Iterable[int]) -> Semigroup:
    """Semigroup with Frobenius number ``f`` and members ``member_list`` in [1, f + 1].

    ``f + 1`` is added automatically.

    >>> str(build(7, {3, 5, 6}))
    '{0,3,5,6,8->}'
    """
    if f < 1:
        raise InvalidSemigroup(f"build() needs f >= 1, got {f}")
    members = set(member_list)
    if f in members:
        raise FrobeniusViolated(f"{f} is listed as a member")
    out_of_range = [x for x in members if not 1 <= x <= f + 1]
    if out_of_range:
        raise InvalidSemigroup(f"members outside [1, {f + 1}]: {sorted(out_of_range)}")
    return from_mask(f, 1 | mask_of(members) | (1 << (f + 1)))


def _extended(s: Semigroup, top: int) -> int:
    """Membership mask over ``[0, top]`` including the implicit tail."""
    f = s.frobenius
    mask = s.members
    if top > f:
        mask |= ((1 << (top + 1)) - 1) & ~((1 << (f + 1)) - 1)
    return mask & ((1 << (top + 1)) - 1)


def min_generators(s: Semigroup) -> list[int]:
    """Minimal generating set; only ``x <= f + m`` can be minimal."""
    m = s.multiplicity
    top = max(s.frobenius + m, 1)
    nz = _extended(s, top) & ~1
    window = (1 << (top + 1)) - 1
    sums = 0
    for a in bits(nz):
        if 2 * a > top:
            break
        sums |= (nz << a) & window
    return list(bits(nz & ~sums))


def is_med(s: Semigroup) -> bool:
    """Max embedding dimension test via the shift criterion.

    S is MED iff ``(S minus {0}) - m`` is closed under addition. This is
    deliberately independent of :func:`min_generators`.
    """
    m = s.multiplicity
    limit = s.frobenius - m
    if limit < 1:
        return True
    shifted = _extended(s, s.frobenius + 1) >> m
    return closure_violation(shifted, limit) is None


@dataclass(frozen=True, slots=True)
class InvariantProfile:
    f: int
    g: int
    m: int
    q: int
    n: int
    e: int
    med: bool


def profile(s: Semigroup) -> InvariantProfile:
    f = s.frobenius
    m = s.multiplicity
    g = s.genus
    n = max(f, 0) - g
    q = 1 if f < 0 else -(-(f + 1) // m)
    e = len(min_generators(s))
    return InvariantProfile(f=f, g=g, m=m, q=q, n=n, e=e, med=e == m)
