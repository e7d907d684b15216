import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from numsg.core import (
    NATURALS,
    bits,
    build,
    closure_violation,
    fbar,
    from_mask,
    is_med,
    mask_of,
    min_generators,
    profile,
)
from numsg.enumeration import iter_by_frobenius
from numsg.errors import FrobeniusViolated, InvalidSemigroup, NotClosed


def test_build_smallest():
    s = build(1, [])
    assert s.elements(4) == [0, 2, 3, 4]
    assert str(s) == "{0,2->}"


def test_build_f30_example():
    s = build(30, {12, 16, 24, 28})
    p = profile(s)
    assert (p.f, p.m, p.q, p.n, p.g) == (30, 12, 3, 4, 26)


def test_build_not_closed():
    with pytest.raises(NotClosed):
        build(7, {3, 4})


def test_build_rejects_frobenius_and_range():
    with pytest.raises(FrobeniusViolated):
        build(7, {7})
    with pytest.raises(InvalidSemigroup):
        build(7, {9})
    with pytest.raises(InvalidSemigroup):
        build(0, [])


def test_from_mask_validation():
    with pytest.raises(InvalidSemigroup):
        from_mask(3, 0b1000)  # 0 missing
    with pytest.raises(InvalidSemigroup):
        from_mask(3, 0b11001)  # 3 present
    assert from_mask(3, 0b10101).elements(5) == [0, 2, 4, 5]


def test_profile_depth_one():
    p = profile(build(9, []))
    assert (p.q, p.g, p.n, p.m) == (1, 9, 0, 10)


def test_profile_f2():
    p = profile(build(2, []))
    assert (p.f, p.m, p.q, p.g, p.n) == (2, 3, 1, 2, 0)


def test_naturals():
    assert 0 in NATURALS and 1 in NATURALS
    assert NATURALS.genus == 0
    assert NATURALS.multiplicity == 1
    assert min_generators(NATURALS) == [1]
    assert profile(NATURALS).q == 1


@pytest.mark.parametrize(
    "f, small, gens",
    [(1, [], [2, 3]), (2, [], [3, 4, 5]), (7, [4, 5, 6], [4, 5, 6])],
)
def test_min_generators(f, small, gens):
    assert min_generators(build(f, small)) == gens


@pytest.mark.parametrize("f, small, expected", [(2, [], True), (1, [], True), (7, [4, 5, 6], False)])
def test_is_med_examples(f, small, expected):
    assert is_med(build(f, small)) is expected


def test_gaps_and_membership():
    s = build(7, [3, 5, 6])
    assert s.gaps() == [1, 2, 4, 7]
    assert 100 in s and 7 not in s
    assert s.small_elements() == [3, 5, 6]
    assert s.genus == 4


def test_closure_violation():
    assert closure_violation(mask_of([0, 3, 5, 6]), 7) is None
    assert closure_violation(mask_of([0, 3, 4]), 7) == 6  # 3 + 3
    assert list(bits(0b10110)) == [1, 2, 4]


def test_fbar():
    assert [fbar(f) for f in (1, 2, 3, 7, 8, 30, 31)] == [0, 0, 1, 3, 3, 14, 15]


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=1, max_value=16), st.data())
def test_profile_identities(f, data):
    semigroups = iter_by_frobenius(f)
    s = data.draw(st.sampled_from(semigroups))
    p = profile(s)
    assert p.g + p.n == f
    assert p.n <= fbar(f)
    assert 2 <= p.e <= p.m
    assert p.med == (p.e == p.m) == is_med(s)
    assert build(f, s.small_elements()) == s
    assert (p.q - 1) * p.m <= f < p.q * p.m
