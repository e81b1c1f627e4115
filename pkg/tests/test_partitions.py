import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _util import count_syt
from polysubspace import (BoundsMismatch, Partition, PivotSequence, check_conjugate_complement,
                          complement, conjugate, minus_pivots, plus_pivots, wronski_degree)
from polysubspace.partitions import bounded_partitions, from_minus_pivots, from_plus_pivots


@st.composite
def bounded(draw):
    k = draw(st.integers(1, 5))
    l = draw(st.integers(1, 5))
    parts = sorted(draw(st.lists(st.integers(0, l), min_size=k, max_size=k)), reverse=True)
    return Partition(tuple(parts), k, l)


def test_conjugate_examples():
    assert conjugate(Partition((2, 1), 2, 2)).parts == (2, 1)
    assert conjugate(Partition((), 2, 3)).parts == ()
    rect = conjugate(Partition((3, 3), 2, 3))
    assert rect.parts == (2, 2, 2) and (rect.k, rect.l) == (3, 2)


def test_pivot_examples():
    lam = Partition((2, 1), 2, 2)
    assert tuple(plus_pivots(lam)) == (0, 2)
    assert tuple(minus_pivots(lam)) == (1, 3)
    empty = Partition((), 2, 2)
    assert tuple(plus_pivots(empty)) == (2, 3)
    assert tuple(minus_pivots(empty)) == (0, 1)
    rect = Partition((2, 2), 2, 2)
    assert tuple(plus_pivots(rect)) == (0, 1)
    assert tuple(minus_pivots(rect)) == (2, 3)


def test_complement_examples():
    assert complement(Partition((2, 1), 2, 2)).parts == (1,)
    assert complement(Partition((), 2, 2)).parts == (2, 2)
    assert complement(Partition((3, 3), 2, 3)).parts == ()


def test_conjugate_complement_examples():
    assert check_conjugate_complement(Partition((2, 1), 2, 2), Partition((2, 1), 2, 2))
    assert check_conjugate_complement(Partition((), 2, 2), Partition((), 2, 2))
    assert not check_conjugate_complement(Partition((2, 1), 2, 2), Partition((1, 1), 2, 2))


def test_conjugate_complement_needs_transposed_box():
    with pytest.raises(BoundsMismatch):
        check_conjugate_complement(Partition((1,), 2, 3), Partition((1,), 2, 3))


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((1, 2), 2, 2)
    with pytest.raises(ValueError):
        Partition((3,), 2, 2)
    with pytest.raises(ValueError):
        PivotSequence((1, 1), 2, 2)


def test_wronski_degree_examples():
    assert wronski_degree(2, 2) == 2
    assert wronski_degree(2, 3) == 5
    assert all(wronski_degree(1, l) == 1 for l in range(1, 8))


@pytest.mark.parametrize("k,l", [(k, l) for k in range(1, 17) for l in range(1, 17) if k * l <= 16])
def test_wronski_degree_counts_tableaux(k, l):
    assert wronski_degree(k, l) == count_syt((l,) * k)


@settings(max_examples=200, deadline=None)
@given(bounded())
def test_involutions(lam):
    assert conjugate(conjugate(lam)) == lam
    assert complement(complement(lam)) == lam
    assert from_plus_pivots(plus_pivots(lam)) == lam
    assert from_minus_pivots(minus_pivots(lam)) == lam


@settings(max_examples=200, deadline=None)
@given(bounded())
def test_pivot_relations(lam):
    k, n = lam.k, lam.n
    plus, minus = plus_pivots(lam), minus_pivots(lam)
    for i in range(k):
        assert minus[i] == n - plus[k - 1 - i]
    assert conjugate(lam).total == lam.total
    assert complement(lam).total == k * lam.l - lam.total
    # the conjugate partition is the partner for duality
    assert check_conjugate_complement(lam, conjugate(lam))


@pytest.mark.parametrize("k,l", [(1, 1), (2, 2), (2, 3), (3, 3), (3, 4)])
def test_bounded_partitions_enumeration(k, l):
    from math import comb

    parts = list(bounded_partitions(k, l))
    assert len(parts) == len(set(parts)) == comb(k + l, k)
