from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from plethysm.errors import DoesNotFitRectangle, EntryOutOfRange, NotColumnStandard, ParseError
from plethysm.shapes import (
    Partition,
    Tableau,
    classify_tableau,
    column_place_permutations,
    complement_partition,
    complement_tableau,
    conjugate,
    count_ssyt,
    enumerate_tableaux,
    permutation_sign,
    surplus,
)

partitions = st.lists(st.integers(1, 5), max_size=4).map(lambda xs: Partition(sorted(xs, reverse=True)))


def hook_content_count(shape, n) -> int:
    """Number of SSYT with entries <= n, by the hook-content formula."""
    conj = conjugate(shape)
    value = Fraction(1)
    for i, row in enumerate(shape):
        for j in range(row):
            hook = (row - j - 1) + (conj[j] - i - 1) + 1
            value *= Fraction(n + j - i, hook)
    return int(value)


@given(partitions)
def test_conjugate_is_an_involution(shape):
    assert conjugate(conjugate(shape)) == shape
    assert conjugate(shape).size == shape.size


@given(partitions, st.integers(1, 4))
def test_ssyt_count_matches_hook_content(shape, n):
    assert count_ssyt(shape, n) == hook_content_count(shape, n)
    assert len(enumerate_tableaux(shape, n)) == hook_content_count(shape, n)


@given(partitions, st.integers(0, 3), st.integers(0, 3))
def test_complement_partition_is_an_involution(shape, extra_d, extra_s):
    d = len(shape) + extra_d
    s = (shape[0] if shape else 0) + extra_s
    comp = complement_partition(shape, d, s)
    assert comp.size + shape.size == d * s
    assert complement_partition(comp, d, s) == shape


def test_complement_rejects_shapes_outside_the_rectangle():
    with pytest.raises(DoesNotFitRectangle):
        complement_partition((3, 1), 1, 3)
    with pytest.raises(DoesNotFitRectangle):
        complement_partition((3, 1), 2, 2)


def test_partition_parsing():
    assert Partition.parse("3,1^2") == (3, 1, 1)
    assert Partition.parse("") == ()
    with pytest.raises(ParseError):
        Partition.parse("1,3")
    with pytest.raises(ParseError):
        Partition.parse("a")


def test_tableau_text_roundtrip_and_classes():
    t = Tableau.parse("1 1 2 / 2")
    assert str(t) == "1 1 2 / 2"
    assert t.shape == (3, 1)
    assert t.columns == ((1, 2), (1,), (2,))
    assert classify_tableau(t).semistandard
    bad = Tableau.parse("2 1 / 1")
    assert not classify_tableau(bad).column_standard


def test_complement_tableau_example():
    t = Tableau.parse("1 1 2 / 2")
    c = complement_tableau(t, 3, 4)
    assert str(c) == "1 1 2 3 / 2 3 3 / 3"
    assert surplus(t) == 1
    with pytest.raises(NotColumnStandard):
        complement_tableau(Tableau.parse("2 / 1"), 3, 4)
    with pytest.raises(EntryOutOfRange):
        complement_tableau(Tableau.parse("4"), 3, 4)


@given(partitions.filter(lambda s: len(s) <= 3 and (not s or s[0] <= 3)), st.data())
def test_complement_tableau_is_an_involution(shape, data):
    tabs = enumerate_tableaux(shape, 3, "CSYT")
    if not tabs:
        return
    t = data.draw(st.sampled_from(tabs))
    assert complement_tableau(complement_tableau(t, 3, 3), 3, 3) == t


@given(st.permutations(range(6)), st.permutations(range(6)))
def test_permutation_sign_is_multiplicative(a, b):
    composed = [a[i] for i in b]
    assert permutation_sign(composed) == permutation_sign(a) * permutation_sign(b)


def test_column_place_permutations_count_and_signs():
    perms = list(column_place_permutations(Partition((2, 2, 1))))
    assert len(perms) == 6 * 2
    assert sum(p.sign for p in perms) == 0
