import pytest
from hypothesis import given
from treegen import partition_pairs

from treepart.core import (
    Partition,
    join,
    locally_comparable,
    meet,
    meet_all,
    refines,
    validate_partition,
)
from treepart.errors import EmptySystemError, GroundSetMismatchError


def part(text: str, ground: str = "abcde") -> Partition:
    return validate_partition([block.split(",") for block in text.split("|")], ground)


def test_meet_of_overlapping_pair():
    assert meet(part("a,b|c|d,e"), part("a|b,c|d,e")) == part("a|b|c|d,e")


def test_meet_of_crossing_pair_is_singletons():
    first = part("a,b|c,d", "abcd")
    second = part("a,c|b,d", "abcd")
    assert meet(first, second) == Partition.singletons("abcd")


def test_join_merges_chains_of_intersecting_blocks():
    assert join(part("a,b|c|d,e"), part("a|b,c|d,e")) == part("a,b,c|d,e")


def test_refines_and_locally_comparable():
    fine = part("a|b|c|d,e")
    coarse = part("a,b,c|d,e")
    assert refines(fine, coarse)
    assert not refines(coarse, fine)
    assert locally_comparable(fine, coarse)
    assert not locally_comparable(part("a,b|c|d,e"), part("a|b,c|d,e"))


def test_locally_comparable_pairs_are_not_always_ordered():
    first = part("a,b|c|d|e")
    second = part("a|b|c|d,e")
    assert locally_comparable(first, second)
    assert not refines(first, second)
    assert not refines(second, first)


def test_meet_all():
    members = [part("a,b,c|d,e"), part("a,b|c,d,e"), part("a|b,c,d,e")]
    assert meet_all(members) == part("a|b|c|d,e")
    with pytest.raises(EmptySystemError):
        meet_all([])


def test_ground_sets_must_match():
    with pytest.raises(GroundSetMismatchError):
        meet(part("a|b,c", "abc"), part("a|b,c,d", "abcd"))


@given(partition_pairs())
def test_meet_is_the_greatest_lower_bound(pair):
    first, second = pair
    lower = meet(first, second)
    assert lower == meet(second, first)
    assert refines(lower, first)
    assert refines(lower, second)
    assert meet(lower, first) == lower


@given(partition_pairs())
def test_join_is_the_least_upper_bound(pair):
    first, second = pair
    upper = join(first, second)
    assert upper == join(second, first)
    assert refines(first, upper)
    assert refines(second, upper)
    assert join(first, first) == first


@given(partition_pairs())
def test_absorption(pair):
    first, second = pair
    assert meet(first, join(first, second)) == first
    assert join(first, meet(first, second)) == first
