"""Partition systems on a fixed tree and the refinement search."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from treegen import cut_partition, labels_for, random_partition, random_tree, trees

from treepart.compat import VerdictStatus, is_compatible
from treepart.core import Partition, join, locally_comparable
from treepart.errors import (
    BudgetExceededError,
    EmptySystemError,
    GroundSetMismatchError,
    LeafSetMismatchError,
    SettingsError,
    TooFewLeavesError,
)
from treepart.io import parse_newick, parse_partition_document, parse_partition_line
from treepart.oracle import brute_compat_tp, brute_exist_tp
from treepart.systems import (
    PartitionSystem,
    binary_shapes,
    compat_tp,
    count_binary_refinements,
    double_factorial,
    enumerate_binary_refinements,
    exist_tp,
    get_settings,
    meet_system,
    resolution_stats,
    system_compatible_fixed,
)
from treepart.tree import RootedTree, is_refinement


@pytest.fixture
def overlapping_pair(sample_data):
    return parse_partition_document((sample_data / "overlapping_pair.system").read_text())


@pytest.fixture
def crossing_pair(sample_data):
    return parse_partition_document((sample_data / "crossing.system").read_text())


class TestFixedTree:
    def test_every_member_fits(self, three_blocks_tree):
        members = parse_partition_document("a|b,c|d,e\na,b,c|d,e\n").partitions
        verdict = system_compatible_fixed(three_blocks_tree, members)
        assert verdict
        assert len(verdict.witnesses) == 2

    def test_one_member_misses(self, three_blocks_tree):
        members = parse_partition_document("a|b,c|d,e\na,d|b,c,e\n").partitions
        verdict = system_compatible_fixed(three_blocks_tree, members)
        assert not verdict
        assert [bool(w) for w in verdict.witnesses] == [True, False]

    def test_empty_system_fits(self, three_blocks_tree):
        assert system_compatible_fixed(three_blocks_tree, [])

    def test_leaf_sets_must_match(self, three_blocks_tree):
        with pytest.raises(LeafSetMismatchError):
            system_compatible_fixed(three_blocks_tree, [Partition.whole("abc")])

    def test_meet(self, crossing_pair):
        assert meet_system(crossing_pair.partitions) == Partition.singletons("abcd")
        with pytest.raises(EmptySystemError):
            meet_system([])


class TestMeetAndJoin:
    def test_meet_of_compatible_members_is_compatible(self):
        rng = random.Random(5)
        for _ in range(1000):
            t = random_tree(labels_for(rng.randint(2, 30)), rng)
            members = [cut_partition(t, rng) for _ in range(rng.randint(1, 4))]
            assert system_compatible_fixed(t, members)
            assert is_compatible(t, meet_system(members))

    def test_meet_can_fit_when_no_member_does(self, crossing_pair):
        star = RootedTree.star("abcd")
        members = crossing_pair.partitions
        assert not any(is_compatible(star, p) for p in members)
        assert meet_system(members) == Partition.singletons("abcd")
        assert is_compatible(star, meet_system(members))

    def test_join_of_compatible_members_can_fail(self):
        t = parse_newick("((a1,b1),(a2,b2));")
        first = parse_partition_line("a1,a2|b1|b2", t.ground)
        second = parse_partition_line("a1|a2|b1,b2", t.ground)
        assert is_compatible(t, first)
        assert is_compatible(t, second)
        assert locally_comparable(first, second)

        upper = join(first, second)
        assert upper == parse_partition_line("a1,a2|b1,b2", t.ground)
        assert is_compatible(t, upper).status is VerdictStatus.INCOMPATIBLE

    def test_system_of_mixed_grounds(self):
        with pytest.raises(GroundSetMismatchError):
            PartitionSystem.of([Partition.whole("abc"), Partition.whole("abcd")])
        system = PartitionSystem.of([Partition.whole("abc")])
        assert system.ground == ("a", "b", "c")
        assert len(system) == 1
        assert system[0] == Partition.whole("abc")


class TestCounting:
    @pytest.mark.parametrize(
        ("n", "expected"), [(-1, 1), (0, 1), (1, 1), (5, 15), (7, 105), (21, 13749310575)]
    )
    def test_double_factorial(self, n, expected):
        assert double_factorial(n) == expected

    def test_double_factorial_below_minus_one(self):
        with pytest.raises(ValueError, match="undefined"):
            double_factorial(-3)

    @pytest.mark.parametrize(("n", "expected"), [(2, 1), (3, 3), (4, 15), (12, 13749310575)])
    def test_stars(self, n, expected):
        assert count_binary_refinements(RootedTree.star(labels_for(n))) == expected

    def test_only_wide_vertices_count(self):
        assert count_binary_refinements(parse_newick("((a,b,c,d),e);")) == 15
        assert count_binary_refinements(parse_newick("((a,b,c),(d,e,f));")) == 9
        assert count_binary_refinements(parse_newick("((a,b),c);")) == 1

    @pytest.mark.parametrize("d", [2, 3, 4, 5, 6])
    def test_binary_shapes(self, d):
        shapes = list(binary_shapes(d))
        assert len(shapes) == double_factorial(2 * d - 3)
        for shape in shapes:
            assert len(shape) == 2 * d - 1
            assert sum(1 for parent in shape.values() if parent == -1) == 1

    def test_resolution(self):
        binary = resolution_stats(parse_newick("((a,b),(c,d));"))
        assert binary.resolution == 1
        assert binary.excess == 0
        assert binary.per_vertex == {}

        star = resolution_stats(RootedTree.star("abcd"))
        assert star.resolution == 0
        assert star.excess == 2
        assert star.per_vertex == {0: 2}

        wide = resolution_stats(parse_newick("((a,b,c,d),e);"))
        assert wide.resolution == Fraction(1, 3)
        assert wide.per_vertex == {1: 2}

    def test_resolution_needs_three_leaves(self):
        with pytest.raises(TooFewLeavesError):
            resolution_stats(parse_newick("(a,b);"))


class TestBinaryRefinements:
    def test_binary_tree_yields_itself(self):
        t = parse_newick("((a,b),(c,d));")
        assert list(enumerate_binary_refinements(t)) == [t]

    @pytest.mark.parametrize("newick", ["(a,b,c,d);", "((a,b,c,d),e);", "((a,b,c),(d,e,f));"])
    def test_each_refinement_once(self, newick):
        t = parse_newick(newick)
        found = list(enumerate_binary_refinements(t))
        assert len(found) == count_binary_refinements(t)
        assert len({frozenset(u.clusters) for u in found}) == len(found)
        for u in found:
            assert u.is_binary
            assert is_refinement(u, t)


class TestCompatTp:
    def test_overlapping_pair(self, sample_data, overlapping_pair):
        t = parse_newick((sample_data / "wide_subtree.nwk").read_text())
        members = overlapping_pair.partitions
        assert not system_compatible_fixed(t, members)
        found = compat_tp(t, members)
        assert found is not None
        assert found.is_binary
        assert is_refinement(found, t)
        assert system_compatible_fixed(found, members)

    @pytest.mark.parametrize("prune", [True, False])
    def test_crossing_pair_has_no_tree(self, crossing_pair, prune):
        star = RootedTree.star("abcd")
        assert compat_tp(star, crossing_pair.partitions, prune=prune) is None

    def test_fitting_tree_is_resolved(self, three_blocks_tree):
        members = parse_partition_document("a|b,c|d,e\n").partitions
        found = compat_tp(three_blocks_tree, members)
        assert found is not three_blocks_tree
        assert found.is_binary
        assert is_refinement(found, three_blocks_tree)
        assert system_compatible_fixed(found, members)

    def test_fitting_star_is_resolved(self):
        star = RootedTree.star("abcde")
        found = compat_tp(star, [Partition.whole("abcde")])
        assert found.is_binary
        assert found.ground == star.ground
        assert system_compatible_fixed(found, [Partition.whole("abcde")])

    def test_fitting_binary_tree_is_returned_as_is(self):
        t = parse_newick("((a,b),(c,d));")
        members = parse_partition_document("a,b|c,d\n").partitions
        assert compat_tp(t, members) is t

    def test_pruning_refused_member(self):
        t = parse_newick("((a,c),(b,d));")
        members = parse_partition_document("a,b|c,d\n").partitions
        assert compat_tp(t, members) is None
        assert compat_tp(t, members, prune=False) is None

    def test_budget_is_checked_first(self):
        star = RootedTree.star(labels_for(12))
        with pytest.raises(BudgetExceededError) as info:
            compat_tp(star, [Partition.whole(star.ground)], budget=1)
        assert info.value.count == 13749310575
        assert info.value.budget == 1
        assert "13749310575" in str(info.value)

    def test_budget_from_environment(self, monkeypatch):
        monkeypatch.setenv("TREEPART_BUDGET", "14")
        get_settings.cache_clear()
        with pytest.raises(BudgetExceededError):
            compat_tp(RootedTree.star("abcd"), [Partition.whole("abcd")])
        assert compat_tp(RootedTree.star("abcd"), [Partition.whole("abcd")], budget=15)

    def test_leaf_sets_must_match(self):
        with pytest.raises(LeafSetMismatchError):
            compat_tp(RootedTree.star("abcd"), [Partition.whole("abc")])

    @settings(max_examples=40)
    @given(trees(min_leaves=3, max_leaves=4), st.integers(1, 3), st.randoms(use_true_random=False))
    def test_agrees_with_brute_force(self, t, k, rnd):
        members = [random_partition(list(t.ground), rnd) for _ in range(k)]
        found = compat_tp(t, members)
        assert (found is not None) == brute_compat_tp(t, members)
        assert (found is not None) == (compat_tp(t, members, prune=False) is not None)
        if found is not None:
            assert is_refinement(found, t)
            assert system_compatible_fixed(found, members)

    @pytest.mark.slow
    @settings(max_examples=25)
    @given(trees(min_leaves=5, max_leaves=5), st.integers(2, 3), st.randoms(use_true_random=False))
    def test_agrees_with_brute_force_on_five_leaves(self, t, k, rnd):
        members = [random_partition(list(t.ground), rnd) for _ in range(k)]
        assert (compat_tp(t, members) is not None) == brute_compat_tp(t, members)


class TestExistTp:
    def test_whole_leaf_set_fits_a_resolved_star(self):
        found = exist_tp([Partition.whole("abcd")])
        assert found.is_binary
        assert found.ground == ("a", "b", "c", "d")

    def test_cherries(self):
        members = parse_partition_document("a,b|c,d\n").partitions
        found = exist_tp(members)
        assert found.is_binary
        assert system_compatible_fixed(found, members)

    def test_crossing_pair(self, crossing_pair):
        assert exist_tp(crossing_pair.partitions) is None

    def test_empty_system(self):
        with pytest.raises(EmptySystemError):
            exist_tp([])
        found = exist_tp([], ground="abc")
        assert found.is_binary
        assert found.ground == ("a", "b", "c")

    @settings(max_examples=30)
    @given(st.integers(3, 4), st.integers(1, 3), st.randoms(use_true_random=False))
    def test_agrees_with_brute_force(self, n, k, rnd):
        labels = labels_for(n)
        members = [random_partition(labels, rnd) for _ in range(k)]
        found = exist_tp(members)
        assert (found is None) == (brute_exist_tp(members) is None)


class TestSettings:
    def test_defaults(self):
        s = get_settings()
        assert s.budget == 1_000_000
        assert s.oracle_max_leaves == 6

    def test_environment_override(self, monkeypatch):
        monkeypatch.setenv("TREEPART_BUDGET", "500")
        get_settings.cache_clear()
        assert get_settings().budget == 500

    @pytest.mark.parametrize("value", ["0", "-3", "many"])
    def test_invalid_value(self, monkeypatch, value):
        monkeypatch.setenv("TREEPART_BUDGET", value)
        get_settings.cache_clear()
        with pytest.raises(SettingsError):
            get_settings()
