"""Compatibility decisions, forest partitions and separating edge sets."""

import random

import pytest
from hypothesis import given, settings
from treegen import cut_partition, labels_for, random_tree, tree_and_partition

from treepart.compat import (
    VerdictStatus,
    canonical_separating_edges,
    forest_partition,
    forest_partition_of_union,
    is_compatible,
    is_compatible_unrooted,
    is_compatible_via_closures,
    is_r_compatible,
    maximum_separating_edges,
    minimum_separating_edges,
    verify_separating_set,
)
from treepart.core import Hierarchy, Partition, validate_hierarchy
from treepart.errors import ForeignEdgeError, LeafSetMismatchError, NotCompatibleError
from treepart.io import parse_newick, parse_partition_line, serialize_newick
from treepart.oracle import (
    brute_compatible,
    brute_cut_table,
    brute_r_compatible,
    brute_separating_sets,
    enumerate_partitions,
    enumerate_rooted_trees,
)
from treepart.refine import find_overlap_violation
from treepart.tree import hierarchy_of, is_refinement, lca, root_at, root_on_edge, unroot


class TestDecide:
    def test_compatible(self, three_blocks_tree):
        p = parse_partition_line("a|b,c|d,e", "abcde")
        verdict = is_compatible(three_blocks_tree, p)
        assert verdict.status is VerdictStatus.COMPATIBLE
        assert verdict
        assert sorted(verdict.separating) == [1, 2, 5]
        assert verdict.refusal is None
        assert verdict.status.exit_code == 0

    def test_r_compatible_only(self):
        t = parse_newick("(a,b,c,d);")
        p = parse_partition_line("a,b|c,d", "abcd")
        verdict = is_compatible(t, p)
        assert verdict.status is VerdictStatus.R_COMPATIBLE_ONLY
        assert not verdict
        assert verdict.is_r_compatible
        assert verdict.unresolved == {(0, 0), (0, 1)}
        assert verdict.refined is None
        assert verdict.status.exit_code == 1

        refined = is_r_compatible(t, p).refined
        assert serialize_newick(refined) == "((a,b),(c,d));"
        assert is_compatible(refined, p)

    def test_incompatible(self):
        t = parse_newick("((a,c),(b,d));")
        verdict = is_r_compatible(t, parse_partition_line("a,b|c,d", "abcd"))
        assert verdict.status is VerdictStatus.INCOMPATIBLE
        assert not verdict.is_r_compatible
        assert verdict.refusal.edge == 4
        assert verdict.refined is None
        assert verdict.status.exit_code == 2

    def test_whole_leaf_set_needs_no_cut(self, three_blocks_tree):
        verdict = is_compatible(three_blocks_tree, Partition.whole("abcde"))
        assert verdict
        assert len(verdict.separating) == 0

    def test_compatible_tree_is_its_own_refinement(self, three_blocks_tree):
        p = parse_partition_line("a|b,c|d,e", "abcde")
        assert is_r_compatible(three_blocks_tree, p).refined is three_blocks_tree

    def test_leaf_sets_must_match(self, three_blocks_tree):
        with pytest.raises(LeafSetMismatchError):
            is_compatible(three_blocks_tree, parse_partition_line("a|b", "ab"))

    def test_closures(self):
        p = parse_partition_line("a1,a2|b1,b2", ["a1", "a2", "b1", "b2"])
        h = validate_hierarchy([["a1", "a2", "b1"]], p.ground, autocomplete=True)
        assert not is_compatible_via_closures(h, p)
        assert is_compatible_via_closures(Hierarchy.from_partition(p), p)

    def test_closure_counterexample_is_r_compatible(self):
        t = parse_newick("((a1,a2,b1),b2);")
        p = parse_partition_line("a1,a2|b1,b2", t.ground)
        verdict = is_r_compatible(t, p)
        assert verdict.status is VerdictStatus.R_COMPATIBLE_ONLY
        assert serialize_newick(verdict.refined) == "(((a1,a2),b1),b2);"

    def test_unrooted(self):
        t_bar = unroot(parse_newick("((a,b),(c,d));"))
        assert is_compatible_unrooted(t_bar, parse_partition_line("a,b|c,d", "abcd"))
        crossing = is_compatible_unrooted(t_bar, parse_partition_line("a,c|b,d", "abcd"))
        assert crossing.status is VerdictStatus.INCOMPATIBLE
        assert is_compatible_unrooted(t_bar, Partition.whole("abcd"))

    @given(tree_and_partition(min_leaves=3, max_leaves=8))
    def test_verdict_does_not_depend_on_the_root(self, case):
        t, p = case
        t_bar = unroot(t)
        rootings = [root_at(t_bar, v) for v in t_bar.inner_vertices]
        rootings += [root_on_edge(t_bar, u, v) for u, v in t_bar.edges]
        statuses = {is_compatible(r, p).is_compatible for r in rootings}
        assert statuses == {bool(is_compatible(t, p))}
        assert statuses == {bool(is_compatible_unrooted(t_bar, p))}

    def test_rooting_on_every_edge(self):
        t_bar = unroot(parse_newick("((a,b),(c,(d,e)));"))
        fits = parse_partition_line("a,b|c|d,e", "abcde")
        crossing = parse_partition_line("a,c|b,d,e", "abcde")
        for u, v in t_bar.edges:
            rooted = root_on_edge(t_bar, u, v)
            assert rooted.root == len(t_bar)
            assert is_compatible(rooted, fits)
            assert not is_compatible(rooted, crossing)

    @settings(max_examples=80)
    @given(tree_and_partition(max_leaves=7))
    def test_agrees_with_brute_force(self, case):
        t, p = case
        verdict = is_compatible(t, p)
        assert verdict.is_compatible == brute_compatible(t, p)
        assert verdict.is_compatible == is_compatible_via_closures(hierarchy_of(t), p)

    @given(tree_and_partition(max_leaves=9))
    def test_refinement_is_compatible(self, case):
        t, p = case
        verdict = is_r_compatible(t, p)
        if verdict.refined is not None:
            assert set(t.clusters) <= set(verdict.refined.clusters)
            assert is_compatible(verdict.refined, p)

class TestExhaustive:
    """Every tree against every partition on a small leaf set."""

    @staticmethod
    def sweep(labels):
        trees = list(enumerate_rooted_trees(labels))
        partitions = list(enumerate_partitions(labels))
        cuts = [brute_cut_table(t) for t in trees]
        binary = [(u, table) for u, table in zip(trees, cuts, strict=True) if u.is_binary]
        for t, table in zip(trees, cuts, strict=True):
            reachable = set().union(*(found for u, found in binary if is_refinement(u, t)))
            h = hierarchy_of(t)
            for p in partitions:
                every = table.get(p, [])
                yield t, p, h, every, p in reachable

    @staticmethod
    def check(t, p, h, every, r_compatible):
        verdict = is_r_compatible(t, p)
        assert verdict.is_compatible == bool(every)
        assert is_compatible(t, p).is_compatible == bool(every)
        assert verdict.is_r_compatible == r_compatible
        assert (find_overlap_violation(h, p) is None) == r_compatible
        if not every:
            return
        canonical = canonical_separating_edges(t, p)
        minimum = minimum_separating_edges(t, p)
        maximum = maximum_separating_edges(t, p)
        assert canonical.edges in every
        assert minimum.edges in every
        assert maximum.edges in every
        assert len(minimum) == min(len(cut) for cut in every) == len(p) - 1
        assert all(cut <= maximum.edges for cut in every)

    def test_four_leaves(self):
        checked = 0
        for case in self.sweep("abcd"):
            self.check(*case)
            checked += 1
        assert checked == 26 * 15

    def test_r_compatibility_on_four_leaves_matches_the_definition(self):
        for t in enumerate_rooted_trees("abcd"):
            for p in enumerate_partitions("abcd"):
                assert is_r_compatible(t, p).is_r_compatible == brute_r_compatible(t, p)

    def test_five_leaves(self):
        checked = 0
        for case in self.sweep("abcde"):
            self.check(*case)
            checked += 1
        assert checked == 236 * 52

    @pytest.mark.slow
    def test_six_leaves(self):
        checked = 0
        for case in self.sweep("abcdef"):
            self.check(*case)
            checked += 1
        assert checked == 2752 * 203


class TestForestPartition:
    def test_two_cuts(self, two_cherries_tree):
        assert forest_partition(two_cherries_tree, [1, 6]).format() == "a,b,c|d,e,f|g"
        assert forest_partition(two_cherries_tree, [3, 6]).format() == "a,g|b,c|d,e,f"

    def test_no_cut_and_every_cut(self, two_cherries_tree):
        t = two_cherries_tree
        assert forest_partition(t, []) == Partition.whole(t.ground)
        assert forest_partition(t, t.edges) == Partition.singletons(t.ground)

    @pytest.mark.parametrize("edge", [0, 12, -1, "v1"])
    def test_foreign_edges(self, two_cherries_tree, edge):
        with pytest.raises(ForeignEdgeError):
            forest_partition(two_cherries_tree, [edge])

    def test_unrooted_edges(self):
        t_bar = unroot(parse_newick("((a,b),(c,d));"))
        inner = next(
            (u, v) for u, v in t_bar.edges if not t_bar.is_leaf(u) and not t_bar.is_leaf(v)
        )
        assert forest_partition(t_bar, [inner]).format() == "a,b|c,d"
        assert forest_partition(t_bar, [inner[::-1]]).format() == "a,b|c,d"
        with pytest.raises(ForeignEdgeError):
            forest_partition(t_bar, [(0, 0)])

    def test_union_is_the_meet(self, two_cherries_tree):
        t = two_cherries_tree
        assert forest_partition_of_union(t, [1], [6]) == forest_partition(t, [1, 6])

    def test_verify(self, two_cherries_tree):
        p = parse_partition_line("a,b,c|d,e,f|g", two_cherries_tree.ground)
        assert verify_separating_set(two_cherries_tree, p, [1, 6])
        assert not verify_separating_set(two_cherries_tree, p, [1])


class TestSeparatingEdges:
    def test_three_blocks(self, three_blocks_tree):
        t = three_blocks_tree
        p = parse_partition_line("a|b,c|d,e", "abcde")
        assert sorted(canonical_separating_edges(t, p)) == [1, 2, 5]
        assert sorted(minimum_separating_edges(t, p)) == [2, 5]
        assert sorted(maximum_separating_edges(t, p)) == [1, 2, 5]

    def test_whole_leaf_set(self, three_blocks_tree):
        whole = Partition.whole("abcde")
        assert len(minimum_separating_edges(three_blocks_tree, whole)) == 0
        assert len(maximum_separating_edges(three_blocks_tree, whole)) == 0

    def test_singletons_cut_everything(self, two_cherries_tree):
        t = two_cherries_tree
        p = Partition.singletons(t.ground)
        assert set(maximum_separating_edges(t, p)) == set(t.edges)
        assert len(minimum_separating_edges(t, p)) == len(p) - 1

    @pytest.mark.parametrize(
        ("tree", "partition"),
        [("(a,b,c,d);", "a,b|c,d"), ("((a,c),(b,d));", "a,b|c,d")],
    )
    def test_not_compatible(self, tree, partition):
        t = parse_newick(tree)
        p = parse_partition_line(partition, t.ground)
        for build in (
            canonical_separating_edges,
            minimum_separating_edges,
            maximum_separating_edges,
        ):
            with pytest.raises(NotCompatibleError):
                build(t, p)

    @settings(max_examples=60)
    @given(tree_and_partition(max_leaves=6))
    def test_against_every_separating_set(self, case):
        t, p = case
        if not is_compatible(t, p):
            return
        every = brute_separating_sets(t, p)
        canonical = canonical_separating_edges(t, p)
        minimum = minimum_separating_edges(t, p)
        maximum = maximum_separating_edges(t, p)
        assert canonical.edges in every
        assert minimum.edges in every
        assert maximum.edges in every
        assert len(minimum) == len(p) - 1
        assert min(len(h) for h in every) == len(p) - 1
        assert all(h <= maximum.edges for h in every)

    @given(tree_and_partition(max_leaves=12))
    def test_canonical_size(self, case):
        t, p = case
        if not is_compatible(t, p):
            return
        canonical = canonical_separating_edges(t, p)
        at_root = any(lca(t.lca_index, block) == t.root for block in p.blocks)
        assert len(canonical) in {len(p) - 1, len(p)}
        assert (len(canonical) == len(p) - 1) == at_root

    def test_canonical_size_at_the_root(self, three_blocks_tree):
        t = three_blocks_tree
        assert len(canonical_separating_edges(t, parse_partition_line("a,b,c|d,e", "abcde"))) == 1
        assert len(canonical_separating_edges(t, parse_partition_line("b,c|a,d,e", "abcde"))) == 1
        assert len(canonical_separating_edges(t, parse_partition_line("a|b,c|d,e", "abcde"))) == 3

    def test_large_random_instances_verify(self):
        rng = random.Random(7)
        for n in (50, 200, 1000):
            t = random_tree(labels_for(n), rng)
            p = cut_partition(t, rng)
            for build in (
                canonical_separating_edges,
                minimum_separating_edges,
                maximum_separating_edges,
            ):
                assert verify_separating_set(t, p, build(t, p))
