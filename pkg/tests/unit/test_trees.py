"""Rooted and unrooted trees, lca queries and tree/hierarchy conversion."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from treegen import labels_for, random_tree, trees

from treepart.core import validate_hierarchy
from treepart.errors import (
    DuplicateLeafError,
    EmptyArgumentError,
    EmptyTreeError,
    ForeignEdgeError,
    GroundSetTooSmallError,
    LeafSetMismatchError,
    MalformedTreeError,
    NotInnerVertexError,
    TooFewLeavesError,
    UnaryInnerVertexError,
    UnknownVertexError,
)
from treepart.io import parse_newick, serialize_newick
from treepart.oracle import walk_up_lca
from treepart.tree import (
    BLOCK,
    RootedTree,
    UnrootedTree,
    build_lca_index,
    contract_edge,
    default_root,
    hierarchy_of,
    is_refinement,
    lca,
    root_at,
    root_on_edge,
    same_topology,
    tree_of,
    unroot,
)


class TestRootedTree:
    def test_from_parents(self):
        t = RootedTree.from_parents([-1, 0, 0, 2, 2], [None, "a", None, "b", "c"])
        assert t.root == 0
        assert t.leaves == (1, 3, 4)
        assert t.ground == ("a", "b", "c")
        assert t.inner_vertices == (0, 2)
        assert t.edges == (1, 2, 3, 4)
        assert t.clusters[2] == frozenset("bc")
        assert t.leaves_below(2) == frozenset("bc")
        assert t.is_ancestor(2, 4)
        assert not t.is_ancestor(1, 4)
        assert t.is_binary

    @pytest.mark.parametrize(
        ("parents", "labels", "error"),
        [
            ([], [], EmptyTreeError),
            ([-1, -1, 0], [None, "a", "b"], MalformedTreeError),
            ([-1, 0, 7], [None, "a", "b"], MalformedTreeError),
            ([-1, 0, 0], [None, "a", None], MalformedTreeError),
            ([-1, 0, 0], ["x", "a", "b"], MalformedTreeError),
            ([-1, 0, 1, 1], [None, None, "a", "b"], UnaryInnerVertexError),
            ([-1, 0, 0], [None, "a", "a"], DuplicateLeafError),
            ([-1, 2, 1, 0, 0], [None, None, None, "a", "b"], MalformedTreeError),
        ],
    )
    def test_from_parents_rejects(self, parents, labels, error):
        with pytest.raises(error):
            RootedTree.from_parents(parents, labels)

    def test_single_leaf_is_too_small(self):
        with pytest.raises(GroundSetTooSmallError):
            RootedTree.star("a")

    def test_star(self):
        t = RootedTree.star("dcba")
        assert len(t) == 5
        assert t.ground == ("a", "b", "c", "d")
        assert t.children[t.root] == (1, 2, 3, 4)

    def test_canonical_numbering(self):
        t = RootedTree.from_parents([-1, 0, 1, 1, 0], [None, None, "e", "d", "a"])
        canonical = t.canonical()
        assert canonical.root == 0
        assert canonical.labels == (None, "a", None, "d", "e")
        assert same_topology(canonical, t)
        assert canonical.canonical() is canonical


class TestUnrootedTree:
    def test_from_edges(self):
        t_bar = UnrootedTree.from_edges(
            6, [(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)], [None, "a", "b", None, "c", "d"]
        )
        assert t_bar.ground == ("a", "b", "c", "d")
        assert t_bar.inner_vertices == (0, 3)
        assert t_bar.edges == ((0, 1), (0, 2), (0, 3), (3, 4), (3, 5))
        assert t_bar.check_edge((3, 0)) == (0, 3)
        with pytest.raises(ForeignEdgeError):
            t_bar.check_edge((1, 2))

    @pytest.mark.parametrize(
        ("n", "edges", "labels", "error"),
        [
            (0, [], [], EmptyTreeError),
            (4, [(0, 1), (0, 2)], [None, "a", "b", "c"], MalformedTreeError),
            (5, [(0, 1), (0, 2), (1, 3), (1, 4)], [None, None, "a", "b", "c"], MalformedTreeError),
            (3, [(0, 1), (0, 2)], [None, "a", "b"], MalformedTreeError),
            (4, [(0, 1), (0, 2), (0, 3)], [None, "a", "a", "b"], DuplicateLeafError),
            (2, [(0, 1)], ["a", "b"], TooFewLeavesError),
        ],
    )
    def test_from_edges_rejects(self, n, edges, labels, error):
        with pytest.raises(error):
            UnrootedTree.from_edges(n, edges, labels)

    def test_unroot_suppresses_binary_root(self):
        t_bar = unroot(parse_newick("((a,b),(c,d));"))
        assert len(t_bar) == 6
        assert len(t_bar.edges) == 5
        assert sorted(len(nbrs) for nbrs in t_bar.adjacency) == [1, 1, 1, 1, 3, 3]

    def test_unroot_keeps_wide_root(self):
        t = parse_newick("(a,b,(c,d));")
        t_bar = unroot(t)
        assert len(t_bar) == len(t)

    def test_unroot_needs_three_leaves(self):
        with pytest.raises(TooFewLeavesError):
            unroot(parse_newick("(a,b);"))

    def test_root_at(self):
        t_bar = unroot(parse_newick("(a,b,(c,d));"))
        v = default_root(t_bar)
        assert v in t_bar.adjacency[t_bar.leaf_of["a"]]
        t = root_at(t_bar)
        assert t.root == v
        assert len(t) == len(t_bar)
        with pytest.raises(NotInnerVertexError):
            root_at(t_bar, t_bar.leaf_of["a"])
        with pytest.raises(UnknownVertexError):
            root_at(t_bar, 99)

    def test_root_on_edge_keeps_ids(self):
        t_bar = unroot(parse_newick("(a,b,(c,d));"))
        u, v = next(e for e in t_bar.edges if not t_bar.is_leaf(e[0]) and not t_bar.is_leaf(e[1]))
        t = root_on_edge(t_bar, u, v)
        assert t.root == len(t_bar)
        assert set(t.children[t.root]) == {u, v}
        assert t.labels[: len(t_bar)] == t_bar.labels
        assert serialize_newick(t) == "((a,b),(c,d));"

    @given(trees(min_leaves=3))
    def test_rooting_and_unrooting_keep_the_leaf_set(self, t):
        t_bar = unroot(t)
        assert root_at(t_bar).ground == t.ground


class TestLca:
    def test_lca_of_labels(self, three_blocks_tree):
        idx = build_lca_index(three_blocks_tree)
        assert lca(idx, "bc") == 2
        assert lca(idx, "de") == 5
        assert lca(idx, "b") == 3
        assert lca(idx, "ad") == 0

    @given(trees(max_leaves=12))
    def test_agrees_with_walking_up(self, t):
        idx = build_lca_index(t)
        for u in range(len(t)):
            for v in range(u, len(t)):
                assert idx.pair(u, v) == walk_up_lca(t, [u, v])

    @settings(max_examples=30)
    @given(st.integers(40, 300), st.randoms(use_true_random=False))
    def test_queries_across_many_blocks(self, n, rnd):
        t = random_tree(labels_for(n), random.Random(rnd.random()))
        idx = t.lca_index
        assert len(idx.tour) > 2 * BLOCK
        pairs = [(rnd.randrange(len(t)), rnd.randrange(len(t))) for _ in range(200)]
        for u, v in pairs:
            assert idx.pair(u, v) == walk_up_lca(t, [u, v])
        groups = [rnd.sample(range(len(t)), rnd.randint(1, 6)) for _ in range(100)]
        assert idx.of_groups(groups) == [walk_up_lca(t, g) for g in groups]

    def test_index_is_built_once(self, three_blocks_tree):
        assert three_blocks_tree.lca_index is three_blocks_tree.lca_index

    def test_empty_group(self, three_blocks_tree):
        with pytest.raises(EmptyArgumentError):
            three_blocks_tree.lca_index.of_groups([[1], []])
        assert three_blocks_tree.lca_index.of_groups([]) == []


class TestConvert:
    def test_hierarchy_of(self, three_blocks_tree):
        h = hierarchy_of(three_blocks_tree)
        assert h.inner_clusters() == [frozenset("bc"), frozenset("de")]

    def test_tree_of(self):
        h = validate_hierarchy(["bc", "de"], "abcde", autocomplete=True)
        assert serialize_newick(tree_of(h)) == "(a,(b,c),(d,e));"

    @given(trees())
    def test_tree_and_hierarchy_correspond(self, t):
        again = tree_of(hierarchy_of(t))
        assert same_topology(again, t)
        assert again == t.canonical()

    def test_is_refinement(self):
        coarse = parse_newick("(a,b,(c,d));")
        fine = parse_newick("((a,b),(c,d));")
        assert is_refinement(fine, coarse)
        assert not is_refinement(coarse, fine)
        with pytest.raises(LeafSetMismatchError):
            is_refinement(fine, parse_newick("(a,b,c);"))

    def test_contract_edge(self):
        t = parse_newick("((a,b),(c,d));")
        contracted = contract_edge(t, 1)
        assert serialize_newick(contracted) == "(a,b,(c,d));"
        assert is_refinement(t, contracted)
        with pytest.raises(NotInnerVertexError):
            contract_edge(t, 2)
        with pytest.raises(UnknownVertexError):
            contract_edge(t, t.root)
