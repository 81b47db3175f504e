import pytest
from hypothesis import given
from treegen import tree_and_partition

from treepart.coloring import (
    UNCOLORED,
    EdgeColoring,
    RefusalWitness,
    color_edges,
    color_of_edge_naive,
    local_unresolved_vertices,
)
from treepart.core import Partition
from treepart.errors import ForeignEdgeError, LeafSetMismatchError
from treepart.io import parse_newick, parse_partition_line
from treepart.oracle import brute_unresolved


def test_blocks_color_their_own_subtrees(three_blocks_tree):
    p = parse_partition_line("a|b,c|d,e", "abcde")
    gamma = color_edges(three_blocks_tree, p)
    assert isinstance(gamma, EdgeColoring)
    assert gamma.colored_edges() == (3, 4, 6, 7)
    assert gamma.uncolored_edges() == (1, 2, 5)
    assert gamma.color(3) == 1
    assert gamma.color(7) == 2
    assert gamma.color(1) is None
    assert gamma.tops == (1, 2, 5)


def test_crossing_blocks_are_refused():
    t = parse_newick("((a,c),(b,d));")
    witness = color_edges(t, parse_partition_line("a,b|c,d", "abcd"))
    assert witness == RefusalWitness(edge=4, first=0, second=1)
    assert t.leaves_below(4) == frozenset("bd")


def test_star_is_fully_colored_without_refusal():
    t = parse_newick("(a,b,c,d);")
    gamma = color_edges(t, parse_partition_line("a,b|c,d", "abcd"))
    assert isinstance(gamma, EdgeColoring)
    assert gamma.uncolored_edges() == ()
    assert gamma.tops == (0, 0)
    assert local_unresolved_vertices(t, gamma.partition, gamma) == {(0, 0), (0, 1)}


def test_singletons_color_nothing(three_blocks_tree):
    p = Partition.singletons(three_blocks_tree.ground)
    gamma = color_edges(three_blocks_tree, p)
    assert all(c == UNCOLORED for c in gamma.colors)
    assert gamma.painted == 0
    assert not local_unresolved_vertices(three_blocks_tree, p, gamma)


def test_naive_colors():
    t = parse_newick("((a,c),(b,d));")
    p = parse_partition_line("a,b|c,d", "abcd")
    assert all(color_of_edge_naive(t, p, e) for e in t.edges)
    assert color_of_edge_naive(t, p, 4) == {0, 1}
    with pytest.raises(ForeignEdgeError):
        color_of_edge_naive(t, p, t.root)


def test_leaf_sets_must_match(three_blocks_tree):
    with pytest.raises(LeafSetMismatchError):
        color_edges(three_blocks_tree, parse_partition_line("a|b,c", "abc"))


@given(tree_and_partition(max_leaves=10))
def test_agrees_with_path_definition(case):
    t, p = case
    gamma = color_edges(t, p)
    naive = {e: color_of_edge_naive(t, p, e) for e in t.edges}
    if isinstance(gamma, RefusalWitness):
        assert {gamma.first, gamma.second} <= naive[gamma.edge]
        return
    for e, blocks in naive.items():
        assert len(blocks) <= 1
        assert gamma.color(e) == (next(iter(blocks)) if blocks else None)
    assert gamma.painted <= len(t) - 1


@given(tree_and_partition(max_leaves=10))
def test_local_unresolved_vertices_match_closures(case):
    t, p = case
    gamma = color_edges(t, p)
    if isinstance(gamma, RefusalWitness):
        return
    assert set(local_unresolved_vertices(t, p, gamma)) == brute_unresolved(t, p)
