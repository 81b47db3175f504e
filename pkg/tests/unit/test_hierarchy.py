import pytest
from hypothesis import given
from treegen import tree_and_partition

from treepart.core import Hierarchy, UnionFind, closure, validate_hierarchy, validate_partition
from treepart.errors import (
    EmptyArgumentError,
    EmptyClusterError,
    MissingGroundSetError,
    MissingSingletonError,
    OverlappingClustersError,
    UnknownLabelError,
)
from treepart.oracle import brute_closure
from treepart.tree import hierarchy_of


def test_union_find_groups():
    forest = UnionFind(6)
    assert forest.unite(0, 1)
    assert forest.unite(4, 5)
    assert forest.unite(1, 4)
    assert not forest.unite(0, 5)
    assert forest.find(5) == forest.find(0)
    assert forest.groups() == [[0, 1, 4, 5], [2], [3]]
    assert forest.groups([3, 2]) == [[3], [2]]


def test_union_find_long_chain():
    n = 50_000
    forest = UnionFind(n)
    for i in range(n - 1):
        forest.unite(i, i + 1)
    assert len(forest.groups()) == 1


def test_validate_hierarchy_accepts_nested_clusters():
    h = validate_hierarchy(["ab", "abc"], "abcd", autocomplete=True)
    assert len(h) == 4 + 2 + 1
    assert h.children_of("abcd") == (frozenset("abc"), frozenset("d"))
    assert h.children_of("abc") == (frozenset("ab"), frozenset("c"))
    assert h.inner_clusters() == [frozenset("ab"), frozenset("abc")]
    assert frozenset("ab") in h
    assert {"a", "b"} in h
    assert frozenset("bc") not in h


@pytest.mark.parametrize(
    ("clusters", "error"),
    [
        (["", "abc", "a", "b", "c"], EmptyClusterError),
        (["abz", "abc", "a", "b", "c"], UnknownLabelError),
        (["ab", "a", "b", "c"], MissingGroundSetError),
        (["abc", "a", "b"], MissingSingletonError),
        (["ab", "bc", "abc", "a", "b", "c"], OverlappingClustersError),
    ],
)
def test_validate_hierarchy_errors(clusters, error):
    with pytest.raises(error):
        validate_hierarchy(clusters, "abc")


def test_overlap_error_names_both_clusters():
    with pytest.raises(OverlappingClustersError) as info:
        validate_hierarchy(["ab", "bc"], "abc", autocomplete=True)
    assert {info.value.first, info.value.second} == {frozenset("ab"), frozenset("bc")}


def test_from_partition():
    p = validate_partition([["a", "b"], ["c"], ["d", "e"]], "abcde")
    h = Hierarchy.from_partition(p)
    assert frozenset("ab") in h
    assert frozenset("de") in h
    assert h.inner_clusters() == [frozenset("ab"), frozenset("de")]


def test_closure():
    h = validate_hierarchy(["ab", "abc"], "abcd", autocomplete=True)
    assert closure(h, "a") == frozenset("a")
    assert closure(h, "ab") == frozenset("ab")
    assert closure(h, "ac") == frozenset("abc")
    assert closure(h, "ad") == frozenset("abcd")
    with pytest.raises(EmptyArgumentError):
        closure(h, "")
    with pytest.raises(UnknownLabelError):
        closure(h, "az")


@given(tree_and_partition())
def test_closure_matches_intersection_of_containing_clusters(case):
    t, p = case
    h = hierarchy_of(t)
    for block in p.blocks:
        assert closure(h, block) == brute_closure(h.clusters, block)


def test_closure_on_a_deep_hierarchy():
    labels = [f"x{i:04d}" for i in range(2000)]
    nested = [labels[:k] for k in range(2, len(labels))]
    h = validate_hierarchy(nested, labels, autocomplete=True)
    assert h.tree.lca_index is h.tree.lca_index
    assert closure(h, [labels[0], labels[1]]) == frozenset(labels[:2])
    assert closure(h, [labels[0], labels[1500]]) == frozenset(labels[:1501])
    assert closure(h, [labels[-1]]) == frozenset(labels[-1:])
    for k in range(2, len(labels), 97):
        assert len(closure(h, [labels[1], labels[k]])) == k + 1


def test_tree_vertices_match_clusters():
    h = validate_hierarchy(["ab", "abc", "de"], "abcde", autocomplete=True)
    t = h.tree
    assert t.clusters == h.vertex_clusters
    assert hierarchy_of(t) == h
