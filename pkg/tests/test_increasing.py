import pytest
from hypothesis import given, settings, strategies as st

import bruteforce
from incwtree import graph as wg
from incwtree.errors import IsolatedVertex, NotAPath, NotATree, NotIncreasingTree
from incwtree.graph import build_graph
from incwtree.increasing import (
    RootedIncreasingTree,
    is_increasing_path,
    is_increasing_tree,
    mu,
    special_count_rooted,
    special_vertices_by_paths,
    special_vertices_rooted,
    valid_roots,
)
from strategies import increasing_trees, trees


def test_increasing_path(P4):
    assert is_increasing_path(P4, ["x1", "x2", "x3", "x4"])
    assert not is_increasing_path(P4, ["x1", "x2", "x3", "x4"], strict=True)
    assert not is_increasing_path(P4, ["x4", "x3", "x2", "x1"])
    assert is_increasing_path(P4, ["x3", "x4"], strict=True)
    assert is_increasing_path(P4, ["x2"])


def test_increasing_path_rejects_non_paths(P4):
    with pytest.raises(NotAPath):
        is_increasing_path(P4, ["x1", "x3"])
    with pytest.raises(NotAPath):
        is_increasing_path(P4, ["x1", "x2", "x1"])


def test_valid_roots(P4, P5, STAR, E2, trivial):
    # frozen from bruteforce.roots (exhaustive over all simple paths)
    assert valid_roots(P4) == ("x3", "x4") and bruteforce.roots(P4) == {"x3", "x4"}
    assert valid_roots(P5) == () and bruteforce.roots(P5) == set()
    assert valid_roots(STAR) == ("v", "b") and bruteforce.roots(STAR) == {"v", "b"}
    assert valid_roots(E2) == ("x1", "x2")
    assert valid_roots(trivial) == ("x1",)
    tri = build_graph(["x1", "x2", "x3"], [("x1", "x2", 1), ("x2", "x3", 1), ("x1", "x3", 1)])
    with pytest.raises(NotATree):
        valid_roots(tri)


def test_is_increasing_tree(P4, P5, E2, trivial):
    assert is_increasing_tree(P4)
    assert not is_increasing_tree(P5)
    assert is_increasing_tree(E2)
    assert is_increasing_tree(trivial)
    assert not is_increasing_tree(build_graph(["a", "b", "c"], [("a", "b", 1)]))


def test_rooted_tree_validation(P4):
    RootedIncreasingTree(P4, "x4")
    with pytest.raises(NotIncreasingTree):
        RootedIncreasingTree(P4, "x1")


def test_special_vertices(P4, E2, STAR, trivial):
    T = RootedIncreasingTree(P4, "x4")
    assert special_vertices_rooted(T) == ("x2",) and special_count_rooted(T) == 1
    assert bruteforce.special_rooted(P4, "x4") == {"x2"}
    assert special_count_rooted(RootedIncreasingTree(E2, "x2")) == 0
    assert special_vertices_rooted(RootedIncreasingTree(STAR, "v")) == ()
    assert special_count_rooted(RootedIncreasingTree(trivial, "x1")) == 0


@pytest.mark.parametrize("n", [4, 5, 6, 7, 8])
def test_special_count_on_path_family(n):
    # the path x_{n-1} -> ... -> x_1 of weight-1 edges rooted at x_{n-1}
    vs = [f"x{i + 1}" for i in range(n - 1)]
    T = build_graph(vs, [(vs[i], vs[i + 1], 1) for i in range(n - 2)])
    assert special_count_rooted(RootedIncreasingTree(T, vs[-1])) == n - 3


def test_mu(STAR, E2, P4, trivial):
    assert mu(STAR, "v") == 2
    assert mu(E2, "x1") == 2
    assert mu(P4, "x3") == 2
    with pytest.raises(IsolatedVertex):
        mu(trivial, "x1")


@given(trees(max_n=7))
def test_valid_roots_match_bruteforce(G):
    assert set(valid_roots(G)) == bruteforce.roots(G)


@given(increasing_trees())
def test_every_path_to_a_root_is_increasing(G):
    for v in valid_roots(G):
        for p in bruteforce.all_simple_paths(G):
            if p[-1] == v:
                assert is_increasing_path(G, p)


@given(increasing_trees(), st.data())
def test_connected_subtrees_are_increasing(G, data):
    start = data.draw(st.sampled_from(G.vertices))
    size = data.draw(st.integers(1, G.n))
    grown = [start]
    while len(grown) < size:
        frontier = sorted({y for x in grown for y in wg.neighbors(G, x)} - set(grown))
        if not frontier:
            break
        grown.append(data.draw(st.sampled_from(frontier)))
    assert is_increasing_tree(wg.induced_subgraph(G, grown))


@given(increasing_trees())
def test_no_valley_then_rise(G):
    for p in bruteforce.all_simple_paths(G):
        if len(p) >= 4:
            ws = bruteforce.path_weights(G, p)
            assert not (ws[0] > ws[1] and ws[-2] < ws[-1])


@given(increasing_trees())
def test_parent_edge_rule_matches_path_definition(G):
    for v in valid_roots(G):
        T = RootedIncreasingTree(G, v)
        expect = bruteforce.special_rooted(G, v)
        assert set(special_vertices_rooted(T)) == expect
        assert set(special_vertices_by_paths(T)) == expect
